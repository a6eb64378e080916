#pragma once

// Coalescent limits: lattices x + t_i h_m shrinking to x, exact evaluation at
// each h_m, and Richardson extrapolation in multiprecision floating point.

#include "multijet/jetoracle.hpp"
#include "multijet/lattice.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>
#include <vector>

namespace multijet {

using BigFloat = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 128;
inline constexpr unsigned kMinPrecisionBits = 80;

struct CoalescenceSchedule {
    ExactScalar x;
    std::vector<ExactScalar> offsets;  // t_0 = 0, t_1, ..., t_n
    ExactScalar h0 = ExactScalar(1) / ExactScalar(8);
    int steps = 12;                    // M; h_m = h0 / 2^m for m = 0..M

    /// Offsets 0, 1, ..., n.
    static CoalescenceSchedule standard(const ExactScalar& x, int n, ExactScalar h0 = ExactScalar(1) / ExactScalar(8),
                                        int steps = 12);
    /// Throws Error unless offsets are distinct, h0 > 0 and M >= 3.
    void validate() const;
    std::vector<ExactScalar> scales() const;
};

/// Lattice m has the points x + t_i h_m.
std::vector<Lattice> coalescent_lattices(const CoalescenceSchedule& sched);

struct LimitEstimate {
    BigFloat value;                // fully iterated Richardson limit
    BigFloat first_sweep;          // 2 v_M - v_(M-1), first-order elimination only
    BigFloat raw;                  // last unaccelerated value
    std::optional<double> order;   // empty when the sequence is exact
    std::vector<BigFloat> residuals;
    bool exact = false;            // every value equal: no limit needed
    bool divergent = false;
    int onset = 0;                 // residuals decrease monotonically from here on
    unsigned precision_bits = kDefaultPrecisionBits;
};

/// Richardson extrapolation of a sequence at h_m = h0 / 2^m. The first sweep
/// R_m = 2 v_(m+1) - v_m removes the O(h) term; further sweeps remove h^2,
/// h^3, ... in turn. Needs at least 4 values.
LimitEstimate estimate_limit(const std::vector<BigFloat>& values, unsigned precision_bits = kDefaultPrecisionBits);
LimitEstimate estimate_limit(const std::vector<ExactScalar>& values, unsigned precision_bits = kDefaultPrecisionBits);

BigFloat to_bigfloat(const ExactScalar& q, unsigned precision_bits);
/// Decimal rendering with enough digits for the precision.
std::string to_decimal(const BigFloat& f, int digits = 30);

struct Tolerance {
    double absolute = 1e-8;
    double relative = 1e-8;
    /// Empirical gate: one-sided divided differences converge at first order.
    double min_order = 0.9;
};

struct CoalesceReport {
    std::string quantity;
    std::vector<ExactScalar> h;
    std::vector<ExactScalar> values;
    LimitEstimate estimate;
    ExactScalar oracle;
    Tolerance tolerance;
    bool pass = false;
    std::string note;
};

/// clim u^(k)_(k) against the k-th derivative of the curve at x.
CoalesceReport verify_coord_limit(const Expr& curve, const ExactScalar& x, int k, const CoalescenceSchedule& sched,
                                  unsigned precision_bits = kDefaultPrecisionBits, Tolerance tol = {});

/// clim phi^(k)_[k] against the jet prolongation evaluated on the jet of the curve.
CoalesceReport verify_infinitesimal_limit(const VectorField& vf, const Expr& curve, const ExactScalar& x, int k,
                                          const CoalescenceSchedule& sched,
                                          unsigned precision_bits = kDefaultPrecisionBits, Tolerance tol = {});

}  // namespace multijet
