#pragma once

// The discrete derivative Delta/Delta x on lattice windows, the shift S, and
// the product / quotient / Leibniz calculus they satisfy.

#include "multijet/lattice.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace multijet {

class DomainError : public Error {
public:
    using Error::Error;
};

/// Values of an expression that depends on the window {x_s, ..., x_{s+k}},
/// one per basepoint s = offset, offset + 1, .... Entry r lives on the
/// window with basepoint offset + r.
struct WindowFunction {
    int order = 0;
    std::size_t offset = 0;
    std::vector<ExactScalar> values;
    std::string provenance;
    /// Set when the window came from a mixed-order product, which only has a
    /// discrete derivative on evenly spaced lattices.
    bool uniform_only = false;

    std::size_t size() const { return values.size(); }
    const ExactScalar& operator[](std::size_t r) const { return values[r]; }

    /// Row k of a divided-difference tableau, as an order-k window.
    static WindowFunction from_tableau(const DividedDifferenceTableau& t, int k, std::string provenance = "");
    /// Pointwise values u_r (order 0).
    static WindowFunction from_samples(const PointedCurveSamples& s, std::string provenance = "u");
    /// The constant c on `count` order-k windows.
    static WindowFunction constant(const ExactScalar& c, int order, std::size_t count);
};

/// (S w)[r] = w[r+1]; the result lives one window to the right.
WindowFunction shift(const WindowFunction& w);
WindowFunction shift_n(const WindowFunction& w, int times);

/// Delta/Delta x [w](x_s) = (k+1) / (x_{s+k+1} - x_s) * (w[s+1] - w[s]); order k -> k+1.
WindowFunction delta(const WindowFunction& w, const Lattice& lat);
WindowFunction delta_n(const WindowFunction& w, const Lattice& lat, int times);

/// Entrywise product of windows with the same order and offset. Windows of
/// different order are rejected unless the lattice is evenly spaced, where
/// every prefactor (k+1)/(x_{s+k+1} - x_s) collapses to 1/h.
WindowFunction multiply(const WindowFunction& u, const WindowFunction& v, const Lattice& lat);
WindowFunction divide(const WindowFunction& u, const WindowFunction& v);
/// a*u + b*v for windows of the same order and offset.
WindowFunction linear_combination(const ExactScalar& a, const WindowFunction& u, const ExactScalar& b,
                                  const WindowFunction& v);

/// Outcome of an identity check; `witness` is the first failing entry.
struct IdentityCheck {
    bool holds = true;
    std::optional<std::size_t> witness;
    std::vector<ExactScalar> lhs;
    std::vector<ExactScalar> rhs;
    explicit operator bool() const { return holds; }
};

/// Delta[uv] = Delta[u] v + S[u] Delta[v], entrywise.
IdentityCheck product_rule_check(const WindowFunction& u, const WindowFunction& v, const Lattice& lat);
/// Delta[u/v] = (v Delta[u] - u Delta[v]) / (v S[v]).
IdentityCheck quotient_rule_check(const WindowFunction& u, const WindowFunction& v, const Lattice& lat);
/// Delta[S w] on Gamma_{r+1} equals S[Delta w] on Gamma_r.
IdentityCheck commute_shift_check(const WindowFunction& w, const Lattice& lat);

/// sum_k C(n,k) S^k[Delta^{n-k} u] Delta^k[v], evaluated entrywise.
std::vector<ExactScalar> leibniz_expand(const WindowFunction& u, const WindowFunction& v, const Lattice& lat, int n);
/// Compares leibniz_expand against delta_n of the product.
IdentityCheck leibniz_check(const WindowFunction& u, const WindowFunction& v, const Lattice& lat, int n);

/// The spacing h of an evenly spaced lattice; throws DomainError otherwise.
ExactScalar uniform_step(const Lattice& lat);

}  // namespace multijet
