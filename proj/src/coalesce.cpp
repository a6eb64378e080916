#include "multijet/coalesce.hpp"

#include "multijet/multiprolong.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <mutex>
#include <set>
#include <sstream>

namespace multijet {

namespace {

// Boost keeps one process-wide default precision for mpfr_float, so the
// float stage runs under a lock with the requested precision installed.
std::mutex& precision_mutex() {
    static std::mutex m;
    return m;
}

class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits) : lock_(precision_mutex()), saved_(BigFloat::default_precision()) {
        if (bits < kMinPrecisionBits) {
            throw Error("precision " + std::to_string(bits) + " bits is below the minimum of " +
                        std::to_string(kMinPrecisionBits));
        }
        BigFloat::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1);
    }
    ~PrecisionScope() { BigFloat::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    std::lock_guard<std::mutex> lock_;
    unsigned saved_;
};

BigFloat make_float(const ExactScalar& q, unsigned bits) {
    BigFloat f;
    mpfr_set_prec(f.backend().data(), bits);
    mpfr_set_q(f.backend().data(), q.raw().get_mpq_t(), MPFR_RNDN);
    return f;
}

LimitEstimate estimate_locked(const std::vector<BigFloat>& v, unsigned bits) {
    if (v.size() < 4) throw Error("limit estimation needs at least 4 values, got " + std::to_string(v.size()));
    LimitEstimate est;
    est.precision_bits = bits;
    const std::size_t n = v.size();
    est.raw = v.back();
    est.exact = std::all_of(v.begin(), v.end(), [&](const BigFloat& a) { return a == v.front(); });
    if (est.exact) {
        est.value = v.front();
        est.first_sweep = v.front();
        est.residuals.assign(n, BigFloat(0));
        return est;
    }
    est.first_sweep = 2 * v[n - 1] - v[n - 2];
    // Iterated sweeps: column j removes the h^j term, R_j = (2^j R_(j-1)(h/2) - R_(j-1)(h)) / (2^j - 1).
    std::vector<BigFloat> column = v;
    for (std::size_t j = 1; j < n; ++j) {
        const BigFloat p = pow(BigFloat(2), static_cast<int>(j));
        for (std::size_t m = 0; m + j < n; ++m) column[m] = (p * column[m + 1] - column[m]) / (p - 1);
    }
    est.value = column[0];
    for (const auto& a : v) est.residuals.push_back(abs(a - est.value));

    // Order from successive residual ratios over the latter half of the run.
    std::vector<double> orders;
    for (std::size_t m = n / 2; m + 1 < n; ++m) {
        if (est.residuals[m] == 0 || est.residuals[m + 1] == 0) continue;
        orders.push_back(static_cast<double>(log2(est.residuals[m] / est.residuals[m + 1])));
    }
    if (!orders.empty()) {
        std::sort(orders.begin(), orders.end());
        est.order = orders[orders.size() / 2];
    } else {
        est.order = 0.0;
    }

    // Divergence: the gaps between successive values keep growing.
    std::vector<BigFloat> gaps;
    for (std::size_t m = 0; m + 1 < n; ++m) gaps.push_back(abs(v[m + 1] - v[m]));
    int growing = 0;
    for (std::size_t m = gaps.size() - 3; m + 1 < gaps.size(); ++m) {
        if (gaps[m + 1] > gaps[m]) ++growing;
    }
    est.divergent = growing >= 2 && gaps.back() > gaps[gaps.size() - 2];

    est.onset = static_cast<int>(n) - 1;
    while (est.onset > 0 && est.residuals[static_cast<std::size_t>(est.onset - 1)] >=
                                est.residuals[static_cast<std::size_t>(est.onset)]) {
        --est.onset;
    }
    return est;
}

bool within(const BigFloat& value, const ExactScalar& oracle, const Tolerance& tol, unsigned bits) {
    const BigFloat o = make_float(oracle, bits);
    const BigFloat bound = std::max(BigFloat(tol.absolute), BigFloat(tol.relative) * abs(o));
    return abs(value - o) <= bound;
}

CoalesceReport run(const std::string& quantity, const CoalescenceSchedule& sched, unsigned bits, Tolerance tol,
                   const ExactScalar& oracle, const std::function<ExactScalar(const Lattice&)>& at) {
    sched.validate();
    CoalesceReport rep;
    rep.quantity = quantity;
    rep.h = sched.scales();
    rep.oracle = oracle;
    rep.tolerance = tol;
    const std::vector<Lattice> lats = coalescent_lattices(sched);
    std::vector<std::future<ExactScalar>> jobs;
    for (const auto& lat : lats) jobs.push_back(std::async(std::launch::async, at, std::cref(lat)));
    for (std::size_t m = 0; m < jobs.size(); ++m) {
        try {
            rep.values.push_back(jobs[m].get());
        } catch (const DivisionByZero& e) {
            for (std::size_t j = m + 1; j < jobs.size(); ++j) jobs[j].wait();
            throw DivisionByZero("singular evaluation at h = " + rep.h[m].to_string() + ": " + e.what());
        }
    }
    rep.estimate = estimate_limit(rep.values, bits);
    const bool order_ok = rep.estimate.exact || (rep.estimate.order && *rep.estimate.order >= tol.min_order);
    {
        PrecisionScope scope(bits);
        rep.pass = !rep.estimate.divergent && order_ok && within(rep.estimate.value, oracle, tol, bits);
    }
    rep.note = "order gate >= " + std::to_string(tol.min_order).substr(0, 3) + " is an empirical threshold";
    return rep;
}

}  // namespace

CoalescenceSchedule CoalescenceSchedule::standard(const ExactScalar& x, int n, ExactScalar h0, int steps) {
    CoalescenceSchedule s;
    s.x = x;
    for (int i = 0; i <= n; ++i) s.offsets.emplace_back(i);
    s.h0 = std::move(h0);
    s.steps = steps;
    return s;
}

void CoalescenceSchedule::validate() const {
    if (offsets.empty()) throw Error("schedule needs at least one offset");
    std::set<ExactScalar> seen(offsets.begin(), offsets.end());
    if (seen.size() != offsets.size()) throw Error("schedule offsets must be distinct");
    if (h0.sign() <= 0) throw Error("h0 must be positive");
    if (steps < 3) throw Error("a schedule needs at least 3 halvings");
}

std::vector<ExactScalar> CoalescenceSchedule::scales() const {
    std::vector<ExactScalar> out;
    ExactScalar h = h0;
    for (int m = 0; m <= steps; ++m) {
        out.push_back(h);
        h /= ExactScalar(2);
    }
    return out;
}

std::vector<Lattice> coalescent_lattices(const CoalescenceSchedule& sched) {
    sched.validate();
    std::vector<Lattice> out;
    for (const auto& h : sched.scales()) {
        std::vector<ExactScalar> pts;
        for (const auto& t : sched.offsets) pts.push_back(sched.x + t * h);
        out.push_back(Lattice::make(std::move(pts)));
    }
    return out;
}

BigFloat to_bigfloat(const ExactScalar& q, unsigned precision_bits) { return make_float(q, precision_bits); }

std::string to_decimal(const BigFloat& f, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << f;
    return os.str();
}

LimitEstimate estimate_limit(const std::vector<BigFloat>& values, unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    return estimate_locked(values, precision_bits);
}

LimitEstimate estimate_limit(const std::vector<ExactScalar>& values, unsigned precision_bits) {
    PrecisionScope scope(precision_bits);
    std::vector<BigFloat> v;
    for (const auto& q : values) v.push_back(make_float(q, precision_bits));
    LimitEstimate est = estimate_locked(v, precision_bits);
    if (!values.empty() && std::all_of(values.begin(), values.end(), [&](const ExactScalar& a) { return a == values.front(); })) {
        est.exact = true;
        est.order.reset();
        est.divergent = false;
    }
    return est;
}

CoalesceReport verify_coord_limit(const Expr& curve, const ExactScalar& x, int k, const CoalescenceSchedule& sched,
                                  unsigned precision_bits, Tolerance tol) {
    if (k < 0 || static_cast<std::size_t>(k) >= sched.offsets.size()) {
        throw Error("order " + std::to_string(k) + " needs " + std::to_string(k + 1) + " schedule offsets");
    }
    ExactScalar oracle;
    try {
        oracle = curve_jet(curve, x, k)[static_cast<std::size_t>(k)];
    } catch (const DivisionByZero& e) {
        throw DivisionByZero("singular evaluation at the basepoint x = " + x.to_string() + ": " + e.what());
    }
    return run("u^(" + std::to_string(k) + ")_(" + std::to_string(k) + ")", sched, precision_bits, tol, oracle,
               [&](const Lattice& lat) { return multispace_coord(sample_curve(curve, lat), k); });
}

CoalesceReport verify_infinitesimal_limit(const VectorField& vf, const Expr& curve, const ExactScalar& x, int k,
                                          const CoalescenceSchedule& sched, unsigned precision_bits, Tolerance tol) {
    if (k < 0 || static_cast<std::size_t>(k) >= sched.offsets.size()) {
        throw Error("order " + std::to_string(k) + " needs " + std::to_string(k + 1) + " schedule offsets");
    }
    ExactScalar oracle;
    try {
        const Expr target = jet_prolong_recursive(vf, k)[k];
        oracle = eval_on_jet(target, x, curve_jet(curve, x, k));
    } catch (const DivisionByZero& e) {
        throw DivisionByZero("singular evaluation at the basepoint x = " + x.to_string() + ": " + e.what());
    }
    return run("phi^(" + std::to_string(k) + ")_[" + std::to_string(k) + "]", sched, precision_bits, tol, oracle,
               [&](const Lattice& lat) {
                   const PointedCurveSamples s = sample_curve(curve, lat);
                   return infinitesimal_recursive(vf, s.prefix(k), k).phibracket[static_cast<std::size_t>(k)];
               });
}

}  // namespace multijet
