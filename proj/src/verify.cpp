#include "multijet/verify.hpp"

#include "multijet/coalesce.hpp"
#include "multijet/deltaop.hpp"
#include "multijet/io.hpp"
#include "multijet/jet.hpp"
#include "multijet/jetoracle.hpp"
#include "multijet/multiprolong.hpp"
#include "multijet/normal_form.hpp"
#include "multijet/random.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

namespace multijet {

namespace {

using Failure = std::optional<std::string>;
using TrialFn = std::function<Failure(RandomSource&)>;

struct Check {
    std::string suite;
    std::string name;
    int trials;
    TrialFn fn;
};

std::string join(const std::vector<ExactScalar>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
    return out + ")";
}

Failure identity_failure(const IdentityCheck& c, const std::string& what) {
    if (c.holds) return std::nullopt;
    std::string msg = what + " fails";
    if (c.witness) msg += " at entry " + std::to_string(*c.witness);
    return msg + ": lhs " + join(c.lhs) + " rhs " + join(c.rhs);
}

WindowFunction random_window(RandomSource& rng, int order, std::size_t count, bool nonzero = false) {
    WindowFunction w;
    w.order = order;
    for (std::size_t r = 0; r < count; ++r) w.values.push_back(nonzero ? rng.nonzero_rational() : rng.rational());
    w.provenance = "w";
    return w;
}

VectorField random_field(RandomSource& rng) {
    return VectorField(rng.polynomial({"x", "u"}, 2), rng.polynomial({"x", "u"}, 2));
}

// ---------------------------------------------------------------------------

std::vector<Check> identity_checks(int trials) {
    std::vector<Check> c;
    c.push_back({"identities", "vdet-product", trials, [](RandomSource& rng) -> Failure {
                     const Lattice lat = rng.lattice(rng.integer(0, 5));
                     if (vdet(lat) != vdet_product(lat)) return "elimination " + vdet(lat).to_string() + " vs product " + vdet_product(lat).to_string();
                     return std::nullopt;
                 }});
    c.push_back({"identities", "determinant-identity", trials, [](RandomSource& rng) -> Failure {
                     const int k = rng.integer(1, 5);
                     const Lattice lat = rng.lattice(k);
                     const auto u = rng.rationals(lat.size());
                     const auto v = rng.rationals(lat.size());
                     const ExactScalar d = vdet(lat);
                     for (int i = 0; i <= k; ++i) {
                         for (int j = 0; j <= k; ++j) {
                             if (i == j) continue;
                             const ExactScalar lhs = d * vdet_replace2(lat, u, i, v, j);
                             const ExactScalar rhs = vdet_replace(lat, u, i) * vdet_replace(lat, v, j) -
                                                     vdet_replace(lat, v, i) * vdet_replace(lat, u, j);
                             if (lhs != rhs) return "k=" + std::to_string(k) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
                         }
                     }
                     return std::nullopt;
                 }});
    c.push_back({"identities", "tableau-delta", trials, [](RandomSource& rng) -> Failure {
                     const PointedCurveSamples s = rng.samples(rng.integer(1, 8));
                     const DividedDifferenceTableau t(s);
                     for (int k = 0; k < t.order(); ++k) {
                         if (delta(WindowFunction::from_tableau(t, k), s.lattice).values != t.row(k + 1)) {
                             return "delta(T[" + std::to_string(k) + "]) != T[" + std::to_string(k + 1) + "]";
                         }
                     }
                     return std::nullopt;
                 }});
    c.push_back({"identities", "product-rule", trials, [](RandomSource& rng) -> Failure {
                     const int n = rng.integer(2, 6);
                     const Lattice lat = rng.lattice(n);
                     const int k = rng.integer(0, n - 1);
                     const auto count = static_cast<std::size_t>(n - k + 1);
                     return identity_failure(product_rule_check(random_window(rng, k, count), random_window(rng, k, count), lat),
                                             "product rule");
                 }});
    c.push_back({"identities", "quotient-rule", trials, [](RandomSource& rng) -> Failure {
                     const int n = rng.integer(2, 6);
                     const Lattice lat = rng.lattice(n);
                     const int k = rng.integer(0, n - 1);
                     const auto count = static_cast<std::size_t>(n - k + 1);
                     return identity_failure(
                         quotient_rule_check(random_window(rng, k, count), random_window(rng, k, count, true), lat),
                         "quotient rule");
                 }});
    c.push_back({"identities", "shift-commutation", trials, [](RandomSource& rng) -> Failure {
                     const int n = rng.integer(2, 6);
                     const Lattice lat = rng.lattice(n);
                     const int k = rng.integer(0, n - 2);
                     return identity_failure(
                         commute_shift_check(random_window(rng, k, static_cast<std::size_t>(n - k + 1)), lat),
                         "shift commutation");
                 }});
    c.push_back({"identities", "leibniz", trials, [](RandomSource& rng) -> Failure {
                     // Order-0 windows on arbitrary lattices; higher orders only
                     // where every prefactor is 1/h.
                     const int n = rng.integer(1, 4);
                     const int k = rng.integer(0, 2);
                     const int size = n + k + rng.integer(0, 2);
                     const Lattice lat = k == 0 ? rng.lattice(size) : rng.uniform_lattice(size);
                     const auto count = static_cast<std::size_t>(size - k + 1);
                     return identity_failure(leibniz_check(random_window(rng, k, count), random_window(rng, k, count), lat, n),
                                             "Leibniz n=" + std::to_string(n));
                 }});
    c.push_back({"identities", "delta-linearity", trials, [](RandomSource& rng) -> Failure {
                     const int n = rng.integer(1, 6);
                     const Lattice lat = rng.lattice(n);
                     const int k = rng.integer(0, n - 1);
                     const auto count = static_cast<std::size_t>(n - k + 1);
                     const WindowFunction u = random_window(rng, k, count);
                     const WindowFunction v = random_window(rng, k, count);
                     const ExactScalar a = rng.rational();
                     const ExactScalar b = rng.rational();
                     const auto lhs = delta(linear_combination(a, u, b, v), lat);
                     const auto rhs = linear_combination(a, delta(u, lat), b, delta(v, lat));
                     if (lhs.values != rhs.values) return "Delta not linear";
                     return std::nullopt;
                 }});
    c.push_back({"identities", "evenly-spaced-prefactor", trials, [](RandomSource& rng) -> Failure {
                     const int n = rng.integer(1, 8);
                     const Lattice lat = rng.uniform_lattice(n);
                     const ExactScalar h = uniform_step(lat);
                     for (int k = 0; k < n; ++k) {
                         for (int r = 0; r + k + 1 <= n; ++r) {
                             const auto i = static_cast<std::size_t>(r);
                             if (ExactScalar(k + 1) / (lat[i + static_cast<std::size_t>(k) + 1] - lat[i]) != h.inverse()) {
                                 return "prefactor differs from 1/h at k=" + std::to_string(k);
                             }
                         }
                     }
                     return std::nullopt;
                 }});
    c.push_back({"identities", "divided-difference-agreement", trials, [](RandomSource& rng) -> Failure {
                     const PointedCurveSamples s = rng.samples(rng.integer(0, 6));
                     const auto rec = dd_recursive_prefixes(s);
                     const DividedDifferenceTableau t(s);
                     for (int k = 0; k <= s.lattice.order(); ++k) {
                         const ExactScalar f = ExactScalar::factorial(static_cast<unsigned>(k));
                         const ExactScalar det = multispace_coord(s, k);
                         if (det != f * rec[static_cast<std::size_t>(k)] || det != t.at(k, 0) || det != mu(s, k, k)) {
                             return "order " + std::to_string(k) + ": determinant " + det.to_string() + " recursive " +
                                    (f * rec[static_cast<std::size_t>(k)]).to_string();
                         }
                     }
                     return std::nullopt;
                 }});
    c.push_back({"identities", "newton-reproduces-samples", trials, [](RandomSource& rng) -> Failure {
                     const PointedCurveSamples s = rng.samples(rng.integer(0, 6));
                     const Expr p = newton_interpolant(s);
                     const auto coeffs = interpolant_coefficients(s);
                     for (std::size_t i = 0; i < s.size(); ++i) {
                         ExactScalar mono(0);
                         for (std::size_t j = coeffs.size(); j-- > 0;) mono = mono * s.lattice[i] + coeffs[j];
                         if (eval(p, {{"x", s.lattice[i]}}) != s.uvalues[i] || mono != s.uvalues[i]) {
                             return "interpolant misses sample " + std::to_string(i);
                         }
                     }
                     return std::nullopt;
                 }});
    c.push_back({"identities", "polynomial-exactness", trials, [](RandomSource& rng) -> Failure {
                     const int k = rng.integer(0, 6);
                     const Expr curve = rng.polynomial({"x"}, k, 5);
                     const Lattice lat = rng.lattice(k);
                     const ExactScalar value = multispace_coord(sample_curve(curve, lat), k);
                     const ExactScalar exact = curve_jet(curve, lat[0], k)[static_cast<std::size_t>(k)];
                     if (value != exact) return "u=" + curve.to_string() + " k=" + std::to_string(k) + ": " + value.to_string() + " vs " + exact.to_string();
                     return std::nullopt;
                 }});
    c.push_back({"identities", "confluent-repeated-point", trials, [](RandomSource& rng) -> Failure {
                     const int k = rng.integer(0, 5);
                     const Expr curve = rng.polynomial({"x"}, 7, 5);
                     const ExactScalar x0 = rng.rational();
                     const auto jet = curve_jet(curve, x0, k);
                     const ConfluentSamples cs({ConfluentNode{x0, k + 1, jet}});
                     const ExactScalar want = jet[static_cast<std::size_t>(k)] / ExactScalar::factorial(static_cast<unsigned>(k));
                     if (dd_confluent(cs) != want) return "k=" + std::to_string(k) + " at x=" + x0.to_string();
                     return std::nullopt;
                 }});
    c.push_back({"identities", "confluent-distinct-points", trials, [](RandomSource& rng) -> Failure {
                     const PointedCurveSamples s = rng.samples(rng.integer(0, 6));
                     std::vector<ConfluentNode> nodes;
                     for (std::size_t i = 0; i < s.size(); ++i) nodes.push_back({s.lattice[i], 1, {s.uvalues[i]}});
                     if (dd_confluent(ConfluentSamples(nodes)) != dd_recursive(s)) return "confluent and recursive disagree";
                     return std::nullopt;
                 }});
    return c;
}

std::vector<Check> oracle_checks(int trials) {
    std::vector<Check> c;
    c.push_back({"oracles", "direct-equals-recursive", trials, [](RandomSource& rng) -> Failure {
                     const int n = rng.integer(1, 5);
                     const PointedCurveSamples s = rng.samples(n);
                     const VectorField vf = random_field(rng);
                     const auto rec = infinitesimal_recursive(vf, s, n);
                     for (int k = 0; k <= n; ++k) {
                         const ExactScalar d = infinitesimal_direct(vf, s, k);
                         if (d != rec.phibracket[static_cast<std::size_t>(k)]) {
                             return "xi=" + vf.xi.to_string() + " phi=" + vf.phi.to_string() + " k=" + std::to_string(k) +
                                    ": direct " + d.to_string() + " recursive " + rec.phibracket[static_cast<std::size_t>(k)].to_string();
                         }
                     }
                     return std::nullopt;
                 }});
    c.push_back({"oracles", "finite-action", trials, [](RandomSource& rng) -> Failure {
                     const auto names = named_action_names();
                     const OneParamAction action = named_action(names[static_cast<std::size_t>(rng.integer(0, static_cast<int>(names.size()) - 1))]);
                     const VectorField vf = check_action_consistency(action);
                     const int k = rng.integer(0, 4);
                     const PointedCurveSamples s = rng.samples(k);
                     const ExactScalar fa = finite_action_derivative(action, s, k);
                     const ExactScalar d = infinitesimal_direct(vf, s, k);
                     if (fa != d) return action.name + " k=" + std::to_string(k) + ": finite action " + fa.to_string() + " direct " + d.to_string();
                     return std::nullopt;
                 }});
    c.push_back({"oracles", "scaling-golden", trials, [](RandomSource& rng) -> Failure {
                     const PointedCurveSamples s = rng.samples(rng.integer(5, 6));
                     const VectorField vf = named_field("scaling");
                     const DividedDifferenceTableau t(s);
                     const auto rec = infinitesimal_recursive(vf, s, 5);
                     for (int k = 1; k <= 5; ++k) {
                         const ExactScalar want = ExactScalar(k + 1) * t.at(k, 0);
                         if (infinitesimal_direct(vf, s, k) != want || rec.phibracket[static_cast<std::size_t>(k)] != want) {
                             return "k=" + std::to_string(k);
                         }
                     }
                     return std::nullopt;
                 }});
    c.push_back({"oracles", "vanishing-l0-term", trials, [](RandomSource& rng) -> Failure {
                     const int k = rng.integer(0, 5);
                     const PointedCurveSamples s = rng.samples(k);
                     const VectorField vf = random_field(rng);
                     if (infinitesimal_direct(vf, s, k, true) != infinitesimal_direct(vf, s, k, false)) return "l = 0 term contributes";
                     return std::nullopt;
                 }});
    c.push_back({"oracles", "base-row", trials, [](RandomSource& rng) -> Failure {
                     const PointedCurveSamples s = rng.samples(rng.integer(0, 4));
                     const VectorField vf = random_field(rng);
                     const ExactScalar want = eval(vf.phi, {{"x", s.lattice[0]}, {"u", s.uvalues[0]}});
                     if (infinitesimal_recursive(vf, s, 0).phibracket[0] != want) return "phi_[0] != phi(x0,u0)";
                     return std::nullopt;
                 }});
    c.push_back({"oracles", "jet-three-forms", std::max(1, trials / 4), [](RandomSource& rng) -> Failure {
                     const VectorField vf = random_field(rng);
                     const int n = rng.integer(1, 4);
                     const auto a = jet_prolong_recursive(vf, n);
                     const auto b = jet_prolong_expanded(vf, n);
                     const auto cc = jet_prolong_characteristic(vf, n);
                     for (int k = 0; k <= n; ++k) {
                         if (!equal(a[k], b[k]) || !equal(a[k], cc[k])) {
                             return "xi=" + vf.xi.to_string() + " phi=" + vf.phi.to_string() + " k=" + std::to_string(k);
                         }
                         if (jet_order(a[k]) > k) return "phi_[" + std::to_string(k) + "] depends on higher jets";
                     }
                     return std::nullopt;
                 }});
    c.push_back({"oracles", "jet-linearity", std::max(1, trials / 4), [](RandomSource& rng) -> Failure {
                     const VectorField v1 = random_field(rng);
                     const VectorField v2 = random_field(rng);
                     const ExactScalar a = rng.rational();
                     const ExactScalar b = rng.rational();
                     const int n = rng.integer(1, 3);
                     const auto lhs = jet_prolong_recursive(combine(a, v1, b, v2), n);
                     const auto p1 = jet_prolong_recursive(v1, n);
                     const auto p2 = jet_prolong_recursive(v2, n);
                     for (int k = 0; k <= n; ++k) {
                         if (!equal(lhs[k], Expr::constant(a) * p1[k] + Expr::constant(b) * p2[k])) return "k=" + std::to_string(k);
                     }
                     return std::nullopt;
                 }});
    c.push_back({"oracles", "rotation-jet", 1, [](RandomSource&) -> Failure {
                     const auto p = jet_prolong_expanded(named_field("rotation"), 3);
                     if (!equal(p[1], parse("1 + u1^2"))) return "phi_[1] = " + p[1].to_string();
                     if (!equal(p[2], parse("3*u1*u2"))) return "phi_[2] = " + p[2].to_string();
                     if (!equal(p[3], parse("3*u2^2 + 4*u1*u3"))) return "phi_[3] = " + p[3].to_string();
                     return std::nullopt;
                 }});
    return c;
}

std::vector<Check> coalesce_checks(unsigned bits) {
    std::vector<Check> c;
    const ExactScalar one(1);
    auto report_failure = [](const CoalesceReport& r) -> Failure {
        if (r.pass) return std::nullopt;
        return r.quantity + ": limit " + to_decimal(r.estimate.value, 20) + " oracle " + r.oracle.to_string() +
               (r.estimate.order ? " order " + std::to_string(*r.estimate.order) : "") +
               (r.estimate.divergent ? " divergent" : "");
    };
    for (int k = 0; k <= 4; ++k) {
        c.push_back({"coalesce", "coord-limit x^5 k=" + std::to_string(k), 1, [=](RandomSource&) {
                         return report_failure(verify_coord_limit(parse("x^5"), one, k, CoalescenceSchedule::standard(one, k), bits));
                     }});
    }
    c.push_back({"coalesce", "coord-limit 1/(1+x) k=1", 1, [=](RandomSource&) {
                     const ExactScalar zero(0);
                     return report_failure(verify_coord_limit(parse("1/(1+x)"), zero, 1, CoalescenceSchedule::standard(zero, 1), bits));
                 }});
    for (int k = 1; k <= 3; ++k) {
        c.push_back({"coalesce", "rotation-limit x^5 k=" + std::to_string(k), 1, [=](RandomSource&) {
                         return report_failure(verify_infinitesimal_limit(named_field("rotation"), parse("x^5"), one, k,
                                                                          CoalescenceSchedule::standard(one, k), bits));
                     }});
        c.push_back({"coalesce", "scaling-limit x^5 k=" + std::to_string(k), 1, [=](RandomSource&) {
                         return report_failure(verify_infinitesimal_limit(named_field("scaling"), parse("x^5"), one, k,
                                                                          CoalescenceSchedule::standard(one, k), bits));
                     }});
    }
    c.push_back({"coalesce", "offset-independence rotation k=2", 1, [=](RandomSource&) -> Failure {
                     CoalescenceSchedule other = CoalescenceSchedule::standard(one, 2);
                     other.offsets = {ExactScalar(0), ExactScalar(-1), ExactScalar(3)};
                     const auto a = verify_infinitesimal_limit(named_field("rotation"), parse("x^5"), one, 2,
                                                               CoalescenceSchedule::standard(one, 2), bits);
                     const auto b = verify_infinitesimal_limit(named_field("rotation"), parse("x^5"), one, 2, other, bits);
                     if (auto f = report_failure(a)) return f;
                     if (auto f = report_failure(b)) return f;
                     const BigFloat gap = abs(a.estimate.value - b.estimate.value);
                     if (gap > BigFloat(2e-8) * abs(a.estimate.value)) return "schedules disagree by " + to_decimal(gap, 6);
                     return std::nullopt;
                 }});
    return c;
}

CheckResult run_check(const Check& check, std::uint64_t seed, unsigned threads) {
    CheckResult res{check.suite, check.name, check.trials, 0, {}};
    std::vector<Failure> outcomes(static_cast<std::size_t>(check.trials));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int t = next++; t < check.trials; t = next++) {
            RandomSource rng(trial_seed(seed, check.suite + "/" + check.name, static_cast<std::uint64_t>(t)));
            try {
                outcomes[static_cast<std::size_t>(t)] = check.fn(rng);
            } catch (const std::exception& e) {
                outcomes[static_cast<std::size_t>(t)] = std::string("exception: ") + e.what();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(check.trials)));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (int t = 0; t < check.trials; ++t) {
        const auto& o = outcomes[static_cast<std::size_t>(t)];
        if (!o) {
            ++res.passed;
        } else if (res.failures.size() < 3) {
            res.failures.push_back("trial " + std::to_string(t) + ": " + *o);
        }
    }
    return res;
}

}  // namespace

std::vector<std::string> suite_names() { return {"all", "identities", "oracles", "coalesce"}; }

bool VerifyReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

VerifyReport run_verify(const VerifyConfig& config) {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), config.suite) == names.end()) {
        throw Error("unknown suite '" + config.suite + "'");
    }
    if (config.trials < 1) throw Error("trial count must be positive");
    std::vector<Check> checks;
    const bool all = config.suite == "all";
    auto append = [&](std::vector<Check> more) {
        for (auto& c : more) checks.push_back(std::move(c));
    };
    if (all || config.suite == "identities") append(identity_checks(config.trials));
    if (all || config.suite == "oracles") append(oracle_checks(config.trials));
    if (all || config.suite == "coalesce") append(coalesce_checks(config.precision_bits));

    const unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    VerifyReport report;
    report.config = config;
    for (const auto& c : checks) report.checks.push_back(run_check(c, config.seed, threads));
    return report;
}

nlohmann::ordered_json to_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.config.suite;
    j["seed"] = r.config.seed;
    j["trials"] = r.config.trials;
    j["pass"] = r.pass();
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json e;
        e["suite"] = c.suite;
        e["name"] = c.name;
        e["trials"] = c.trials;
        e["passed"] = c.passed;
        e["pass"] = c.pass();
        e["failures"] = c.failures;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace multijet
