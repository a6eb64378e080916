#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multijet/deltaop.hpp"
#include "multijet/random.hpp"
#include "test_support.hpp"

using namespace multijet;

namespace {
std::vector<ExactScalar> ints(std::initializer_list<long> v) {
    std::vector<ExactScalar> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

WindowFunction window(std::vector<ExactScalar> values, int order = 0) {
    WindowFunction w;
    w.order = order;
    w.values = std::move(values);
    w.provenance = "w";
    return w;
}

WindowFunction random_window(RandomSource& rng, int order, std::size_t count) {
    return window(rng.rationals(count), order);
}

WindowFunction nonvanishing_window(RandomSource& rng, std::size_t count) {
    std::vector<ExactScalar> v;
    for (std::size_t i = 0; i < count; ++i) v.push_back(rng.nonzero_rational());
    return window(std::move(v));
}

// Delta applied straight from the definition, independent of the library.
std::vector<ExactScalar> naive_delta(const std::vector<ExactScalar>& w, int k, std::size_t offset,
                                     const std::vector<ExactScalar>& xs) {
    std::vector<ExactScalar> out;
    for (std::size_t r = 0; r + 1 < w.size(); ++r) {
        const std::size_t s = offset + r;
        out.push_back(ExactScalar(k + 1) / (xs[s + static_cast<std::size_t>(k) + 1] - xs[s]) * (w[r + 1] - w[r]));
    }
    return out;
}
}  // namespace

TEST_CASE("shift") {
    const WindowFunction t1 = window(ints({1, 3}), 1);
    CHECK(shift(t1).values == ints({3}));
    CHECK(shift(t1).offset == 1);
    CHECK(shift_n(window(ints({1, 2, 3})), 2).values == ints({3}));
    CHECK(shift(window(ints({5, 5, 5}))).values == ints({5, 5}));
    CHECK_THROWS_AS(shift(window(ints({1}))), DomainError);
}

TEST_CASE("delta on the x^2 tableau") {
    const PointedCurveSamples s(make_lattice(ints({0, 1, 2})), ints({0, 1, 4}));
    const auto t = tableau(s);
    const WindowFunction t1 = WindowFunction::from_tableau(t, 1);
    CHECK(delta(t1, s.lattice).values == ints({2}));
    CHECK(delta(WindowFunction::from_samples(s), s.lattice).values == t.row(1));
    CHECK(delta_n(WindowFunction::from_samples(s), s.lattice, 2).values == ints({2}));
    CHECK(delta_n(t1, s.lattice, 0).values == t1.values);
    CHECK(delta(WindowFunction::constant(ExactScalar(7), 0, 3), s.lattice).values == ints({0, 0}));
    CHECK_THROWS_AS(delta_n(WindowFunction::from_samples(s), s.lattice, 3), DomainError);
    // A window reaching past the lattice.
    CHECK_THROWS_AS(delta(window(ints({1, 2, 3}), 1), s.lattice), DomainError);
}

TEST_CASE("tableau compatibility") {
    RandomSource rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const PointedCurveSamples s = rng.samples(rng.integer(1, 8));
        const auto t = tableau(s);
        for (int k = 0; k < t.order(); ++k) {
            CHECK(delta(WindowFunction::from_tableau(t, k), s.lattice).values == t.row(k + 1));
            CHECK(naive_delta(t.row(k), k, 0, s.lattice.points()) == t.row(k + 1));
        }
    }
}

TEST_CASE("polynomial curves are annihilated") {
    RandomSource rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.integer(1, 6);
        const Lattice lat = rng.lattice(n + 1);
        const auto s = sample_curve(rng.polynomial({"x"}, n - 1, 4), lat);
        for (const auto& v : delta_n(WindowFunction::from_samples(s), lat, n).values) CHECK(v.is_zero());
    }
}

TEST_CASE("product rule") {
    const Lattice lat = make_lattice(ints({0, 1, 2}));
    const WindowFunction x = window(lat.points());
    const auto check = product_rule_check(x, x, lat);
    CHECK(check.holds);
    CHECK(check.lhs[0] == ExactScalar(1));
    CHECK(product_rule_check(x, WindowFunction::constant(ExactScalar(3), 0, 3), lat).holds);

    RandomSource rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.integer(1, 6);
        const Lattice l = rng.lattice(n);
        const int k = rng.integer(0, n - 1);
        const auto count = static_cast<std::size_t>(n - k + 1);
        const WindowFunction u = random_window(rng, k, count);
        const WindowFunction v = random_window(rng, k, count);
        CHECK(product_rule_check(u, v, l).holds);
        // Independent two-sided evaluation.
        std::vector<ExactScalar> uv;
        for (std::size_t r = 0; r < count; ++r) uv.push_back(u[r] * v[r]);
        const auto lhs = naive_delta(uv, k, 0, l.points());
        const auto du = naive_delta(u.values, k, 0, l.points());
        const auto dv = naive_delta(v.values, k, 0, l.points());
        for (std::size_t r = 0; r + 1 < count; ++r) CHECK(lhs[r] == du[r] * v[r] + u[r + 1] * dv[r]);
    }
    CHECK_THROWS_AS(product_rule_check(window(ints({1, 2})), window(ints({1, 2, 3})), lat), DomainError);
}

TEST_CASE("quotient rule") {
    const Lattice lat = make_lattice(ints({1, 2, 4}));
    const WindowFunction x = window(lat.points());
    CHECK(quotient_rule_check(x, x, lat).holds);
    CHECK(quotient_rule_check(x, WindowFunction::constant(ExactScalar(1), 0, 3), lat).holds);
    RandomSource rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.integer(1, 6);
        const Lattice l = rng.lattice(n);
        const WindowFunction u = random_window(rng, 0, static_cast<std::size_t>(n + 1));
        const WindowFunction v = nonvanishing_window(rng, static_cast<std::size_t>(n + 1));
        CHECK(quotient_rule_check(u, v, l).holds);
    }
    CHECK_THROWS_WITH_AS(quotient_rule_check(x, window(ints({1, 0, 2})), lat), doctest::Contains("basepoint 1"),
                         DivisionByZero);
}

TEST_CASE("commutation with shifts") {
    RandomSource rng(25);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.integer(2, 7);
        const Lattice lat = rng.lattice(n);
        const int k = rng.integer(0, n - 2);
        CHECK(commute_shift_check(random_window(rng, k, static_cast<std::size_t>(n - k + 1)), lat).holds);
        const auto s = sample_curve(rng.polynomial({"x"}, 4, 4), lat);
        CHECK(commute_shift_check(WindowFunction::from_tableau(tableau(s), k), lat).holds);
    }
    CHECK(commute_shift_check(WindowFunction::constant(ExactScalar(2), 0, 4), make_lattice(ints({0, 1, 3, 7}))).holds);
}

TEST_CASE("Leibniz formula") {
    const Lattice lat = make_lattice(ints({0, 1, 2, 3}));
    const WindowFunction x = window(lat.points());
    const auto xx = multiply(x, x, lat);
    CHECK(leibniz_expand(x, x, lat, 2) == delta_n(xx, lat, 2).values);
    CHECK(leibniz_check(x, x, lat, 1).holds);

    RandomSource rng(26);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.integer(1, 4);
        const int size = n + rng.integer(0, 2);
        const Lattice l = rng.lattice(size);
        const auto count = static_cast<std::size_t>(size + 1);
        const WindowFunction u = random_window(rng, 0, count);
        const WindowFunction v = random_window(rng, 0, count);
        CHECK(leibniz_check(u, v, l, n).holds);
        // Constant v: only the Delta^n u term survives.
        const WindowFunction c = WindowFunction::constant(ExactScalar(5), 0, count);
        const auto expanded = leibniz_expand(u, c, l, n);
        const auto dn = delta_n(u, l, n);
        for (std::size_t r = 0; r < expanded.size(); ++r) CHECK(expanded[r] == ExactScalar(5) * dn[r]);
    }
    // Higher-order windows on evenly spaced lattices.
    for (int trial = 0; trial < 50; ++trial) {
        const int n = rng.integer(1, 4);
        const int k = rng.integer(1, 2);
        const int size = n + k;
        const Lattice l = rng.uniform_lattice(size);
        const auto count = static_cast<std::size_t>(size - k + 1);
        CHECK(leibniz_check(random_window(rng, k, count), random_window(rng, k, count), l, n).holds);
    }
}

TEST_CASE("Leibniz for higher-order windows needs an evenly spaced lattice") {
    // S^k[Delta^{n-k} u] Delta^k[v] multiplies windows of different order; off a
    // uniform lattice the product, and so the expansion, is refused.
    const Lattice lat = make_lattice(ints({0, 1, 3, 7}));
    const WindowFunction u = window(ints({1, 2, 5}), 1);
    const WindowFunction v = window(ints({3, -1, 4}), 1);
    CHECK(leibniz_check(u, v, lat, 1).holds);
    CHECK_THROWS_AS(multiply(u, delta(v, lat), lat), DomainError);
}

TEST_CASE("mixed-order products") {
    const Lattice uniform = make_lattice(ints({0, 2, 4, 6}));
    const WindowFunction a = window(ints({1, 2, 3}), 1);
    const WindowFunction b = window(ints({4, 5, 6}), 0);
    const WindowFunction ab = multiply(a, b, uniform);
    CHECK(ab.uniform_only);
    CHECK(ab.values == ints({4, 10, 18}));
    CHECK_NOTHROW(delta(ab, uniform));
    CHECK_THROWS_WITH_AS(multiply(a, b, make_lattice(ints({0, 1, 3, 4}))), doctest::Contains("non-uniform"), DomainError);
}

TEST_CASE("linearity and the evenly spaced prefactor") {
    RandomSource rng(27);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.integer(1, 6);
        const Lattice lat = rng.lattice(n);
        const int k = rng.integer(0, n - 1);
        const auto count = static_cast<std::size_t>(n - k + 1);
        const WindowFunction u = random_window(rng, k, count);
        const WindowFunction v = random_window(rng, k, count);
        const ExactScalar a = rng.rational();
        const ExactScalar b = rng.rational();
        CHECK(delta(linear_combination(a, u, b, v), lat).values ==
              linear_combination(a, delta(u, lat), b, delta(v, lat)).values);
    }
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.integer(1, 7);
        const Lattice lat = rng.uniform_lattice(n);
        const ExactScalar h = uniform_step(lat);
        for (int k = 0; k < n; ++k) {
            for (int r = 0; r + k + 1 <= n; ++r) {
                CHECK(ExactScalar(k + 1) / (lat[static_cast<std::size_t>(r + k + 1)] - lat[static_cast<std::size_t>(r)]) ==
                      ExactScalar(1) / h);
            }
        }
    }
    CHECK_THROWS_AS(uniform_step(make_lattice(ints({0, 1, 3}))), DomainError);
}
