#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multijet/jetoracle.hpp"
#include "multijet/lattice.hpp"
#include "multijet/normal_form.hpp"
#include "multijet/random.hpp"
#include "test_support.hpp"

using namespace multijet;

namespace {
std::vector<ExactScalar> ints(std::initializer_list<long> v) {
    std::vector<ExactScalar> out;
    for (long x : v) out.emplace_back(x);
    return out;
}
}  // namespace

TEST_CASE("lattice construction") {
    CHECK(make_lattice(ints({0, 1, 2})).order() == 2);
    CHECK(make_lattice(ints({5})).order() == 0);
    CHECK_THROWS_WITH_AS(make_lattice(ints({0, 1, 0})), doctest::Contains("indices 0 and 2"), LatticeError);
    CHECK(make_lattice(ints({2, 0, 1})).points() == ints({2, 0, 1}));
    CHECK(make_lattice(ints({0, 2, 4, 6})).is_uniform());
    CHECK_FALSE(make_lattice(ints({0, 1, 3})).is_uniform());
}

TEST_CASE("Vandermonde determinants") {
    CHECK(vdet(make_lattice(ints({0, 1, 2}))) == ExactScalar(2));
    CHECK(vdet(make_lattice(ints({3}))) == ExactScalar(1));
    RandomSource rng(1);
    for (int t = 0; t < 40; ++t) {
        const Lattice lat = rng.lattice(rng.integer(0, 5));
        CHECK(vdet(lat) == vdet_product(lat));
        CHECK(vdet(lat) == testsupport::permutation_det(testsupport::vandermonde(lat.points())));
    }
}

TEST_CASE("replaced-column determinants") {
    const Lattice lat = make_lattice(ints({0, 1, 2}));
    CHECK(vdet_replace(lat, ints({0, 1, 4}), 2) == ExactScalar(2));
    CHECK(vdet_replace(lat, ints({1, 1, 1}), 0) == vdet(lat));
    CHECK(vdet_replace(lat, ints({0, 1, 2}), 1) == vdet(lat));
    CHECK(vdet_replace(lat, ints({5, 5, 5}), 1) == ExactScalar(0));
    CHECK_THROWS_AS(vdet_replace(lat, ints({1, 2}), 1), LatticeError);
    CHECK_THROWS_AS(vdet_replace(lat, ints({1, 2, 3}), 3), LatticeError);

    CHECK(vdet_replace2(lat, ints({1, 1, 1}), 0, ints({0, 1, 2}), 1) == vdet(lat));
    CHECK(vdet_replace2(lat, ints({7, 8, 9}), 1, ints({7, 8, 9}), 2) == ExactScalar(0));
    CHECK_THROWS_AS(vdet_replace2(lat, ints({1, 2, 3}), 1, ints({1, 2, 3}), 1), LatticeError);

    RandomSource rng(2);
    for (int t = 0; t < 30; ++t) {
        const Lattice l = rng.lattice(rng.integer(1, 4));
        const auto u = rng.rationals(l.size());
        const auto v = rng.rationals(l.size());
        const int i = rng.integer(0, l.order());
        int j = rng.integer(0, l.order() - 1);
        if (j >= i) ++j;
        auto m = testsupport::vandermonde(l.points());
        for (std::size_t r = 0; r < l.size(); ++r) {
            m[r][static_cast<std::size_t>(i)] = u[r];
            m[r][static_cast<std::size_t>(j)] = v[r];
        }
        CHECK(vdet_replace2(l, u, i, v, j) == testsupport::permutation_det(m));
    }
}

TEST_CASE("recursive divided differences") {
    const PointedCurveSamples s(make_lattice(ints({0, 1, 2})), ints({0, 1, 4}));
    CHECK(dd_recursive(s) == ExactScalar(1));
    CHECK(dd_recursive(PointedCurveSamples(make_lattice(ints({3})), ints({7}))) == ExactScalar(7));
    // Reordering the points leaves the divided difference unchanged.
    CHECK(dd_recursive(PointedCurveSamples(make_lattice(ints({2, 0, 1})), ints({4, 0, 1}))) == ExactScalar(1));
    RandomSource rng(3);
    for (int t = 0; t < 60; ++t) {
        const PointedCurveSamples r = rng.samples(rng.integer(0, 6));
        CHECK(dd_recursive(r) == testsupport::lagrange_dd(r.lattice.points(), r.uvalues));
    }
}

TEST_CASE("confluent divided differences") {
    const ConfluentSamples cubic({ConfluentNode{ExactScalar(0), 4, ints({0, 0, 0, 6})}});
    CHECK(dd_confluent(cubic) == ExactScalar(1));  // u = x^3, 6/3!
    const ConfluentSamples mixed({ConfluentNode{ExactScalar(0), 1, ints({0})}, ConfluentNode{ExactScalar(1), 2, ints({1, 2})}});
    CHECK(dd_confluent(mixed) == ExactScalar(1));  // u = x^2 on (0, 1, 1)
    CHECK_THROWS_WITH_AS(ConfluentSamples({ConfluentNode{ExactScalar(1), 2, ints({1})}}),
                         doctest::Contains("missing derivative data"), LatticeError);
    CHECK_THROWS_AS(ConfluentSamples({ConfluentNode{ExactScalar(1), 1, ints({1})}, ConfluentNode{ExactScalar(1), 1, ints({2})}}),
                    LatticeError);
    const Expr h = hermite_interpolant(mixed);
    CHECK(equal(h, parse("x^2")));
}

TEST_CASE("Newton interpolation") {
    const PointedCurveSamples s(make_lattice(ints({0, 1, 2})), ints({0, 1, 4}));
    CHECK(canonical_string(newton_interpolant(s)) == "x^2");
    CHECK(interpolant_coefficients(s) == ints({0, 0, 1}));
    CHECK(canonical_string(newton_interpolant(PointedCurveSamples(make_lattice(ints({4})), ints({9})))) == "9");
    const PointedCurveSamples line(make_lattice(ints({1, 3})), ints({2, 2}));
    CHECK(canonical_string(newton_interpolant(line)) == "2");
}

TEST_CASE("multispace coordinates and mu") {
    const PointedCurveSamples s(make_lattice(ints({0, 1, 2})), ints({0, 1, 4}));
    CHECK(multispace_coord(s, 2) == ExactScalar(2));
    CHECK(multispace_coord(s, 0) == ExactScalar(0));
    CHECK(multispace_coord(s, 1) == ExactScalar(1));
    CHECK(mu(s, 2, 2) == multispace_coord(s, 2));
    CHECK(mu(s, 2, 0) == ExactScalar(0));
    CHECK(mu(s, 2, 1) == ExactScalar(0));
    // mu^(k)_l = k! times the x^l coefficient of the interpolant.
    RandomSource rng(4);
    for (int t = 0; t < 40; ++t) {
        const PointedCurveSamples r = rng.samples(rng.integer(0, 5));
        const int k = r.lattice.order();
        const auto coeffs = interpolant_coefficients(r);
        for (int l = 0; l <= k; ++l) {
            CHECK(mu(r, k, l) == ExactScalar::factorial(static_cast<unsigned>(k)) * coeffs[static_cast<std::size_t>(l)]);
        }
        CHECK(multispace_coord(r, k) == testsupport::window_coord(r.lattice.points(), r.uvalues, k));
    }
    CHECK_THROWS_AS(mu(s, 2, 3), LatticeError);
    CHECK_THROWS_AS(multispace_coord(s, 3), LatticeError);
}

TEST_CASE("divided-difference tableau") {
    const PointedCurveSamples s(make_lattice(ints({0, 1, 2})), ints({0, 1, 4}));
    const auto t = tableau(s);
    CHECK(t.row(0) == ints({0, 1, 4}));
    CHECK(t.row(1) == ints({1, 3}));
    CHECK(t.row(2) == ints({2}));
    RandomSource rng(6);
    for (int trial = 0; trial < 30; ++trial) {
        const PointedCurveSamples r = rng.samples(rng.integer(0, 6));
        const auto tb = tableau(r);
        for (int k = 0; k <= tb.order(); ++k) {
            for (int b = 0; b + k <= tb.order(); ++b) {
                CHECK(tb.at(k, b) == testsupport::window_coord(r.lattice.points(), r.uvalues, k, b));
            }
        }
    }
}

TEST_CASE("polynomial exactness") {
    RandomSource rng(8);
    for (int t = 0; t < 40; ++t) {
        const int k = rng.integer(0, 5);
        const Expr u = rng.polynomial({"x"}, k, 5);
        const Lattice lat = rng.lattice(k);
        CHECK(multispace_coord(sample_curve(u, lat), k) == curve_jet(u, ExactScalar(0), k)[static_cast<std::size_t>(k)]);
    }
}
