#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multijet/coalesce.hpp"
#include "multijet/jetoracle.hpp"

#include <cmath>

using namespace multijet;

namespace {

ExactScalar q(long p, long d = 1) { return ExactScalar(p) / ExactScalar(d); }

double to_double(const BigFloat& f) { return f.convert_to<double>(); }

std::vector<ExactScalar> sequence(int count, const std::function<ExactScalar(const ExactScalar&)>& f) {
    std::vector<ExactScalar> out;
    ExactScalar h = q(1, 8);
    for (int m = 0; m < count; ++m, h = h / ExactScalar(2)) out.push_back(f(h));
    return out;
}

// k-th derivative straight from repeated symbolic differentiation.
ExactScalar derivative_at(const Expr& curve, int k, const ExactScalar& x) {
    Expr d = curve;
    for (int i = 0; i < k; ++i) d = partial(d, "x");
    return eval(d, Binding{{"x", x}});
}

}  // namespace

TEST_CASE("schedules and lattices") {
    CoalescenceSchedule s{q(1), {q(0), q(1)}, q(1, 2), 3};
    const auto lats = coalescent_lattices(s);
    REQUIRE(lats.size() == 4);
    CHECK(lats[0].points() == std::vector<ExactScalar>{q(1), q(3, 2)});
    CHECK(lats[1].points() == std::vector<ExactScalar>{q(1), q(5, 4)});
    CHECK(lats[2].points() == std::vector<ExactScalar>{q(1), q(9, 8)});
    for (const auto& l : coalescent_lattices(CoalescenceSchedule::standard(q(0), 2))) CHECK(l.is_uniform());
    CoalescenceSchedule odd{q(0), {q(0), q(1), q(3)}};
    for (const auto& l : coalescent_lattices(odd)) CHECK_FALSE(l.is_uniform());
    CHECK_THROWS_AS((CoalescenceSchedule{q(0), {q(0), q(0)}}).validate(), Error);
    CHECK_THROWS_AS((CoalescenceSchedule{q(0), {q(0), q(1)}, q(0)}).validate(), Error);
    CHECK_THROWS_AS((CoalescenceSchedule{q(0), {q(0), q(1)}, q(1), 2}).validate(), Error);
}

TEST_CASE("Richardson on a closed-form sequence") {
    // ((1+h)^3 - 1)/h = 3 + 3h + h^2.
    const auto values = sequence(13, [](const ExactScalar& h) { return ExactScalar(3) + ExactScalar(3) * h + h * h; });
    const LimitEstimate e = estimate_limit(values);
    CHECK_FALSE(e.exact);
    CHECK_FALSE(e.divergent);
    CHECK(std::abs(to_double(e.value) - 3.0) < 1e-20);
    CHECK(std::abs(to_double(e.first_sweep) - 3.0) < 1e-6);
    REQUIRE(e.order.has_value());
    CHECK(*e.order == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("constant and divergent sequences") {
    const LimitEstimate c = estimate_limit(std::vector<ExactScalar>(8, q(7, 3)));
    CHECK(c.exact);
    CHECK_FALSE(c.order.has_value());
    CHECK(to_double(c.value) == doctest::Approx(7.0 / 3.0));
    for (const auto& r : c.residuals) CHECK(r == 0);

    const LimitEstimate d = estimate_limit(sequence(12, [](const ExactScalar& h) { return ExactScalar(1) / h; }));
    CHECK(d.divergent);
    CHECK_THROWS_AS(estimate_limit(std::vector<ExactScalar>(3, q(1))), Error);
}

TEST_CASE("precision floor") {
    CHECK_THROWS_AS(estimate_limit(std::vector<ExactScalar>(5, q(1)), 64), Error);
    const auto e = estimate_limit(std::vector<ExactScalar>(5, q(1)), 200);
    CHECK(e.precision_bits == 200);
}

TEST_CASE("coordinate limits") {
    const Expr x5 = parse("x^5");
    for (int k = 0; k <= 4; ++k) {
        const auto r = verify_coord_limit(x5, q(1), k, CoalescenceSchedule::standard(q(1), k));
        CHECK(r.oracle == derivative_at(x5, k, q(1)));
        CHECK_MESSAGE(r.pass, "k=", k, " ", r.note);
    }
    CHECK(verify_coord_limit(x5, q(1), 3, CoalescenceSchedule::standard(q(1), 3)).oracle == ExactScalar(60));
    const auto exact = verify_coord_limit(parse("2*x^3 - x"), q(1, 3), 3, CoalescenceSchedule::standard(q(1, 3), 3));
    CHECK(exact.estimate.exact);
    CHECK(exact.pass);
    for (const auto& v : exact.values) CHECK(v == ExactScalar(12));
    const auto rational = verify_coord_limit(parse("1/(1+x)"), q(0), 1, CoalescenceSchedule::standard(q(0), 1));
    CHECK(rational.oracle == ExactScalar(-1));
    CHECK(rational.pass);
    CHECK_THROWS_AS(verify_coord_limit(parse("1/(x-1)"), q(1), 1, CoalescenceSchedule::standard(q(1), 1)), Error);
}

TEST_CASE("infinitesimal limits") {
    const VectorField rotation = VectorField::parse("-u", "x");
    const Expr x5 = parse("x^5");
    const long expected[] = {1, 26, 300, 2400};
    for (int k = 1; k <= 3; ++k) {
        const auto r = verify_infinitesimal_limit(rotation, x5, q(1), k, CoalescenceSchedule::standard(q(1), k));
        CHECK(r.oracle == ExactScalar(expected[k]));
        CHECK_MESSAGE(r.pass, "k=", k, " ", r.note);
        REQUIRE(r.estimate.order.has_value());
        CHECK(*r.estimate.order >= 0.9);
        const double rel = std::abs(to_double(r.estimate.value) - static_cast<double>(expected[k])) / expected[k];
        CHECK(rel < 1e-8);
    }
    const VectorField scaling = VectorField::parse("-x", "u");
    const auto s = verify_infinitesimal_limit(scaling, parse("x^2 + 3*x"), q(2), 2, CoalescenceSchedule::standard(q(2), 2));
    CHECK(s.estimate.exact);
    CHECK(s.oracle == ExactScalar(6));
    CHECK(s.pass);
}

TEST_CASE("offset independence") {
    const VectorField rotation = VectorField::parse("-u", "x");
    const Expr curve = parse("x^5");
    CoalescenceSchedule a = CoalescenceSchedule::standard(q(1), 2);
    CoalescenceSchedule b{q(1), {q(0), q(-1), q(3)}};
    const auto ra = verify_infinitesimal_limit(rotation, curve, q(1), 2, a);
    const auto rb = verify_infinitesimal_limit(rotation, curve, q(1), 2, b);
    CHECK(ra.pass);
    CHECK(rb.pass);
    CHECK(std::abs(to_double(ra.estimate.value - rb.estimate.value)) < 2e-8 * 300);
}
