#pragma once

// Canonical forms for expressions: sparse multivariate polynomials with exact
// coefficients, and rational functions whose denominator is kept as a product
// of powers of normalized polynomial factors.

#include "multijet/expr.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace multijet {

/// Ordering of variable names: x first, then u and the jet coordinates
/// u0, u1, ... by index, then every other name alphabetically.
struct VariableOrder {
    bool operator()(const std::string& a, const std::string& b) const;
};

using Monomial = std::map<std::string, int, VariableOrder>;

/// Term order: ascending total degree, ties broken by graded reverse
/// lexicographic order (descending). This is also the printing order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

int total_degree(const Monomial& m);

class Polynomial {
public:
    using Terms = std::map<Monomial, ExactScalar, MonomialOrder>;

    Polynomial() = default;
    static Polynomial constant(const ExactScalar& c);
    static Polynomial variable(const std::string& name);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero if absent).
    ExactScalar constant_term() const;
    /// Coefficient of the last term in MonomialOrder.
    const ExactScalar& leading_coefficient() const;
    int degree() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& scale(const ExactScalar& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial pow(unsigned n) const;

    Polynomial partial(const std::string& var) const;
    ExactScalar eval(const Binding& binding) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Canonical rendering, e.g. "3*u2^2 + 4*u1*u3" or "1 + u1^2".
    std::string to_string() const;
    Expr to_expr() const;

private:
    friend class RationalFunction;
    void add_term(const Monomial& m, const ExactScalar& c);
    Terms terms_;
};

struct PolynomialOrder {
    bool operator()(const Polynomial& a, const Polynomial& b) const;
};

/// numerator / prod(factor^exponent). Factors are nonconstant and scaled so
/// that their leading coefficient is 1; equal factors therefore merge.
class RationalFunction {
public:
    using Factors = std::map<Polynomial, int, PolynomialOrder>;

    RationalFunction() = default;
    RationalFunction(Polynomial numerator);  // NOLINT(google-explicit-constructor)

    const Polynomial& numerator() const { return num_; }
    const Factors& denominator_factors() const { return den_; }
    bool is_polynomial() const { return den_.empty(); }
    bool is_zero() const { return num_.is_zero(); }
    Polynomial expanded_denominator() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction inverse() const;
    RationalFunction pow(int n) const;

    RationalFunction partial(const std::string& var) const;

    std::string to_string() const;
    Expr to_expr() const;

private:
    void add_factor(const Polynomial& f, int exponent);
    /// Divides out every denominator factor that divides the numerator.
    void cancel_common_factors();
    friend RationalFunction to_rational_function(const Expr& e);
    Polynomial num_;
    Factors den_;
};

/// Converts an expression into canonical rational-function form.
RationalFunction to_rational_function(const Expr& e);

/// Rewrites an expression in canonical form (expanded polynomial, or a
/// quotient of an expanded numerator by factored powers).
Expr canonicalize(const Expr& e);

/// Canonical printed form; two expressions have the same canonical form iff
/// they are equal as polynomials (for quotient-free input).
std::string canonical_string(const Expr& e);

/// Exact identity test: e1 - e2 reduces to zero after clearing denominators.
/// As with any rational-function identity this ignores the points where a
/// denominator vanishes (x/x equals 1).
bool equal(const Expr& e1, const Expr& e2);

struct RandomizedVerdict {
    bool equal = false;
    int points = 0;               // evaluation points actually used
    bool probabilistic = true;    // always true: this is not a proof
    std::string witness;          // binding of a disagreeing point, if any
};

/// Fast pre-check: compares e1 and e2 at `points` (>= 20) random rational
/// bindings, skipping poles. The verdict is probabilistic.
RandomizedVerdict equal_randomized(const Expr& e1, const Expr& e2, std::uint64_t seed, int points = 20);

}  // namespace multijet
