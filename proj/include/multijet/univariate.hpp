#pragma once

// Polynomials and rational functions in a single variable over Q. Used to
// carry the group parameter eps exactly through determinants.

#include "multijet/exact.hpp"

#include <string>
#include <vector>

namespace multijet {

/// Dense polynomial, coefficients in ascending degree, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    UPoly(const ExactScalar& c);  // NOLINT(google-explicit-constructor)
    explicit UPoly(std::vector<ExactScalar> coeffs);
    static UPoly variable();

    const std::vector<ExactScalar>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    ExactScalar coeff(int i) const;
    const ExactScalar& leading() const { return c_.back(); }
    ExactScalar operator()(const ExactScalar& t) const;
    UPoly derivative() const;
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws DivisionByZero for b = 0.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    /// Monic gcd (0 when both are 0).
    static UPoly gcd(UPoly a, UPoly b);

    std::string to_string(const std::string& var = "eps") const;

private:
    void trim();
    std::vector<ExactScalar> c_;
};

/// num / den with gcd(num, den) = 1 and den monic.
class URational {
public:
    URational() : num_(ExactScalar(0)), den_(ExactScalar(1)) {}
    URational(const ExactScalar& c) : num_(c), den_(ExactScalar(1)) {}  // NOLINT(google-explicit-constructor)
    URational(UPoly num, UPoly den);
    static URational variable() { return URational(UPoly::variable(), UPoly(ExactScalar(1))); }

    const UPoly& numerator() const { return num_; }
    const UPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Value at t = 0; throws DivisionByZero at a pole.
    ExactScalar value_at_zero() const;
    /// d/dt at t = 0 via (p'q - pq')/q^2; throws DivisionByZero at a pole.
    ExactScalar derivative_at_zero() const;

    friend URational operator+(const URational& a, const URational& b);
    friend URational operator-(const URational& a, const URational& b);
    friend URational operator*(const URational& a, const URational& b);
    friend URational operator/(const URational& a, const URational& b);
    friend bool operator==(const URational& a, const URational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string(const std::string& var = "eps") const;

private:
    UPoly num_;
    UPoly den_;
};

inline bool is_zero(const URational& r) { return r.is_zero(); }

}  // namespace multijet
