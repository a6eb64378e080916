#pragma once

// Exact rational scalars backed by GMP.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace multijet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a zero divisor is encountered in exact arithmetic.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    ExactScalar(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
    ExactScalar(const mpz_class& num, const mpz_class& den);
    explicit ExactScalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" (q > 0). Throws Error on malformed text.
    static ExactScalar parse(std::string_view text);

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// "p" when integral, otherwise "p/q".
    std::string to_string() const;
    double to_double() const { return q_.get_d(); }

    ExactScalar operator-() const { return ExactScalar(mpq_class(-q_)); }
    ExactScalar& operator+=(const ExactScalar& o) { q_ += o.q_; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { q_ -= o.q_; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { q_ *= o.q_; return *this; }
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    ExactScalar inverse() const;
    /// Integer power; negative exponents invert (and throw on zero base).
    ExactScalar pow(long exponent) const;
    ExactScalar abs() const { return ExactScalar(mpq_class(::abs(q_))); }

    static ExactScalar factorial(unsigned n);
    static ExactScalar binomial(unsigned n, unsigned k);

private:
    mpq_class q_{0};
};

inline std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.to_string(); }

inline bool is_zero(const ExactScalar& s) { return s.is_zero(); }

}  // namespace multijet
