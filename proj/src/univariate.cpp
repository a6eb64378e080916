#include "multijet/univariate.hpp"

#include <utility>

namespace multijet {

UPoly::UPoly(const ExactScalar& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<ExactScalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::variable() { return UPoly(std::vector<ExactScalar>{ExactScalar(0), ExactScalar(1)}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ExactScalar UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return ExactScalar(0);
    return c_[static_cast<std::size_t>(i)];
}

ExactScalar UPoly::operator()(const ExactScalar& t) const {
    ExactScalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<ExactScalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(ExactScalar(static_cast<long>(i)) * c_[i]);
    return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    const ExactScalar lc = leading();
    std::vector<ExactScalar> out = c_;
    for (auto& c : out) c /= lc;
    return UPoly(std::move(out));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<ExactScalar> out(std::max(a.c_.size(), b.c_.size()), ExactScalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<ExactScalar> out(std::max(a.c_.size(), b.c_.size()), ExactScalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<ExactScalar> out(a.c_.size() + b.c_.size() - 1, ExactScalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<ExactScalar> rem = a.c_;
    const int db = b.degree();
    std::vector<ExactScalar> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, ExactScalar(0));
    for (int d = a.degree(); d >= db; --d) {
        const ExactScalar f = rem[static_cast<std::size_t>(d)] / b.leading();
        quot[static_cast<std::size_t>(d - db)] = f;
        if (f.is_zero()) continue;
        for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(d - db + i)] -= f * b.c_[static_cast<std::size_t>(i)];
    }
    q = UPoly(std::move(quot));
    r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q;
        UPoly r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c_[i].to_string();
        if (i >= 1) out += "*" + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

URational::URational(UPoly num, UPoly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = UPoly();
        den_ = UPoly(ExactScalar(1));
        return;
    }
    const UPoly g = UPoly::gcd(num, den);
    UPoly r;
    UPoly::divmod(num, g, num_, r);
    UPoly::divmod(den, g, den_, r);
    const ExactScalar lc = den_.leading();
    num_ = num_ * UPoly(lc.inverse());
    den_ = den_.monic();
}

ExactScalar URational::value_at_zero() const {
    const ExactScalar q0 = den_.coeff(0);
    if (q0.is_zero()) throw DivisionByZero("pole at eps = 0");
    return num_.coeff(0) / q0;
}

ExactScalar URational::derivative_at_zero() const {
    const ExactScalar q0 = den_.coeff(0);
    if (q0.is_zero()) throw DivisionByZero("pole at eps = 0");
    return (num_.coeff(1) * q0 - num_.coeff(0) * den_.coeff(1)) / (q0 * q0);
}

URational operator+(const URational& a, const URational& b) {
    return URational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

URational operator-(const URational& a, const URational& b) {
    return URational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

URational operator*(const URational& a, const URational& b) { return URational(a.num_ * b.num_, a.den_ * b.den_); }

URational operator/(const URational& a, const URational& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return URational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string URational::to_string(const std::string& var) const {
    if (den_ == UPoly(ExactScalar(1))) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace multijet
