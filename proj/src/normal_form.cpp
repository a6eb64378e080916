#include "multijet/normal_form.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <optional>
#include <tuple>

namespace multijet {

namespace {

struct VariableRank {
    int cls;
    long index;
    std::string_view name;
};

VariableRank rank(const std::string& name) {
    if (name == "x") return {0, 0, {}};
    if (name == "u") return {1, -1, {}};
    if (name.size() >= 2 && name.size() <= 10 && name[0] == 'u' && (name[1] != '0' || name.size() == 2)) {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i) {
            digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
        }
        if (digits) return {1, std::stol(name.substr(1)), {}};
    }
    return {2, 0, name};
}

}  // namespace

bool VariableOrder::operator()(const std::string& a, const std::string& b) const {
    const VariableRank ra = rank(a);
    const VariableRank rb = rank(b);
    return std::tie(ra.cls, ra.index, ra.name) < std::tie(rb.cls, rb.index, rb.name);
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [_, e] : m) d += e;
    return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    // Graded reverse lex: the monomial with the smaller exponent in the
    // smallest differing variable is the greater one and prints first.
    std::set<std::string, VariableOrder> vars;
    for (const auto& [v, _] : a) vars.insert(v);
    for (const auto& [v, _] : b) vars.insert(v);
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        const auto ia = a.find(*it);
        const auto ib = b.find(*it);
        const int ea = ia == a.end() ? 0 : ia->second;
        const int eb = ib == b.end() ? 0 : ib->second;
        if (ea != eb) return ea < eb;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(const ExactScalar& c) {
    Polynomial p;
    p.add_term({}, c);
    return p;
}

Polynomial Polynomial::variable(const std::string& name) {
    Polynomial p;
    p.add_term(Monomial{{name, 1}}, ExactScalar(1));
    return p;
}

void Polynomial::add_term(const Monomial& m, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

ExactScalar Polynomial::constant_term() const {
    const auto it = terms_.find(Monomial{});
    return it == terms_.end() ? ExactScalar(0) : it->second;
}

const ExactScalar& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error("leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& [_, c] : p.terms_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::scale(const ExactScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [_, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = constant(ExactScalar(1));
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::partial(const std::string& var) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        const auto it = m.find(var);
        if (it == m.end()) continue;
        Monomial dm = m;
        const int e = it->second;
        if (e == 1) {
            dm.erase(var);
        } else {
            dm[var] = e - 1;
        }
        out.add_term(dm, c * ExactScalar(e));
    }
    return out;
}

ExactScalar Polynomial::eval(const Binding& binding) const {
    ExactScalar total(0);
    for (const auto& [m, c] : terms_) {
        ExactScalar t = c;
        for (const auto& [v, e] : m) {
            const auto it = binding.find(v);
            if (it == binding.end()) throw EvalError("unbound variable '" + v + "'");
            t *= it->second.pow(e);
        }
        total += t;
    }
    return total;
}

namespace {

std::string monomial_string(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m) {
        if (!s.empty()) s += "*";
        s += v;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c.sign() < 0;
        const ExactScalar mag = c.abs();
        std::string body;
        if (m.empty()) {
            body = mag.to_string();
        } else if (mag.is_one()) {
            body = monomial_string(m);
        } else {
            body = mag.to_string() + "*" + monomial_string(m);
        }
        if (first) {
            out = (negative ? "-" : "") + body;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

Expr Polynomial::to_expr() const {
    Expr out = Expr::constant(ExactScalar(0));
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c.sign() < 0 && !first;
        // Left-nested so the printer shows 4*u1*u3 rather than 4*(u1*u3).
        Expr term = Expr::constant(negative ? -c : c);
        for (const auto& [v, e] : m) term = term * multijet::pow(Expr::variable(v), e);
        out = first ? term : (negative ? out - term : out + term);
        first = false;
    }
    return out;
}

bool PolynomialOrder::operator()(const Polynomial& a, const Polynomial& b) const {
    const MonomialOrder mono;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (mono(ia->first, ib->first)) return true;
        if (mono(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial numerator) : num_(std::move(numerator)) {}

void RationalFunction::add_factor(const Polynomial& f, int exponent) {
    if (exponent == 0) return;
    if (f.is_zero()) throw DivisionByZero("zero polynomial in denominator");
    const ExactScalar lead = f.leading_coefficient();
    num_.scale(lead.pow(-exponent));
    if (f.is_constant()) return;
    if (f.terms().size() == 1 && !(f.terms().begin()->first.size() == 1 && f.degree() == 1)) {
        // c * v1^a1 * v2^a2 ...: record each variable as its own factor.
        for (const auto& [v, e] : f.terms().begin()->first) add_factor(Polynomial::variable(v), e * exponent);
        return;
    }
    Polynomial monic = f;
    monic.scale(lead.inverse());
    auto [it, inserted] = den_.try_emplace(monic, exponent);
    if (!inserted) {
        it->second += exponent;
        if (it->second == 0) den_.erase(it);
    }
}

Polynomial RationalFunction::expanded_denominator() const {
    Polynomial d = Polynomial::constant(ExactScalar(1));
    for (const auto& [f, e] : den_) d = d * f.pow(static_cast<unsigned>(e));
    return d;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    RationalFunction::Factors lcm = a.den_;
    for (const auto& [f, e] : b.den_) {
        auto [it, inserted] = lcm.try_emplace(f, e);
        if (!inserted) it->second = std::max(it->second, e);
    }
    auto cofactor = [&lcm](const RationalFunction& r) {
        Polynomial c = Polynomial::constant(ExactScalar(1));
        for (const auto& [f, e] : lcm) {
            const auto it = r.den_.find(f);
            const int have = it == r.den_.end() ? 0 : it->second;
            if (e > have) c = c * f.pow(static_cast<unsigned>(e - have));
        }
        return c;
    };
    RationalFunction out;
    out.num_ = a.num_ * cofactor(a) + b.num_ * cofactor(b);
    if (!out.num_.is_zero()) out.den_ = std::move(lcm);
    return out;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    RationalFunction out;
    out.num_ = a.num_ * b.num_;
    if (out.num_.is_zero()) return out;
    out.den_ = a.den_;
    for (const auto& [f, e] : b.den_) {
        auto [it, inserted] = out.den_.try_emplace(f, e);
        if (!inserted) it->second += e;
    }
    return out;
}

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) throw DivisionByZero("inverse of the zero rational function");
    RationalFunction out;
    if (num_.is_constant()) {
        out.num_ = expanded_denominator();
        out.num_.scale(num_.constant_term().inverse());
        return out;
    }
    const ExactScalar lead = num_.leading_coefficient();
    Polynomial monic = num_;
    monic.scale(lead.inverse());
    Factors remaining = den_;
    const auto it = remaining.find(monic);
    if (it != remaining.end()) {
        // The numerator is itself one of the denominator factors: cancel it.
        if (--it->second == 0) remaining.erase(it);
        out.num_ = Polynomial::constant(lead.inverse());
        for (const auto& [f, e] : remaining) out.num_ = out.num_ * f.pow(static_cast<unsigned>(e));
        return out;
    }
    out.num_ = expanded_denominator();
    out.add_factor(num_, 1);
    return out;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

namespace {

// p / f when f divides p exactly, by single-divisor division on leading terms.
std::optional<Polynomial> exact_quotient(Polynomial p, const Polynomial& f) {
    const auto& [lf, cf] = *f.terms().rbegin();
    Polynomial q;
    while (!p.is_zero()) {
        const auto& [lp, cp] = *p.terms().rbegin();
        Monomial m = lp;
        for (const auto& [v, e] : lf) {
            const auto it = m.find(v);
            if (it == m.end() || it->second < e) return std::nullopt;
            if ((it->second -= e) == 0) m.erase(it);
        }
        Polynomial t;
        t += Polynomial::constant(cp / cf);
        for (const auto& [v, e] : m) t = t * Polynomial::variable(v).pow(static_cast<unsigned>(e));
        q += t;
        p -= t * f;
    }
    return q;
}

}  // namespace

void RationalFunction::cancel_common_factors() {
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = exact_quotient(num_, it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

RationalFunction RationalFunction::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RationalFunction result(Polynomial::constant(ExactScalar(1)));
    RationalFunction base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

RationalFunction RationalFunction::partial(const std::string& var) const {
    RationalFunction out;
    out.num_ = num_.partial(var);
    if (!out.num_.is_zero()) out.den_ = den_;
    for (const auto& [f, e] : den_) {
        const Polynomial df = f.partial(var);
        if (df.is_zero()) continue;
        RationalFunction term;
        term.num_ = num_ * df;
        term.num_.scale(ExactScalar(-e));
        if (term.num_.is_zero()) continue;
        term.den_ = den_;
        term.den_[f] += 1;
        out = out + term;
    }
    return out;
}

std::string RationalFunction::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::string den;
    for (const auto& [f, e] : den_) {
        if (!den.empty()) den += "*";
        den += "(" + f.to_string() + ")";
        if (e != 1) den += "^" + std::to_string(e);
    }
    return "(" + num_.to_string() + ")/(" + den + ")";
}

Expr RationalFunction::to_expr() const {
    if (den_.empty()) return num_.to_expr();
    Expr den = Expr::constant(ExactScalar(1));
    for (const auto& [f, e] : den_) den = den * multijet::pow(f.to_expr(), e);
    return num_.to_expr() / den;
}

namespace {

RationalFunction to_rational_function_raw(const Expr& e);

// Divides factor by factor so that a / (f^2 * g) keeps f and g as separate
// denominator factors instead of expanding the product.
RationalFunction divide_by(const RationalFunction& num, const Expr& den, const Expr& whole) {
    if (den.kind() == ExprKind::Product) return divide_by(divide_by(num, den.lhs(), whole), den.rhs(), whole);
    if (den.kind() == ExprKind::Power && den.exponent() > 0) {
        const RationalFunction base = to_rational_function(den.lhs());
        if (base.is_zero()) throw DivisionByZero("division by zero in subexpression '" + whole.to_string() + "'");
        return num * base.inverse().pow(den.exponent());
    }
    const RationalFunction d = to_rational_function(den);
    if (d.is_zero()) throw DivisionByZero("division by zero in subexpression '" + whole.to_string() + "'");
    return num / d;
}

}  // namespace

RationalFunction to_rational_function(const Expr& e) {
    RationalFunction r = to_rational_function_raw(e);
    r.cancel_common_factors();
    return r;
}

namespace {

RationalFunction to_rational_function_raw(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return Polynomial::constant(e.value());
        case ExprKind::Variable:
            return Polynomial::variable(e.name());
        case ExprKind::Negate:
            return -to_rational_function(e.lhs());
        case ExprKind::Sum:
            return to_rational_function(e.lhs()) + to_rational_function(e.rhs());
        case ExprKind::Difference:
            return to_rational_function(e.lhs()) - to_rational_function(e.rhs());
        case ExprKind::Product:
            return to_rational_function(e.lhs()) * to_rational_function(e.rhs());
        case ExprKind::Quotient:
            return divide_by(to_rational_function(e.lhs()), e.rhs(), e);
        case ExprKind::Power: {
            const RationalFunction base = to_rational_function(e.lhs());
            if (e.exponent() < 0 && base.is_zero()) {
                throw DivisionByZero("division by zero in subexpression '" + e.to_string() + "'");
            }
            return base.pow(e.exponent());
        }
    }
    throw Error("corrupt expression node");
}

}  // namespace

Expr canonicalize(const Expr& e) { return to_rational_function(e).to_expr(); }

std::string canonical_string(const Expr& e) { return to_rational_function(e).to_string(); }

bool equal(const Expr& e1, const Expr& e2) {
    return (to_rational_function(e1) - to_rational_function(e2)).is_zero();
}

RandomizedVerdict equal_randomized(const Expr& e1, const Expr& e2, std::uint64_t seed, int points) {
    points = std::max(points, 20);
    std::set<std::string> vars = e1.variables();
    for (const auto& v : e2.variables()) vars.insert(v);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 17);
    RandomizedVerdict verdict;
    verdict.equal = true;
    int attempts = 0;
    while (verdict.points < points && attempts < points * 20) {
        ++attempts;
        Binding b;
        for (const auto& v : vars) b[v] = ExactScalar(mpz_class(num(rng)), mpz_class(den(rng)));
        ExactScalar a;
        ExactScalar c;
        try {
            a = eval(e1, b);
            c = eval(e2, b);
        } catch (const DivisionByZero&) {
            continue;
        }
        ++verdict.points;
        if (a != c) {
            verdict.equal = false;
            for (const auto& [k, val] : b) verdict.witness += k + "=" + val.to_string() + " ";
            return verdict;
        }
    }
    return verdict;
}

}  // namespace multijet
