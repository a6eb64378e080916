#include "multijet/expr.hpp"

#include <cctype>
#include <utility>

namespace multijet {

struct Expr::Node {
    ExprKind kind = ExprKind::Constant;
    ExactScalar value;
    std::string name;
    int exponent = 0;
    Expr lhs{std::shared_ptr<const Node>{}};
    Expr rhs{std::shared_ptr<const Node>{}};
};

namespace {

const Expr& zero_expr() {
    static const Expr z = Expr::constant(ExactScalar(0));
    return z;
}

}  // namespace

Expr::Expr() : node_(std::make_shared<const Node>()) {}

Expr Expr::constant(const ExactScalar& value) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Constant;
    n->value = value;
    return Expr(std::move(n));
}

Expr Expr::variable(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Variable;
    n->name = std::move(name);
    return Expr(std::move(n));
}

Expr Expr::negate(const Expr& operand) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Negate;
    n->lhs = operand;
    return Expr(std::move(n));
}

namespace {

template <class NodeT, class E>
std::shared_ptr<NodeT> binary(ExprKind kind, const E& a, const E& b) {
    auto n = std::make_shared<NodeT>();
    n->kind = kind;
    n->lhs = a;
    n->rhs = b;
    return n;
}

}  // namespace

Expr Expr::sum(const Expr& lhs, const Expr& rhs) { return Expr(binary<Node>(ExprKind::Sum, lhs, rhs)); }
Expr Expr::difference(const Expr& lhs, const Expr& rhs) {
    return Expr(binary<Node>(ExprKind::Difference, lhs, rhs));
}
Expr Expr::product(const Expr& lhs, const Expr& rhs) { return Expr(binary<Node>(ExprKind::Product, lhs, rhs)); }
Expr Expr::quotient(const Expr& lhs, const Expr& rhs) {
    return Expr(binary<Node>(ExprKind::Quotient, lhs, rhs));
}

Expr Expr::power(const Expr& base, int exponent) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Power;
    n->lhs = base;
    n->exponent = exponent;
    return Expr(std::move(n));
}

ExprKind Expr::kind() const { return node_->kind; }
const ExactScalar& Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
int Expr::exponent() const { return node_->exponent; }

const Expr& Expr::lhs() const { return node_->lhs; }
const Expr& Expr::rhs() const { return node_->rhs; }

std::set<std::string> Expr::variables() const {
    std::set<std::string> out;
    auto walk = [&out](const auto& self, const Expr& e) -> void {
        switch (e.kind()) {
            case ExprKind::Constant:
                return;
            case ExprKind::Variable:
                out.insert(e.name());
                return;
            case ExprKind::Negate:
            case ExprKind::Power:
                self(self, e.lhs());
                return;
            default:
                self(self, e.lhs());
                self(self, e.rhs());
        }
    };
    walk(walk, *this);
    return out;
}

bool Expr::mentions(std::string_view name) const {
    switch (kind()) {
        case ExprKind::Constant:
            return false;
        case ExprKind::Variable:
            return this->name() == name;
        case ExprKind::Negate:
        case ExprKind::Power:
            return lhs().mentions(name);
        default:
            return lhs().mentions(name) || rhs().mentions(name);
    }
}

bool Expr::same_tree(const Expr& other) const {
    if (node_ == other.node_) return true;
    if (kind() != other.kind()) return false;
    switch (kind()) {
        case ExprKind::Constant:
            return value() == other.value();
        case ExprKind::Variable:
            return name() == other.name();
        case ExprKind::Negate:
            return lhs().same_tree(other.lhs());
        case ExprKind::Power:
            return exponent() == other.exponent() && lhs().same_tree(other.lhs());
        default:
            return lhs().same_tree(other.lhs()) && rhs().same_tree(other.rhs());
    }
}

// ---------------------------------------------------------------------------
// Printing

namespace {

constexpr int kPrecSum = 1;
constexpr int kPrecProduct = 2;
constexpr int kPrecNegate = 3;
constexpr int kPrecPower = 4;
constexpr int kPrecAtom = 5;

int precedence(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return e.value().sign() < 0 ? kPrecNegate : (e.value().is_integer() ? kPrecAtom : kPrecProduct);
        case ExprKind::Variable:
            return kPrecAtom;
        case ExprKind::Negate:
            return kPrecNegate;
        case ExprKind::Sum:
        case ExprKind::Difference:
            return kPrecSum;
        case ExprKind::Product:
        case ExprKind::Quotient:
            return kPrecProduct;
        case ExprKind::Power:
            return kPrecPower;
    }
    return kPrecAtom;
}

// True when the rendering ends in a numeric literal, so that a following
// "/digits" would be glued onto it by the lexer.
bool ends_with_number(const std::string& s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    if (i == s.size()) return false;
    return i == 0 || !std::isalpha(static_cast<unsigned char>(s[i - 1]));
}

std::string render(const Expr& e);

std::string wrap_if(const Expr& e, bool cond) {
    const std::string s = render(e);
    return cond ? "(" + s + ")" : s;
}

std::string render(const Expr& e) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return e.value().to_string();
        case ExprKind::Variable:
            return e.name();
        case ExprKind::Negate:
            return "-" + wrap_if(e.lhs(), precedence(e.lhs()) < kPrecNegate);
        case ExprKind::Sum:
        case ExprKind::Difference: {
            const char* op = e.kind() == ExprKind::Sum ? " + " : " - ";
            return wrap_if(e.lhs(), precedence(e.lhs()) < kPrecSum) + op +
                   wrap_if(e.rhs(), precedence(e.rhs()) <= kPrecSum);
        }
        case ExprKind::Product:
        case ExprKind::Quotient: {
            const char* op = e.kind() == ExprKind::Product ? "*" : "/";
            const std::string left = wrap_if(e.lhs(), precedence(e.lhs()) < kPrecProduct);
            std::string right = render(e.rhs());
            bool paren = precedence(e.rhs()) <= kPrecProduct;
            if (!paren && ends_with_number(left) && !right.empty() &&
                std::isdigit(static_cast<unsigned char>(right.front()))) {
                paren = true;
            }
            if (paren) right = "(" + right + ")";
            return left + op + right;
        }
        case ExprKind::Power: {
            const bool paren = precedence(e.lhs()) < kPrecAtom;
            return wrap_if(e.lhs(), paren) + "^" + std::to_string(e.exponent());
        }
    }
    return "?";
}

}  // namespace

std::string Expr::to_string() const { return render(*this); }

// ---------------------------------------------------------------------------
// Simplifying arithmetic

Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() + b.value());
    if (a.is_constant(0)) return b;
    if (b.is_constant(0)) return a;
    return Expr::sum(a, b);
}

Expr operator-(const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() - b.value());
    if (b.is_constant(0)) return a;
    if (a.is_constant(0)) return -b;
    return Expr::difference(a, b);
}

Expr operator-(const Expr& a) {
    if (a.is_constant()) return Expr::constant(-a.value());
    if (a.kind() == ExprKind::Negate) return a.lhs();
    return Expr::negate(a);
}

Expr operator*(const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant()) return Expr::constant(a.value() * b.value());
    if (a.is_constant(0) || b.is_constant(0)) return zero_expr();
    if (a.is_constant(1)) return b;
    if (b.is_constant(1)) return a;
    if (a.is_constant(-1)) return -b;
    if (b.is_constant(-1)) return -a;
    return Expr::product(a, b);
}

Expr operator/(const Expr& a, const Expr& b) {
    if (b.is_constant() && !b.value().is_zero()) {
        if (a.is_constant()) return Expr::constant(a.value() / b.value());
        if (b.value().is_one()) return a;
    }
    if (a.is_constant(0) && !b.is_constant()) return zero_expr();
    return Expr::quotient(a, b);
}

Expr pow(const Expr& base, int exponent) {
    if (exponent == 0) return Expr::constant(ExactScalar(1));
    if (exponent == 1) return base;
    if (base.is_constant() && (exponent > 0 || !base.value().is_zero())) {
        return Expr::constant(base.value().pow(exponent));
    }
    return Expr::power(base, exponent);
}

// ---------------------------------------------------------------------------
// Evaluation, differentiation, substitution

ExactScalar eval(const Expr& e, const Binding& binding) { return evaluate<ExactScalar>(e, binding); }

Expr partial(const Expr& e, std::string_view var) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return zero_expr();
        case ExprKind::Variable:
            return Expr::constant(ExactScalar(e.name() == var ? 1 : 0));
        case ExprKind::Negate:
            return -partial(e.lhs(), var);
        case ExprKind::Sum:
            return partial(e.lhs(), var) + partial(e.rhs(), var);
        case ExprKind::Difference:
            return partial(e.lhs(), var) - partial(e.rhs(), var);
        case ExprKind::Product:
            return partial(e.lhs(), var) * e.rhs() + e.lhs() * partial(e.rhs(), var);
        case ExprKind::Quotient: {
            const Expr& a = e.lhs();
            const Expr& b = e.rhs();
            const Expr da = partial(a, var);
            const Expr db = partial(b, var);
            if (db.is_constant(0)) return da / b;
            return (da * b - a * db) / pow(b, 2);
        }
        case ExprKind::Power: {
            const int n = e.exponent();
            const Expr db = partial(e.lhs(), var);
            if (db.is_constant(0)) return zero_expr();
            return Expr::constant(ExactScalar(n)) * pow(e.lhs(), n - 1) * db;
        }
    }
    return zero_expr();
}

Expr substitute(const Expr& e, std::string_view var, const Expr& replacement) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return e;
        case ExprKind::Variable:
            return e.name() == var ? replacement : e;
        case ExprKind::Negate:
            return -substitute(e.lhs(), var, replacement);
        case ExprKind::Sum:
            return substitute(e.lhs(), var, replacement) + substitute(e.rhs(), var, replacement);
        case ExprKind::Difference:
            return substitute(e.lhs(), var, replacement) - substitute(e.rhs(), var, replacement);
        case ExprKind::Product:
            return substitute(e.lhs(), var, replacement) * substitute(e.rhs(), var, replacement);
        case ExprKind::Quotient:
            return substitute(e.lhs(), var, replacement) / substitute(e.rhs(), var, replacement);
        case ExprKind::Power:
            return pow(substitute(e.lhs(), var, replacement), e.exponent());
    }
    return e;
}

}  // namespace multijet
