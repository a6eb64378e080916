#pragma once

// Minimal symbolic expression kernel: immutable expression trees over named
// variables with exact rational constants and integer powers.

#include "multijet/exact.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace multijet {

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class EvalError : public Error {
public:
    using Error::Error;
};

enum class ExprKind { Constant, Variable, Negate, Sum, Difference, Product, Quotient, Power };

class Expr {
public:
    /// The zero constant.
    Expr();

    // Raw node constructors. They build exactly the requested node and never
    // simplify; the parser uses them so its output mirrors the input text.
    static Expr constant(const ExactScalar& value);
    static Expr variable(std::string name);
    static Expr negate(const Expr& operand);
    static Expr sum(const Expr& lhs, const Expr& rhs);
    static Expr difference(const Expr& lhs, const Expr& rhs);
    static Expr product(const Expr& lhs, const Expr& rhs);
    static Expr quotient(const Expr& lhs, const Expr& rhs);
    static Expr power(const Expr& base, int exponent);

    ExprKind kind() const;
    /// Constant value; only meaningful for ExprKind::Constant.
    const ExactScalar& value() const;
    /// Variable name; only meaningful for ExprKind::Variable.
    const std::string& name() const;
    /// Operand of Negate/Power, left operand of binary nodes.
    const Expr& lhs() const;
    const Expr& rhs() const;
    int exponent() const;

    bool is_constant() const { return kind() == ExprKind::Constant; }
    bool is_constant(const ExactScalar& v) const { return is_constant() && value() == v; }

    /// Variables mentioned anywhere in the tree.
    std::set<std::string> variables() const;
    bool mentions(std::string_view name) const;

    /// Infix rendering with minimal parentheses; parse(to_string()) rebuilds
    /// an expression with the same value.
    std::string to_string() const;

    /// Structural identity of the trees.
    bool same_tree(const Expr& other) const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Simplifying arithmetic: folds constants and drops neutral elements.
Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, int exponent);

inline std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << e.to_string(); }

/// Parses the expression grammar
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := atom ("^" integer)? | "-" factor
///   atom   := number | ident | "(" expr ")"
///   number := integer ("/" positive-integer)?
/// Throws ParseError carrying the byte offset of the failure.
Expr parse(std::string_view text);

using Binding = std::map<std::string, ExactScalar, std::less<>>;

/// Exact evaluation. Throws EvalError on an unbound variable and
/// DivisionByZero naming the subexpression whose value vanished.
ExactScalar eval(const Expr& e, const Binding& binding);

/// Evaluation over any field-like scalar T constructible from ExactScalar and
/// providing + - * / and a free is_zero(const T&).
template <class T>
T evaluate(const Expr& e, const std::map<std::string, T, std::less<>>& binding) {
    switch (e.kind()) {
        case ExprKind::Constant:
            return T(e.value());
        case ExprKind::Variable: {
            auto it = binding.find(e.name());
            if (it == binding.end()) throw EvalError("unbound variable '" + e.name() + "'");
            return it->second;
        }
        case ExprKind::Negate:
            return T(ExactScalar(0)) - evaluate(e.lhs(), binding);
        case ExprKind::Sum:
            return evaluate(e.lhs(), binding) + evaluate(e.rhs(), binding);
        case ExprKind::Difference:
            return evaluate(e.lhs(), binding) - evaluate(e.rhs(), binding);
        case ExprKind::Product:
            return evaluate(e.lhs(), binding) * evaluate(e.rhs(), binding);
        case ExprKind::Quotient: {
            T den = evaluate(e.rhs(), binding);
            if (is_zero(den)) throw DivisionByZero("division by zero in subexpression '" + e.to_string() + "'");
            return evaluate(e.lhs(), binding) / den;
        }
        case ExprKind::Power: {
            T base = evaluate(e.lhs(), binding);
            int n = e.exponent();
            if (n < 0) {
                if (is_zero(base)) throw DivisionByZero("division by zero in subexpression '" + e.to_string() + "'");
                base = T(ExactScalar(1)) / base;
                n = -n;
            }
            T result(ExactScalar(1));
            while (n > 0) {
                if (n & 1) result = result * base;
                n >>= 1;
                if (n > 0) base = base * base;
            }
            return result;
        }
    }
    throw EvalError("corrupt expression node");
}

/// Symbolic partial derivative; the quotient rule is applied symbolically.
Expr partial(const Expr& e, std::string_view var);

/// Replaces every occurrence of variable `var` by `replacement`.
Expr substitute(const Expr& e, std::string_view var, const Expr& replacement);

}  // namespace multijet
