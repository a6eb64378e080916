#pragma once

// Jet-space coordinates (x, u0, u1, ..., uN) and the total derivative.

#include "multijet/expr.hpp"

#include <optional>
#include <string>

namespace multijet {

/// The ordered coordinate names x, u0, ..., uN standing for x, u, u', ..., u^(N).
class JetVariableFamily {
public:
    explicit JetVariableFamily(int max_order);

    int max_order() const { return max_order_; }
    static std::string x() { return "x"; }
    static std::string u(int k) { return "u" + std::to_string(k); }

    /// Order k if `name` is the jet coordinate uk (any k), nullopt otherwise.
    static std::optional<int> order_of(const std::string& name);
    bool contains(const std::string& name) const;

private:
    int max_order_;
};

/// D_x = d/dx + sum_{i<N} u_{i+1} d/du_i, returned in canonical form.
/// Requires e to use only x, u0, ..., u(N-1); throws Error("order overflow")
/// if it mentions uN or beyond and Error for any foreign variable.
Expr total_derivative(const Expr& e, int max_order);

/// k-fold total derivative; the family grows to u(order(e) + k) as needed.
Expr total_derivative_n(const Expr& e, int k);

/// Highest jet order mentioned by e (-1 when e mentions no uk).
int jet_order(const Expr& e);

}  // namespace multijet
