#include "multijet/jet.hpp"

#include "multijet/normal_form.hpp"

#include <cctype>

namespace multijet {

JetVariableFamily::JetVariableFamily(int max_order) : max_order_(max_order) {
    if (max_order < 0) throw Error("jet order must be non-negative");
}

std::optional<int> JetVariableFamily::order_of(const std::string& name) {
    if (name.size() < 2 || name.size() > 8 || name[0] != 'u') return std::nullopt;
    if (name[1] == '0' && name.size() > 2) return std::nullopt;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    }
    return std::stoi(name.substr(1));
}

bool JetVariableFamily::contains(const std::string& name) const {
    if (name == x()) return true;
    const auto k = order_of(name);
    return k && *k <= max_order_;
}

int jet_order(const Expr& e) {
    int top = -1;
    for (const auto& v : e.variables()) {
        if (const auto k = JetVariableFamily::order_of(v)) top = std::max(top, *k);
    }
    return top;
}

Expr total_derivative(const Expr& e, int max_order) {
    const JetVariableFamily family(max_order);
    for (const auto& v : e.variables()) {
        if (!family.contains(v)) throw Error("variable '" + v + "' is not a jet coordinate");
        if (v == JetVariableFamily::u(max_order)) {
            throw Error("order overflow: expression already mentions " + v);
        }
    }
    Expr d = partial(e, JetVariableFamily::x());
    for (int i = 0; i < max_order; ++i) {
        const Expr di = partial(e, JetVariableFamily::u(i));
        if (di.is_constant(0)) continue;
        d = d + Expr::variable(JetVariableFamily::u(i + 1)) * di;
    }
    return canonicalize(d);
}

Expr total_derivative_n(const Expr& e, int k) {
    Expr out = canonicalize(e);
    for (int i = 0; i < k; ++i) out = total_derivative(out, std::max(jet_order(out), 0) + 1);
    return out;
}

}  // namespace multijet
