#include "multijet/jetoracle.hpp"

#include "multijet/jet.hpp"
#include "multijet/normal_form.hpp"

namespace multijet {

namespace {

void require_planar(const Expr& e, const char* which) {
    for (const auto& v : e.variables()) {
        if (v != "x" && v != "u") {
            throw Error(std::string(which) + " mentions '" + v + "'; vector fields may only use x and u");
        }
    }
}

void check_order(int n, int cap) {
    if (n < 0) throw Error("prolongation order must be non-negative");
    if (n > cap) throw Error("order " + std::to_string(n) + " exceeds the jet order cap " + std::to_string(cap));
}

Expr D(const Expr& e) { return total_derivative_n(e, 1); }

Expr u(int k) { return Expr::variable(JetVariableFamily::u(k)); }

}  // namespace

VectorField::VectorField(Expr xi_, Expr phi_) : xi(std::move(xi_)), phi(std::move(phi_)) {
    require_planar(xi, "xi");
    require_planar(phi, "phi");
}

VectorField VectorField::parse(std::string_view xi, std::string_view phi) {
    return VectorField(multijet::parse(xi), multijet::parse(phi));
}

VectorField combine(const ExactScalar& a, const VectorField& vf1, const ExactScalar& b, const VectorField& vf2) {
    const Expr ca = Expr::constant(a);
    const Expr cb = Expr::constant(b);
    return VectorField(canonicalize(ca * vf1.xi + cb * vf2.xi), canonicalize(ca * vf1.phi + cb * vf2.phi));
}

Expr to_jet_coordinates(const Expr& e) { return canonicalize(substitute(e, "u", u(0))); }

ProlongedVectorField jet_prolong_recursive(const VectorField& vf, int n, int cap) {
    check_order(n, cap);
    ProlongedVectorField out{n, {}, "recursive"};
    const Expr dxi = D(to_jet_coordinates(vf.xi));
    out.components.push_back(to_jet_coordinates(vf.phi));
    for (int k = 1; k <= n; ++k) {
        out.components.push_back(canonicalize(D(out.components.back()) - u(k) * dxi));
    }
    return out;
}

ProlongedVectorField jet_prolong_expanded(const VectorField& vf, int n, int cap) {
    check_order(n, cap);
    ProlongedVectorField out{n, {}, "expanded"};
    // Dphi[j] = D^j phi, Dxi[j] = D^j xi.
    std::vector<Expr> dphi{to_jet_coordinates(vf.phi)};
    std::vector<Expr> dxi{to_jet_coordinates(vf.xi)};
    for (int j = 1; j <= n; ++j) {
        dphi.push_back(D(dphi.back()));
        dxi.push_back(D(dxi.back()));
    }
    for (int k = 0; k <= n; ++k) {
        Expr sum = dphi[static_cast<std::size_t>(k)];
        for (int i = 1; i <= k; ++i) {
            const ExactScalar c = ExactScalar::binomial(static_cast<unsigned>(k), static_cast<unsigned>(i - 1));
            sum = sum - Expr::constant(c) * u(i) * dxi[static_cast<std::size_t>(k - i + 1)];
        }
        out.components.push_back(canonicalize(sum));
    }
    return out;
}

ProlongedVectorField jet_prolong_characteristic(const VectorField& vf, int n, int cap) {
    check_order(n, cap);
    ProlongedVectorField out{n, {}, "characteristic"};
    const Expr xi = to_jet_coordinates(vf.xi);
    Expr q = canonicalize(to_jet_coordinates(vf.phi) - u(1) * xi);
    for (int k = 0; k <= n; ++k) {
        out.components.push_back(canonicalize(q + u(k + 1) * xi));
        if (k < n) q = D(q);
    }
    return out;
}

ExactScalar eval_on_jet(const Expr& e, const ExactScalar& x, const std::vector<ExactScalar>& jet) {
    Binding b{{"x", x}};
    for (std::size_t k = 0; k < jet.size(); ++k) b[JetVariableFamily::u(static_cast<int>(k))] = jet[k];
    return eval(e, b);
}

std::vector<ExactScalar> curve_jet(const Expr& curve, const ExactScalar& x, int n, const std::string& var) {
    std::vector<ExactScalar> out;
    const Binding b{{var, x}};
    Expr d = curve;
    for (int k = 0; k <= n; ++k) {
        out.push_back(eval(d, b));
        if (k < n) d = canonicalize(partial(d, var));
    }
    return out;
}

}  // namespace multijet
