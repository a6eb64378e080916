#pragma once

// Classical prolongation of a planar vector field to jet space, in three
// independently implemented formulations.

#include "multijet/expr.hpp"

#include <string>
#include <vector>

namespace multijet {

/// xi(x,u) d/dx + phi(x,u) d/du.
struct VectorField {
    Expr xi;
    Expr phi;

    /// Throws Error if either component mentions anything besides x and u.
    VectorField(Expr xi, Expr phi);
    static VectorField parse(std::string_view xi, std::string_view phi);
};

/// a*vf1 + b*vf2, componentwise.
VectorField combine(const ExactScalar& a, const VectorField& vf1, const ExactScalar& b, const VectorField& vf2);

/// Components phi_[0], ..., phi_[n] over the jet coordinates x, u0, u1, ....
struct ProlongedVectorField {
    int order = 0;
    std::vector<Expr> components;
    std::string method;

    const Expr& operator[](int k) const { return components.at(static_cast<std::size_t>(k)); }
};

inline constexpr int kDefaultJetOrderCap = 8;

/// phi_[k] = D_x phi_[k-1] - u_k D_x xi.
ProlongedVectorField jet_prolong_recursive(const VectorField& vf, int n, int cap = kDefaultJetOrderCap);
/// phi_[k] = D_x^k phi - sum_{i=1}^k C(k, i-1) u_i D_x^{k-i+1} xi.
ProlongedVectorField jet_prolong_expanded(const VectorField& vf, int n, int cap = kDefaultJetOrderCap);
/// phi_[k] = D_x^k [phi - u_1 xi] + u_{k+1} xi.
ProlongedVectorField jet_prolong_characteristic(const VectorField& vf, int n, int cap = kDefaultJetOrderCap);

/// Rewrites u as u0 so that (x, u) expressions live on the jet family.
Expr to_jet_coordinates(const Expr& e);

/// Evaluates a jet expression at x with u0 = jet[0], u1 = jet[1], ....
ExactScalar eval_on_jet(const Expr& e, const ExactScalar& x, const std::vector<ExactScalar>& jet);

/// The values u(x), u'(x), ..., u^(n)(x) of a curve expression in `var`.
std::vector<ExactScalar> curve_jet(const Expr& curve, const ExactScalar& x, int n, const std::string& var = "x");

}  // namespace multijet
