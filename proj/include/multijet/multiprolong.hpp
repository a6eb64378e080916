#pragma once

// Infinitesimal generators prolonged to multispace: the determinant formula,
// the Delta/Delta x recursion, and an exact finite-action eps-derivative.

#include "multijet/deltaop.hpp"
#include "multijet/jetoracle.hpp"
#include "multijet/lattice.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace multijet {

/// (x, u) -> (xtilde(x,u;eps), utilde(x,u;eps)), rational in eps.
struct OneParamAction {
    Expr xtilde;
    Expr utilde;
    std::string eps = "eps";
    std::string name;

    /// Throws Error on variables other than x, u and eps.
    OneParamAction(Expr xtilde, Expr utilde, std::string eps = "eps", std::string name = "");
};

/// Verifies the action is the identity at eps = 0 and returns
/// (d/deps xtilde|0, d/deps utilde|0).
VectorField check_action_consistency(const OneParamAction& action);

/// Built-in actions: scaling, translation, projective, rotation-cayley.
/// "rotation" has no eps-rational form and throws; use named_field instead.
OneParamAction named_action(const std::string& name);
/// Generators of the built-in actions, including "rotation" (xi = -u, phi = x).
VectorField named_field(const std::string& name);
std::vector<std::string> named_action_names();

struct ProlongationResult {
    int order = 0;
    std::string method;
    std::vector<ExactScalar> xi;                // xi^(k)_(k)
    std::vector<ExactScalar> phi;               // phi^(k)_(k)
    std::vector<std::vector<ExactScalar>> mu;   // mu^(k)_l, l = 0..k
    std::vector<ExactScalar> phibracket;        // phi^(k)_[k]
    /// phi^(k)_[k] at every basepoint r (recursive method only).
    std::vector<std::vector<ExactScalar>> phibracket_tableau;
};

/// Divided-difference tableaux of the pointwise values xi(x_i, u_i) and phi(x_i, u_i).
std::pair<DividedDifferenceTableau, DividedDifferenceTableau> sample_field(const VectorField& vf,
                                                                           const PointedCurveSamples& samples);

/// phi^(k)_[k] = phi^(k)_(k) - (1/k!) sum_l mu^(k)_l (l x^(l-1) xi)^(k)_(k). The
/// l = 0 summand vanishes; include_l0 adds it anyway.
ExactScalar infinitesimal_direct(const VectorField& vf, const PointedCurveSamples& samples, int k,
                                 bool include_l0 = false);

/// All orders 0..n through infinitesimal_direct.
ProlongationResult prolong_direct(const VectorField& vf, const PointedCurveSamples& samples, int n);

/// phi^(k+1)_[k+1] = Delta/Delta x[phi^(k)_[k]] - u^(k+1)_(k+1) (S^(k+1) - id)[xi] / (x_(k+1) - x_0),
/// evaluated over the full triangle of basepoints.
ProlongationResult infinitesimal_recursive(const VectorField& vf, const PointedCurveSamples& samples, int n);

/// d/deps at 0 of k! d(utilde, xtilde^k) / d(xtilde) on the first k + 1 points,
/// carried out over rational functions of eps.
ExactScalar finite_action_derivative(const OneParamAction& action, const PointedCurveSamples& samples, int k);

/// All orders 0..n through finite_action_derivative; xi, phi and mu come from
/// the generator of the action.
ProlongationResult prolong_finite_action(const OneParamAction& action, const PointedCurveSamples& samples, int n);

}  // namespace multijet
