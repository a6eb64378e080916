#include "multijet/multiprolong.hpp"

#include "multijet/normal_form.hpp"
#include "multijet/univariate.hpp"

namespace multijet {

OneParamAction::OneParamAction(Expr xt, Expr ut, std::string e, std::string n)
    : xtilde(std::move(xt)), utilde(std::move(ut)), eps(std::move(e)), name(std::move(n)) {
    for (const Expr* c : {&xtilde, &utilde}) {
        for (const auto& v : c->variables()) {
            if (v != "x" && v != "u" && v != eps) {
                throw Error("action mentions '" + v + "'; only x, u and " + eps + " are allowed");
            }
        }
    }
}

VectorField check_action_consistency(const OneParamAction& action) {
    const Expr zero = Expr::constant(ExactScalar(0));
    const Expr x0 = substitute(action.xtilde, action.eps, zero);
    const Expr u0 = substitute(action.utilde, action.eps, zero);
    if (!equal(x0, Expr::variable("x"))) {
        throw Error("action is not the identity at " + action.eps + " = 0: xtilde reduces to " + canonical_string(x0));
    }
    if (!equal(u0, Expr::variable("u"))) {
        throw Error("action is not the identity at " + action.eps + " = 0: utilde reduces to " + canonical_string(u0));
    }
    const Expr xi = canonicalize(substitute(partial(action.xtilde, action.eps), action.eps, zero));
    const Expr phi = canonicalize(substitute(partial(action.utilde, action.eps), action.eps, zero));
    return VectorField(xi, phi);
}

std::vector<std::string> named_action_names() { return {"scaling", "translation", "projective", "rotation-cayley"}; }

OneParamAction named_action(const std::string& name) {
    if (name == "scaling") return OneParamAction(parse("x/(1 + eps)"), parse("(1 + eps)*u"), "eps", name);
    if (name == "translation") return OneParamAction(parse("x + eps"), parse("u"), "eps", name);
    if (name == "projective") return OneParamAction(parse("x/(1 - eps*x)"), parse("u"), "eps", name);
    if (name == "rotation-cayley") {
        // Rotation by the angle 2*atan(eps/2): rational in eps, same generator as rotation.
        return OneParamAction(parse("((1 - eps^2/4)*x - eps*u)/(1 + eps^2/4)"),
                              parse("(eps*x + (1 - eps^2/4)*u)/(1 + eps^2/4)"), "eps", name);
    }
    if (name == "rotation") {
        throw Error("the rotation action is not rational in eps; use rotation-cayley or the generator (-u, x)");
    }
    throw Error("unknown action '" + name + "'");
}

VectorField named_field(const std::string& name) {
    if (name == "rotation") return VectorField(parse("-u"), parse("x"));
    return check_action_consistency(named_action(name));
}

std::pair<DividedDifferenceTableau, DividedDifferenceTableau> sample_field(const VectorField& vf,
                                                                           const PointedCurveSamples& samples) {
    std::vector<ExactScalar> xi;
    std::vector<ExactScalar> phi;
    Binding b;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        b["x"] = samples.lattice[i];
        b["u"] = samples.uvalues[i];
        xi.push_back(eval(vf.xi, b));
        phi.push_back(eval(vf.phi, b));
    }
    return {DividedDifferenceTableau(PointedCurveSamples(samples.lattice, std::move(xi))),
            DividedDifferenceTableau(PointedCurveSamples(samples.lattice, std::move(phi)))};
}

namespace {

void check_order(const PointedCurveSamples& samples, int k) {
    if (k < 0 || k > samples.lattice.order()) {
        throw LatticeError("order " + std::to_string(k) + " exceeds lattice order " +
                           std::to_string(samples.lattice.order()));
    }
}

std::vector<ExactScalar> field_values(const Expr& e, const PointedCurveSamples& samples) {
    std::vector<ExactScalar> out;
    Binding b;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        b["x"] = samples.lattice[i];
        b["u"] = samples.uvalues[i];
        out.push_back(eval(e, b));
    }
    return out;
}

ExactScalar direct_from_values(const PointedCurveSamples& window, const std::vector<ExactScalar>& xi,
                               const std::vector<ExactScalar>& phi, int k, bool include_l0) {
    const Lattice& lat = window.lattice;
    const ExactScalar phi_k = multispace_coord(PointedCurveSamples(lat, phi), k);
    ExactScalar sum(0);
    for (int l = include_l0 ? 0 : 1; l <= k; ++l) {
        std::vector<ExactScalar> w;
        w.reserve(lat.size());
        for (std::size_t i = 0; i < lat.size(); ++i) {
            w.push_back(l == 0 ? ExactScalar(0) : ExactScalar(static_cast<long>(l)) * lat[i].pow(l - 1) * xi[i]);
        }
        sum += mu(window, k, l) * multispace_coord(PointedCurveSamples(lat, std::move(w)), k);
    }
    return phi_k - sum / ExactScalar::factorial(static_cast<unsigned>(k));
}

void fill_common(ProlongationResult& res, const PointedCurveSamples& samples, const std::vector<ExactScalar>& xi,
                 const std::vector<ExactScalar>& phi, int n) {
    const PointedCurveSamples xs(samples.lattice, xi);
    const PointedCurveSamples ps(samples.lattice, phi);
    for (int k = 0; k <= n; ++k) {
        res.xi.push_back(multispace_coord(xs, k));
        res.phi.push_back(multispace_coord(ps, k));
        std::vector<ExactScalar> row;
        for (int l = 0; l <= k; ++l) row.push_back(mu(samples, k, l));
        res.mu.push_back(std::move(row));
    }
}

}  // namespace

ExactScalar infinitesimal_direct(const VectorField& vf, const PointedCurveSamples& samples, int k, bool include_l0) {
    check_order(samples, k);
    const PointedCurveSamples window = samples.prefix(k);
    return direct_from_values(window, field_values(vf.xi, window), field_values(vf.phi, window), k, include_l0);
}

ProlongationResult prolong_direct(const VectorField& vf, const PointedCurveSamples& samples, int n) {
    check_order(samples, n);
    ProlongationResult res;
    res.order = n;
    res.method = "direct";
    const std::vector<ExactScalar> xi = field_values(vf.xi, samples);
    const std::vector<ExactScalar> phi = field_values(vf.phi, samples);
    fill_common(res, samples, xi, phi, n);
    for (int k = 0; k <= n; ++k) {
        const PointedCurveSamples window = samples.prefix(k);
        const auto m = static_cast<std::size_t>(k) + 1;
        res.phibracket.push_back(direct_from_values(window, std::vector<ExactScalar>(xi.begin(), xi.begin() + m),
                                                    std::vector<ExactScalar>(phi.begin(), phi.begin() + m), k, false));
    }
    return res;
}

ProlongationResult infinitesimal_recursive(const VectorField& vf, const PointedCurveSamples& samples, int n) {
    check_order(samples, n);
    const Lattice& lat = samples.lattice;
    const std::vector<ExactScalar> xi = field_values(vf.xi, samples);
    const std::vector<ExactScalar> phi = field_values(vf.phi, samples);
    const DividedDifferenceTableau tu(samples);

    ProlongationResult res;
    res.order = n;
    res.method = "recursive";
    fill_common(res, samples, xi, phi, n);

    WindowFunction current;
    current.values = phi;
    current.provenance = "phi_[0]";
    res.phibracket_tableau.push_back(current.values);
    for (int k = 0; k < n; ++k) {
        WindowFunction next = delta(current, lat);
        const auto span = static_cast<std::size_t>(k) + 1;
        for (std::size_t r = 0; r < next.size(); ++r) {
            const ExactScalar step = (xi[r + span] - xi[r]) / (lat[r + span] - lat[r]);
            next.values[r] -= tu.at(k + 1, static_cast<int>(r)) * step;
        }
        next.provenance = "phi_[" + std::to_string(k + 1) + "]";
        res.phibracket_tableau.push_back(next.values);
        current = std::move(next);
    }
    for (const auto& row : res.phibracket_tableau) res.phibracket.push_back(row.front());
    return res;
}

ExactScalar finite_action_derivative(const OneParamAction& action, const PointedCurveSamples& samples, int k) {
    check_order(samples, k);
    std::map<std::string, URational, std::less<>> binding;
    binding[action.eps] = URational::variable();
    std::vector<URational> xt;
    std::vector<URational> ut;
    for (int i = 0; i <= k; ++i) {
        binding["x"] = URational(samples.lattice[static_cast<std::size_t>(i)]);
        binding["u"] = URational(samples.uvalues[static_cast<std::size_t>(i)]);
        xt.push_back(evaluate<URational>(action.xtilde, binding));
        ut.push_back(evaluate<URational>(action.utilde, binding));
    }
    const URational d = bareiss_determinant(vandermonde_matrix<URational>(xt));
    if (d.is_zero() || d.numerator().coeff(0).is_zero()) {
        throw Error("degenerate action: the transformed Vandermonde determinant vanishes at " + action.eps + " = 0");
    }
    const URational num = vandermonde_replace_det<URational>(xt, ut, static_cast<std::size_t>(k));
    const URational coord = URational(ExactScalar::factorial(static_cast<unsigned>(k))) * num / d;
    return coord.derivative_at_zero();
}

ProlongationResult prolong_finite_action(const OneParamAction& action, const PointedCurveSamples& samples, int n) {
    check_order(samples, n);
    const VectorField vf = check_action_consistency(action);
    ProlongationResult res;
    res.order = n;
    res.method = "finite-action";
    fill_common(res, samples, field_values(vf.xi, samples), field_values(vf.phi, samples), n);
    for (int k = 0; k <= n; ++k) res.phibracket.push_back(finite_action_derivative(action, samples, k));
    return res;
}

}  // namespace multijet
