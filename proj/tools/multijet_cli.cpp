// Command-line front end: interpolation, jet and multispace prolongation,
// verification suites and coalescent-limit reports.

#include "multijet/coalesce.hpp"
#include "multijet/io.hpp"
#include "multijet/jetoracle.hpp"
#include "multijet/multiprolong.hpp"
#include "multijet/normal_form.hpp"
#include "multijet/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace multijet;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;

struct Global {
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 20240101;
    unsigned precision_bits = kDefaultPrecisionBits;
};

struct FieldArgs {
    std::string xi;
    std::string phi;
    std::string action;

    void add(CLI::App* cmd) {
        cmd->add_option("--xi", xi, "xi(x,u)");
        cmd->add_option("--phi", phi, "phi(x,u)");
        cmd->add_option("--action", action, "built-in action: scaling, translation, projective, rotation, rotation-cayley");
    }

    VectorField field() const {
        if (!action.empty()) {
            if (!xi.empty() || !phi.empty()) throw CLI::ValidationError("--action excludes --xi/--phi");
            return named_field(action);
        }
        if (xi.empty() || phi.empty()) throw CLI::ValidationError("give --xi and --phi, or --action");
        return VectorField::parse(xi, phi);
    }
};

void emit(const Global& g, const Json& j, const std::string& csv) {
    if (g.format == "csv") {
        if (csv.empty()) throw CLI::ValidationError("this command has no CSV form; use --format json");
        write_output(g.out, csv);
    } else {
        write_output(g.out, j.dump(2) + "\n");
    }
}

std::vector<ExactScalar> parse_scalar_list(const std::string& text) {
    std::vector<ExactScalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(ExactScalar::parse(item));
    return out;
}

// ---------------------------------------------------------------------------

int cmd_interp(const Global& g, const std::string& file, bool confluent) {
    Json j;
    bool ok = true;
    std::ostringstream csv;
    if (confluent) {
        const ConfluentSamples cs = read_confluent_csv(file);
        const Expr p = hermite_interpolant(cs);
        j["newton"] = p.to_string();
        j["monomial"] = canonical_string(p);
        for (const auto& n : cs.nodes) {
            Expr d = p;
            for (int m = 0; m < n.multiplicity; ++m) {
                ok = ok && eval(d, {{"x", n.x}}) == n.derivatives[static_cast<std::size_t>(m)];
                d = partial(d, "x");
            }
        }
        j["divided_differences"] = scalars_to_json(dd_confluent_prefixes(cs));
    } else {
        const PointedCurveSamples s = read_samples_csv(file);
        const Expr p = newton_interpolant(s);
        j["newton"] = p.to_string();
        j["monomial"] = canonical_string(p);
        const auto coeffs = interpolant_coefficients(s);
        j["coefficients"] = scalars_to_json(coeffs);
        j["divided_differences"] = scalars_to_json(dd_recursive_prefixes(s));
        csv << "power,coefficient\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i) csv << i << "," << coeffs[i] << "\n";
        for (std::size_t i = 0; i < s.size(); ++i) ok = ok && eval(p, {{"x", s.lattice[i]}}) == s.uvalues[i];
    }
    j["roundtrip"] = ok;
    emit(g, j, csv.str());
    return ok ? kPass : kCheckFailure;
}

int cmd_prolong_jet(const Global& g, const FieldArgs& f, int order, bool all_forms, int cap) {
    const VectorField vf = f.field();
    const auto rec = jet_prolong_recursive(vf, order, cap);
    Json j;
    std::ostringstream csv;
    bool agree = true;
    if (all_forms) {
        const auto exp = jet_prolong_expanded(vf, order, cap);
        const auto chr = jet_prolong_characteristic(vf, order, cap);
        for (int k = 0; k <= order; ++k) agree = agree && equal(rec[k], exp[k]) && equal(rec[k], chr[k]);
        j["recursive"] = to_json(rec);
        j["expanded"] = to_json(exp);
        j["characteristic"] = to_json(chr);
        j["agree"] = agree;
        csv << "k,recursive,expanded,characteristic\n";
        for (int k = 0; k <= order; ++k) csv << k << ",\"" << rec[k] << "\",\"" << exp[k] << "\",\"" << chr[k] << "\"\n";
    } else {
        j = to_json(rec);
        csv << "k,phi\n";
        for (int k = 0; k <= order; ++k) csv << k << ",\"" << rec[k] << "\"\n";
    }
    emit(g, j, csv.str());
    return agree ? kPass : kCheckFailure;
}

int cmd_prolong_multi(const Global& g, const FieldArgs& f, const std::string& file, int order,
                      const std::string& method) {
    const PointedCurveSamples s = read_samples_csv(file);
    if (order > s.lattice.order()) {
        throw LatticeError("order " + std::to_string(order) + " exceeds lattice order " + std::to_string(s.lattice.order()));
    }
    if (method == "finite-action") {
        if (f.action.empty()) throw CLI::ValidationError("--method finite-action needs --action");
        const auto r = prolong_finite_action(named_action(f.action), s, order);
        emit(g, to_json(r), to_csv(r));
        return kPass;
    }
    const VectorField vf = f.field();
    if (method == "direct") {
        const auto r = prolong_direct(vf, s, order);
        emit(g, to_json(r), to_csv(r));
        return kPass;
    }
    if (method == "recursive") {
        const auto r = infinitesimal_recursive(vf, s, order);
        emit(g, to_json(r), to_csv(r));
        return kPass;
    }
    const auto d = prolong_direct(vf, s, order);
    const auto r = infinitesimal_recursive(vf, s, order);
    const bool agree = d.phibracket == r.phibracket;
    Json j;
    j["direct"] = to_json(d);
    j["recursive"] = to_json(r);
    j["agree"] = agree;
    emit(g, j, to_csv(d) + to_csv(r));
    return agree ? kPass : kCheckFailure;
}

int cmd_verify(const Global& g, VerifyConfig cfg) {
    cfg.seed = g.seed;
    cfg.precision_bits = g.precision_bits;
    const VerifyReport r = run_verify(cfg);
    std::ostringstream csv;
    csv << "suite,check,trials,passed,pass\n";
    for (const auto& c : r.checks) {
        csv << c.suite << ",\"" << c.name << "\"," << c.trials << "," << c.passed << "," << (c.pass() ? "true" : "false") << "\n";
    }
    emit(g, to_json(r), csv.str());
    return r.pass() ? kPass : kCheckFailure;
}

int cmd_coalesce(const Global& g, const FieldArgs& f, const std::string& curve_text, const std::string& x_text, int order,
                 const std::string& h0, int steps, const std::string& offsets, const std::string& quantity) {
    const Expr curve = parse(curve_text);
    for (const auto& v : curve.variables()) {
        if (v != "x") throw CLI::ValidationError("--curve may only mention x, found '" + v + "'");
    }
    const ExactScalar x = ExactScalar::parse(x_text);
    CoalescenceSchedule sched = CoalescenceSchedule::standard(x, order, ExactScalar::parse(h0), steps);
    if (!offsets.empty()) sched.offsets = parse_scalar_list(offsets);
    const CoalesceReport r = quantity == "coord" ? verify_coord_limit(curve, x, order, sched, g.precision_bits)
                                                 : verify_infinitesimal_limit(f.field(), curve, x, order, sched, g.precision_bits);
    emit(g, to_json(r), to_csv(r));
    return r.pass ? kPass : kCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact prolonged infinitesimals on the multispace of curves"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--out", g.out, "output file (default stdout)");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--precision-bits", g.precision_bits, "float precision for extrapolation")
        ->check(CLI::Range(kMinPrecisionBits, 100000u));

    std::string file;
    bool confluent = false;
    auto* interp = app.add_subcommand("interp", "Newton and monomial interpolant of a sample file");
    interp->add_option("samples", file, "CSV with rows x,u (or x,mult,u,u',... with --confluent)")->required();
    interp->add_flag("--confluent", confluent, "read repeated abscissas with derivative data");

    FieldArgs jet_field;
    int jet_order = 3;
    int cap = kDefaultJetOrderCap;
    bool all_forms = false;
    auto* pjet = app.add_subcommand("prolong-jet", "jet-space prolongation phi_[0..n]");
    jet_field.add(pjet);
    pjet->add_option("--order", jet_order, "prolongation order")->check(CLI::NonNegativeNumber);
    pjet->add_option("--cap", cap, "jet order cap")->check(CLI::NonNegativeNumber);
    pjet->add_flag("--all-forms", all_forms, "print all three formulations and compare them");

    FieldArgs multi_field;
    std::string multi_file;
    int multi_order = 1;
    std::string method = "recursive";
    auto* pmulti = app.add_subcommand("prolong-multi", "multispace infinitesimals on a sample file");
    multi_field.add(pmulti);
    pmulti->add_option("samples", multi_file, "CSV with rows x,u")->required();
    pmulti->add_option("--order", multi_order, "prolongation order")->check(CLI::NonNegativeNumber);
    pmulti->add_option("--method", method, "direct, recursive, both or finite-action")
        ->check(CLI::IsMember({"direct", "recursive", "both", "finite-action"}));

    VerifyConfig vcfg;
    auto* verify = app.add_subcommand("verify", "randomized verification suites");
    verify->add_option("--suite", vcfg.suite, "all, identities, oracles or coalesce")
        ->check(CLI::IsMember({"all", "identities", "oracles", "coalesce"}));
    verify->add_option("--trials", vcfg.trials, "trials per randomized check")->check(CLI::PositiveNumber);
    verify->add_option("--threads", vcfg.threads, "worker threads (0: all cores)");

    FieldArgs co_field;
    std::string curve = "x^5";
    std::string xval = "1";
    int co_order = 1;
    std::string h0 = "1/8";
    int steps = 12;
    std::string offsets;
    std::string quantity = "infinitesimal";
    auto* co = app.add_subcommand("coalesce", "coalescent-limit convergence report");
    co_field.add(co);
    co->add_option("--curve", curve, "curve u(x)");
    co->add_option("--x", xval, "basepoint");
    co->add_option("--order", co_order, "order k")->check(CLI::NonNegativeNumber);
    co->add_option("--h0", h0, "initial spacing");
    co->add_option("--steps", steps, "number of halvings M")->check(CLI::Range(3, 60));
    co->add_option("--offsets", offsets, "comma-separated offsets t_0,...,t_n (default 0..k)");
    co->add_option("--quantity", quantity, "infinitesimal (phi_[k]) or coord (u^(k))")
        ->check(CLI::IsMember({"infinitesimal", "coord"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*interp) return cmd_interp(g, file, confluent);
        if (*pjet) return cmd_prolong_jet(g, jet_field, jet_order, all_forms, cap);
        if (*pmulti) return cmd_prolong_multi(g, multi_field, multi_file, multi_order, method);
        if (*verify) return cmd_verify(g, vcfg);
        if (*co) return cmd_coalesce(g, co_field, curve, xval, co_order, h0, steps, offsets, quantity);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error at offset " << e.offset() << ": " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
