#include "multijet/io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace multijet {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(trim(field));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

struct Row {
    int line;
    std::vector<std::string> fields;
};

// Data rows with their line numbers; a first row whose leading field is not
// numeric is taken as a header.
std::vector<Row> data_rows(const std::string& text) {
    std::vector<Row> rows;
    std::stringstream ss(text);
    std::string line;
    int number = 0;
    bool first = true;
    while (std::getline(ss, line)) {
        ++number;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto fields = split_fields(t);
        if (first) {
            first = false;
            try {
                (void)ExactScalar::parse(fields[0]);
            } catch (const Error&) {
                continue;
            }
        }
        rows.push_back({number, std::move(fields)});
    }
    return rows;
}

ExactScalar scalar_at(const Row& row, std::size_t i, const char* what) {
    if (i >= row.fields.size()) throw IoError("line " + std::to_string(row.line) + ": missing " + what);
    try {
        return ExactScalar::parse(row.fields[i]);
    } catch (const Error& e) {
        throw IoError("line " + std::to_string(row.line) + ": bad " + what + " '" + row.fields[i] + "': " + e.what());
    }
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
}

PointedCurveSamples parse_samples_csv(const std::string& text) {
    std::vector<ExactScalar> xs;
    std::vector<ExactScalar> us;
    std::map<ExactScalar, int> seen;
    for (const Row& row : data_rows(text)) {
        if (row.fields.size() != 2) {
            throw IoError("line " + std::to_string(row.line) + ": expected 2 fields (x,u), got " +
                          std::to_string(row.fields.size()));
        }
        ExactScalar x = scalar_at(row, 0, "x");
        auto [it, inserted] = seen.try_emplace(x, row.line);
        if (!inserted) {
            throw IoError("duplicate x = " + x.to_string() + " on lines " + std::to_string(it->second) + " and " +
                          std::to_string(row.line));
        }
        xs.push_back(std::move(x));
        us.push_back(scalar_at(row, 1, "u"));
    }
    if (xs.empty()) throw IoError("no sample rows");
    return PointedCurveSamples(Lattice::make(std::move(xs)), std::move(us));
}

PointedCurveSamples read_samples_csv(const std::string& path) { return parse_samples_csv(read_file(path)); }

ConfluentSamples parse_confluent_csv(const std::string& text) {
    std::vector<ConfluentNode> nodes;
    std::map<ExactScalar, int> seen;
    for (const Row& row : data_rows(text)) {
        ConfluentNode n;
        n.x = scalar_at(row, 0, "x");
        const ExactScalar mult = scalar_at(row, 1, "multiplicity");
        if (!mult.is_integer() || mult.sign() <= 0 || mult > ExactScalar(64)) {
            throw IoError("line " + std::to_string(row.line) + ": multiplicity must be a positive integer");
        }
        n.multiplicity = static_cast<int>(mult.numerator().get_si());
        if (row.fields.size() != static_cast<std::size_t>(2 + n.multiplicity)) {
            throw IoError("line " + std::to_string(row.line) + ": multiplicity " + std::to_string(n.multiplicity) +
                          " needs " + std::to_string(n.multiplicity) + " derivative values, got " +
                          std::to_string(row.fields.size() - 2));
        }
        for (int d = 0; d < n.multiplicity; ++d) {
            n.derivatives.push_back(scalar_at(row, static_cast<std::size_t>(2 + d), "derivative"));
        }
        auto [it, inserted] = seen.try_emplace(n.x, row.line);
        if (!inserted) {
            throw IoError("duplicate x = " + n.x.to_string() + " on lines " + std::to_string(it->second) + " and " +
                          std::to_string(row.line));
        }
        nodes.push_back(std::move(n));
    }
    if (nodes.empty()) throw IoError("no sample rows");
    return ConfluentSamples(std::move(nodes));
}

ConfluentSamples read_confluent_csv(const std::string& path) { return parse_confluent_csv(read_file(path)); }

Json scalars_to_json(const std::vector<ExactScalar>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(x.to_string());
    return a;
}

Json rows_to_json(const std::vector<std::vector<ExactScalar>>& rows) {
    Json a = Json::array();
    for (const auto& r : rows) a.push_back(scalars_to_json(r));
    return a;
}

Json to_json(const ProlongationResult& r) {
    Json j;
    j["order"] = r.order;
    j["method"] = r.method;
    j["xi"] = scalars_to_json(r.xi);
    j["phi"] = scalars_to_json(r.phi);
    j["mu"] = rows_to_json(r.mu);
    j["phibracket"] = scalars_to_json(r.phibracket);
    if (!r.phibracket_tableau.empty()) j["phibracket_tableau"] = rows_to_json(r.phibracket_tableau);
    return j;
}

Json to_json(const ProlongedVectorField& p) {
    Json a = Json::array();
    for (const auto& c : p.components) a.push_back(c.to_string());
    return a;
}

Json to_json(const CoalesceReport& r) {
    Json j;
    j["quantity"] = r.quantity;
    j["h"] = scalars_to_json(r.h);
    j["value"] = scalars_to_json(r.values);
    j["limit"] = to_decimal(r.estimate.value);
    j["first_sweep_limit"] = to_decimal(r.estimate.first_sweep);
    j["raw_limit"] = to_decimal(r.estimate.raw);
    if (r.estimate.order) {
        j["order"] = *r.estimate.order;
    } else {
        j["order"] = nullptr;
    }
    j["oracle"] = r.oracle.to_string();
    j["pass"] = r.pass;
    j["exact"] = r.estimate.exact;
    j["divergent"] = r.estimate.divergent;
    j["onset"] = r.estimate.onset;
    Json res = Json::array();
    for (const auto& e : r.estimate.residuals) res.push_back(to_decimal(e, 6));
    j["residuals"] = res;
    j["precision_bits"] = r.estimate.precision_bits;
    j["tolerance"] = {{"absolute", r.tolerance.absolute},
                      {"relative", r.tolerance.relative},
                      {"min_order", r.tolerance.min_order}};
    j["note"] = r.note;
    return j;
}

std::string to_csv(const ProlongationResult& r) {
    std::ostringstream os;
    os << "k,xi,phi,phibracket";
    for (int l = 0; l <= r.order; ++l) os << ",mu" << l;
    os << "\n";
    for (int k = 0; k <= r.order; ++k) {
        const auto i = static_cast<std::size_t>(k);
        os << k << "," << r.xi[i] << "," << r.phi[i] << "," << r.phibracket[i];
        for (int l = 0; l <= r.order; ++l) {
            os << ",";
            if (l <= k) os << r.mu[i][static_cast<std::size_t>(l)];
        }
        os << "\n";
    }
    return os.str();
}

std::string to_csv(const CoalesceReport& r) {
    std::ostringstream os;
    os << "m,h,value,residual\n";
    for (std::size_t m = 0; m < r.values.size(); ++m) {
        os << m << "," << r.h[m] << "," << r.values[m] << "," << to_decimal(r.estimate.residuals[m], 6) << "\n";
    }
    return os.str();
}

}  // namespace multijet
