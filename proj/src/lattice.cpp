#include "multijet/lattice.hpp"

#include <map>

namespace multijet {

Lattice Lattice::make(std::vector<ExactScalar> xs) {
    std::map<ExactScalar, std::size_t> seen;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        auto [it, inserted] = seen.try_emplace(xs[i], i);
        if (!inserted) {
            throw LatticeError("duplicate lattice point " + xs[i].to_string() + " at indices " +
                               std::to_string(it->second) + " and " + std::to_string(i));
        }
    }
    return Lattice(std::move(xs));
}

Lattice Lattice::prefix(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= points_.size()) {
        throw LatticeError("order " + std::to_string(k) + " exceeds lattice order " + std::to_string(order()));
    }
    return Lattice(std::vector<ExactScalar>(points_.begin(), points_.begin() + k + 1));
}

bool Lattice::is_uniform() const {
    if (points_.size() < 3) return true;
    const ExactScalar h = points_[1] - points_[0];
    for (std::size_t i = 2; i < points_.size(); ++i) {
        if (points_[i] - points_[i - 1] != h) return false;
    }
    return true;
}

PointedCurveSamples::PointedCurveSamples(Lattice lat, std::vector<ExactScalar> u)
    : lattice(std::move(lat)), uvalues(std::move(u)) {
    if (uvalues.size() != lattice.size()) {
        throw LatticeError("sample count " + std::to_string(uvalues.size()) + " does not match lattice size " +
                           std::to_string(lattice.size()));
    }
}

PointedCurveSamples PointedCurveSamples::prefix(int k) const {
    return PointedCurveSamples(lattice.prefix(k), std::vector<ExactScalar>(uvalues.begin(), uvalues.begin() + k + 1));
}

PointedCurveSamples sample_curve(const Expr& curve, const Lattice& lat, const std::string& var) {
    std::vector<ExactScalar> u;
    u.reserve(lat.size());
    Binding b;
    for (const auto& x : lat.points()) {
        b[var] = x;
        u.push_back(eval(curve, b));
    }
    return PointedCurveSamples(lat, std::move(u));
}

ConfluentSamples::ConfluentSamples(std::vector<ConfluentNode> ns) : nodes(std::move(ns)) {
    std::map<ExactScalar, std::size_t> seen;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const ConfluentNode& n = nodes[i];
        if (n.multiplicity < 1) throw LatticeError("multiplicity must be at least 1 at node " + std::to_string(i));
        if (static_cast<int>(n.derivatives.size()) < n.multiplicity) {
            throw LatticeError("missing derivative data at x = " + n.x.to_string() + ": multiplicity " +
                               std::to_string(n.multiplicity) + " needs " + std::to_string(n.multiplicity) +
                               " values, got " + std::to_string(n.derivatives.size()));
        }
        auto [it, inserted] = seen.try_emplace(n.x, i);
        if (!inserted) {
            throw LatticeError("abscissa " + n.x.to_string() + " listed at nodes " + std::to_string(it->second) +
                               " and " + std::to_string(i) + "; merge them into one node");
        }
    }
}

int ConfluentSamples::point_count() const {
    int total = 0;
    for (const auto& n : nodes) total += n.multiplicity;
    return total;
}

// ---------------------------------------------------------------------------

ExactScalar vdet(const Lattice& lat) {
    return bareiss_determinant(vandermonde_matrix<ExactScalar>(lat.points()));
}

ExactScalar vdet_product(const Lattice& lat) {
    ExactScalar p(1);
    for (std::size_t j = 0; j < lat.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) p *= lat[j] - lat[i];
    }
    return p;
}

namespace {

void check_column(const Lattice& lat, std::span<const ExactScalar> col, int l) {
    if (l < 0 || l > lat.order()) {
        throw LatticeError("column index " + std::to_string(l) + " out of range 0.." + std::to_string(lat.order()));
    }
    if (col.size() != lat.size()) {
        throw LatticeError("replacement column has " + std::to_string(col.size()) + " entries, expected " +
                           std::to_string(lat.size()));
    }
}

}  // namespace

ExactScalar vdet_replace(const Lattice& lat, std::span<const ExactScalar> col, int l) {
    check_column(lat, col, l);
    return vandermonde_replace_det<ExactScalar>(lat.points(), col, static_cast<std::size_t>(l));
}

ExactScalar vdet_replace2(const Lattice& lat, std::span<const ExactScalar> u, int i, std::span<const ExactScalar> v,
                          int j) {
    check_column(lat, u, i);
    check_column(lat, v, j);
    if (i == j) throw LatticeError("replacement columns collide at index " + std::to_string(i));
    Matrix<ExactScalar> m = vandermonde_matrix<ExactScalar>(lat.points());
    for (std::size_t r = 0; r < lat.size(); ++r) {
        m[r][static_cast<std::size_t>(i)] = u[r];
        m[r][static_cast<std::size_t>(j)] = v[r];
    }
    return bareiss_determinant(std::move(m));
}

// ---------------------------------------------------------------------------

std::vector<ExactScalar> dd_recursive_prefixes(const PointedCurveSamples& samples) {
    // level[j] holds [z_0, ..., z_{i-1}, z_j] after pass i.
    std::vector<ExactScalar> level = samples.uvalues;
    const auto& x = samples.lattice.points();
    const std::size_t n = level.size();
    std::vector<ExactScalar> out;
    out.reserve(n);
    if (n == 0) return out;
    out.push_back(level[0]);
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = n - 1; j >= i; --j) {
            level[j] = (level[j] - level[i - 1]) / (x[j] - x[i - 1]);
        }
        out.push_back(level[i]);
    }
    return out;
}

ExactScalar dd_recursive(const PointedCurveSamples& samples) {
    if (samples.size() == 0) throw LatticeError("empty sample set");
    return dd_recursive_prefixes(samples).back();
}

std::vector<ExactScalar> dd_confluent_prefixes(const ConfluentSamples& cs) {
    struct Point {
        ExactScalar x;
        const ConfluentNode* node;
    };
    std::vector<Point> z;
    for (const auto& n : cs.nodes) {
        for (int m = 0; m < n.multiplicity; ++m) z.push_back({n.x, &n});
    }
    const std::size_t n = z.size();
    std::vector<ExactScalar> out;
    if (n == 0) return out;
    // column[i] holds [z_i, ..., z_{i+j}] at pass j.
    std::vector<ExactScalar> column(n);
    for (std::size_t i = 0; i < n; ++i) column[i] = z[i].node->derivatives[0];
    out.push_back(column[0]);
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i + j < n; ++i) {
            if (z[i].x == z[i + j].x) {
                column[i] = z[i].node->derivatives[j] / ExactScalar::factorial(static_cast<unsigned>(j));
            } else {
                column[i] = (column[i + 1] - column[i]) / (z[i + j].x - z[i].x);
            }
        }
        out.push_back(column[0]);
    }
    return out;
}

ExactScalar dd_confluent(const ConfluentSamples& cs) {
    if (cs.nodes.empty()) throw LatticeError("empty confluent sample set");
    return dd_confluent_prefixes(cs).back();
}

namespace {

Expr newton_form(const std::vector<ExactScalar>& coeffs, const std::vector<ExactScalar>& nodes, const std::string& var) {
    Expr out = Expr::constant(ExactScalar(0));
    Expr basis = Expr::constant(ExactScalar(1));
    const Expr x = Expr::variable(var);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        out = out + Expr::constant(coeffs[k]) * basis;
        if (k < nodes.size()) basis = basis * (x - Expr::constant(nodes[k]));
    }
    return out;
}

}  // namespace

Expr newton_interpolant(const PointedCurveSamples& samples, const std::string& var) {
    return newton_form(dd_recursive_prefixes(samples), samples.lattice.points(), var);
}

Expr hermite_interpolant(const ConfluentSamples& cs, const std::string& var) {
    std::vector<ExactScalar> nodes;
    for (const auto& n : cs.nodes) {
        for (int m = 0; m < n.multiplicity; ++m) nodes.push_back(n.x);
    }
    return newton_form(dd_confluent_prefixes(cs), nodes, var);
}

std::vector<ExactScalar> interpolant_coefficients(const PointedCurveSamples& samples) {
    const std::vector<ExactScalar> c = dd_recursive_prefixes(samples);
    const auto& x = samples.lattice.points();
    std::vector<ExactScalar> result(c.size(), ExactScalar(0));
    std::vector<ExactScalar> basis{ExactScalar(1)};  // prod_{j<k} (x - x_j), ascending powers
    for (std::size_t k = 0; k < c.size(); ++k) {
        for (std::size_t p = 0; p < basis.size(); ++p) result[p] += c[k] * basis[p];
        std::vector<ExactScalar> next(basis.size() + 1, ExactScalar(0));
        for (std::size_t p = 0; p < basis.size(); ++p) {
            next[p + 1] += basis[p];
            next[p] -= x[k] * basis[p];
        }
        basis = std::move(next);
    }
    return result;
}

ExactScalar multispace_coord(const PointedCurveSamples& samples, int k) {
    const PointedCurveSamples window = samples.prefix(k);
    const ExactScalar num = vdet_replace(window.lattice, window.uvalues, k);
    return ExactScalar::factorial(static_cast<unsigned>(k)) * num / vdet(window.lattice);
}

ExactScalar mu(const PointedCurveSamples& samples, int k, int l) {
    if (l < 0 || l > k) throw LatticeError("mu column " + std::to_string(l) + " outside 0.." + std::to_string(k));
    const PointedCurveSamples window = samples.prefix(k);
    const ExactScalar num = vdet_replace(window.lattice, window.uvalues, l);
    return ExactScalar::factorial(static_cast<unsigned>(k)) * num / vdet(window.lattice);
}

DividedDifferenceTableau::DividedDifferenceTableau(const PointedCurveSamples& samples) {
    const auto& x = samples.lattice.points();
    const std::size_t n = samples.size();
    if (n == 0) throw LatticeError("empty sample set");
    rows_.push_back(samples.uvalues);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const auto& prev = rows_.back();
        std::vector<ExactScalar> next;
        next.reserve(prev.size() - 1);
        for (std::size_t r = 0; r + 1 < prev.size(); ++r) {
            next.push_back(ExactScalar(static_cast<long>(k + 1)) * (prev[r + 1] - prev[r]) / (x[k + 1 + r] - x[r]));
        }
        rows_.push_back(std::move(next));
    }
}

}  // namespace multijet
