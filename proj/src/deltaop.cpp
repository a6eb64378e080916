#include "multijet/deltaop.hpp"

#include <algorithm>

namespace multijet {

WindowFunction WindowFunction::from_tableau(const DividedDifferenceTableau& t, int k, std::string provenance) {
    WindowFunction w;
    w.order = k;
    w.values = t.row(k);
    w.provenance = provenance.empty() ? "T[" + std::to_string(k) + "]" : std::move(provenance);
    return w;
}

WindowFunction WindowFunction::from_samples(const PointedCurveSamples& s, std::string provenance) {
    WindowFunction w;
    w.values = s.uvalues;
    w.provenance = std::move(provenance);
    return w;
}

WindowFunction WindowFunction::constant(const ExactScalar& c, int order, std::size_t count) {
    WindowFunction w;
    w.order = order;
    w.values.assign(count, c);
    w.provenance = "const " + c.to_string();
    return w;
}

WindowFunction shift(const WindowFunction& w) {
    if (w.size() < 2) throw DomainError("shift of '" + w.provenance + "' leaves an empty domain");
    WindowFunction out = w;
    out.offset = w.offset + 1;
    out.values.erase(out.values.begin());
    out.provenance = "S[" + w.provenance + "]";
    return out;
}

WindowFunction shift_n(const WindowFunction& w, int times) {
    WindowFunction out = w;
    for (int i = 0; i < times; ++i) out = shift(out);
    return out;
}

WindowFunction delta(const WindowFunction& w, const Lattice& lat) {
    if (w.size() < 2) throw DomainError("domain of '" + w.provenance + "' too small for Delta/Delta x");
    const std::size_t last = w.offset + w.size() - 1 + static_cast<std::size_t>(w.order);
    if (last >= lat.size()) {
        throw DomainError("'" + w.provenance + "' needs lattice point x_" + std::to_string(last) + " but the lattice has order " +
                          std::to_string(lat.order()));
    }
    if (w.uniform_only && !lat.is_uniform()) {
        throw DomainError("'" + w.provenance + "' is a mixed-order product; Delta/Delta x needs an evenly spaced lattice");
    }
    WindowFunction out;
    out.order = w.order + 1;
    out.offset = w.offset;
    out.uniform_only = w.uniform_only;
    out.provenance = "D[" + w.provenance + "]";
    const ExactScalar factor(static_cast<long>(w.order + 1));
    out.values.reserve(w.size() - 1);
    for (std::size_t r = 0; r + 1 < w.size(); ++r) {
        const std::size_t s = w.offset + r;
        const std::size_t right = s + static_cast<std::size_t>(w.order) + 1;
        out.values.push_back(factor * (w.values[r + 1] - w.values[r]) / (lat[right] - lat[s]));
    }
    return out;
}

WindowFunction delta_n(const WindowFunction& w, const Lattice& lat, int times) {
    if (times < 0) throw DomainError("negative repetition count");
    WindowFunction out = w;
    for (int i = 0; i < times; ++i) out = delta(out, lat);
    return out;
}

ExactScalar uniform_step(const Lattice& lat) {
    if (lat.size() < 2 || !lat.is_uniform()) throw DomainError("lattice is not evenly spaced");
    return lat[1] - lat[0];
}

namespace {

void require_same_shape(const WindowFunction& u, const WindowFunction& v) {
    if (u.order != v.order || u.offset != v.offset || u.size() != v.size()) {
        throw DomainError("shape mismatch between '" + u.provenance + "' (order " + std::to_string(u.order) +
                          ", offset " + std::to_string(u.offset) + ", " + std::to_string(u.size()) + " entries) and '" +
                          v.provenance + "' (order " + std::to_string(v.order) + ", offset " +
                          std::to_string(v.offset) + ", " + std::to_string(v.size()) + " entries)");
    }
}

IdentityCheck compare(std::vector<ExactScalar> lhs, std::vector<ExactScalar> rhs) {
    IdentityCheck c;
    if (lhs.size() != rhs.size()) {
        c.holds = false;
        c.witness = std::min(lhs.size(), rhs.size());
    } else {
        for (std::size_t r = 0; r < lhs.size(); ++r) {
            if (lhs[r] != rhs[r]) {
                c.holds = false;
                c.witness = r;
                break;
            }
        }
    }
    c.lhs = std::move(lhs);
    c.rhs = std::move(rhs);
    return c;
}

}  // namespace

WindowFunction multiply(const WindowFunction& u, const WindowFunction& v, const Lattice& lat) {
    if (u.offset != v.offset) throw DomainError("products need windows with a common basepoint");
    WindowFunction out;
    if (u.order != v.order) {
        if (!lat.is_uniform()) {
            throw DomainError("product of order-" + std::to_string(u.order) + " and order-" + std::to_string(v.order) +
                              " windows is not defined on a non-uniform lattice");
        }
        out.uniform_only = true;
    }
    out.uniform_only = out.uniform_only || u.uniform_only || v.uniform_only;
    out.order = std::max(u.order, v.order);
    out.offset = u.offset;
    out.provenance = "(" + u.provenance + ")*(" + v.provenance + ")";
    const std::size_t n = std::min(u.size(), v.size());
    out.values.reserve(n);
    for (std::size_t r = 0; r < n; ++r) out.values.push_back(u.values[r] * v.values[r]);
    return out;
}

WindowFunction divide(const WindowFunction& u, const WindowFunction& v) {
    require_same_shape(u, v);
    WindowFunction out = u;
    out.provenance = "(" + u.provenance + ")/(" + v.provenance + ")";
    for (std::size_t r = 0; r < u.size(); ++r) {
        if (v.values[r].is_zero()) {
            throw DivisionByZero("'" + v.provenance + "' vanishes at basepoint " + std::to_string(v.offset + r));
        }
        out.values[r] = u.values[r] / v.values[r];
    }
    return out;
}

WindowFunction linear_combination(const ExactScalar& a, const WindowFunction& u, const ExactScalar& b,
                                  const WindowFunction& v) {
    require_same_shape(u, v);
    WindowFunction out = u;
    out.provenance = a.to_string() + "*(" + u.provenance + ") + " + b.to_string() + "*(" + v.provenance + ")";
    for (std::size_t r = 0; r < u.size(); ++r) out.values[r] = a * u.values[r] + b * v.values[r];
    return out;
}

IdentityCheck product_rule_check(const WindowFunction& u, const WindowFunction& v, const Lattice& lat) {
    require_same_shape(u, v);
    const WindowFunction lhs = delta(multiply(u, v, lat), lat);
    const WindowFunction du = delta(u, lat);
    const WindowFunction dv = delta(v, lat);
    std::vector<ExactScalar> rhs;
    for (std::size_t r = 0; r < du.size(); ++r) rhs.push_back(du[r] * v[r] + u[r + 1] * dv[r]);
    return compare(lhs.values, std::move(rhs));
}

IdentityCheck quotient_rule_check(const WindowFunction& u, const WindowFunction& v, const Lattice& lat) {
    require_same_shape(u, v);
    for (std::size_t r = 0; r < v.size(); ++r) {
        if (v[r].is_zero()) {
            throw DivisionByZero("zero denominator '" + v.provenance + "' at basepoint " + std::to_string(v.offset + r));
        }
    }
    const WindowFunction lhs = delta(divide(u, v), lat);
    const WindowFunction du = delta(u, lat);
    const WindowFunction dv = delta(v, lat);
    std::vector<ExactScalar> rhs;
    for (std::size_t r = 0; r < du.size(); ++r) {
        rhs.push_back((v[r] * du[r] - u[r] * dv[r]) / (v[r] * v[r + 1]));
    }
    return compare(lhs.values, std::move(rhs));
}

IdentityCheck commute_shift_check(const WindowFunction& w, const Lattice& lat) {
    const WindowFunction lhs = delta(shift(w), lat);
    const WindowFunction rhs = shift(delta(w, lat));
    if (lhs.offset != rhs.offset || lhs.order != rhs.order) {
        IdentityCheck c;
        c.holds = false;
        return c;
    }
    return compare(lhs.values, rhs.values);
}

std::vector<ExactScalar> leibniz_expand(const WindowFunction& u, const WindowFunction& v, const Lattice& lat, int n) {
    if (n < 0) throw DomainError("negative Leibniz order");
    require_same_shape(u, v);
    if (u.size() < static_cast<std::size_t>(n) + 1) {
        throw DomainError("domain exhausted: " + std::to_string(n) + " applications need " + std::to_string(n + 1) +
                          " basepoints, have " + std::to_string(u.size()));
    }
    const std::size_t len = u.size() - static_cast<std::size_t>(n);
    std::vector<ExactScalar> out(len, ExactScalar(0));
    for (int k = 0; k <= n; ++k) {
        const WindowFunction su = shift_n(delta_n(u, lat, n - k), k);
        const WindowFunction dv = delta_n(v, lat, k);
        const ExactScalar c = ExactScalar::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
        for (std::size_t r = 0; r < len; ++r) out[r] += c * su[r] * dv[r];
    }
    return out;
}

IdentityCheck leibniz_check(const WindowFunction& u, const WindowFunction& v, const Lattice& lat, int n) {
    const WindowFunction lhs = delta_n(multiply(u, v, lat), lat, n);
    return compare(lhs.values, leibniz_expand(u, v, lat, n));
}

}  // namespace multijet
