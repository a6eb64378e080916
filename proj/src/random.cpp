#include "multijet/random.hpp"

#include "multijet/normal_form.hpp"

#include <algorithm>
#include <set>

namespace multijet {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, const std::string& name, std::uint64_t trial) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
    return splitmix64(splitmix64(seed ^ h) + trial);
}

int RandomSource::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

ExactScalar RandomSource::rational(int num_bound, int den_bound) {
    const int p = integer(-num_bound, num_bound);
    const int q = integer(1, den_bound);
    return ExactScalar(p) / ExactScalar(q);
}

ExactScalar RandomSource::nonzero_rational(int num_bound, int den_bound) {
    ExactScalar r;
    do {
        r = rational(num_bound, den_bound);
    } while (r.is_zero());
    return r;
}

std::vector<ExactScalar> RandomSource::rationals(std::size_t n) {
    std::vector<ExactScalar> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(rational());
    return out;
}

Lattice RandomSource::lattice(int n) {
    std::set<ExactScalar> seen;
    std::vector<ExactScalar> xs;
    while (static_cast<int>(xs.size()) <= n) {
        ExactScalar x = rational();
        if (seen.insert(x).second) xs.push_back(std::move(x));
    }
    return Lattice::make(std::move(xs));
}

Lattice RandomSource::uniform_lattice(int n) {
    const ExactScalar x0 = rational();
    const ExactScalar h = nonzero_rational(5, 7);
    std::vector<ExactScalar> xs;
    for (int i = 0; i <= n; ++i) xs.push_back(x0 + ExactScalar(i) * h);
    return Lattice::make(std::move(xs));
}

PointedCurveSamples RandomSource::samples(int n) {
    Lattice lat = lattice(n);
    return PointedCurveSamples(lat, rationals(lat.size()));
}

Expr RandomSource::polynomial(const std::vector<std::string>& vars, int degree, int terms) {
    Expr out = Expr::constant(ExactScalar(0));
    for (int t = 0; t < terms; ++t) {
        Expr mono = Expr::constant(rational(6, 4));
        const int d = integer(0, degree);
        for (int i = 0; i < d; ++i) {
            mono = mono * Expr::variable(vars[static_cast<std::size_t>(integer(0, static_cast<int>(vars.size()) - 1))]);
        }
        out = out + mono;
    }
    return canonicalize(out);
}

}  // namespace multijet
