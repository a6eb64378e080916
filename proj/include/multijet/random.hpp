#pragma once

// Seeded generators for randomized checks. Every trial draws from its own
// engine seeded by splitmix64 so results do not depend on scheduling.

#include "multijet/exact.hpp"
#include "multijet/expr.hpp"
#include "multijet/lattice.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace multijet {

std::uint64_t splitmix64(std::uint64_t x);
/// Seed for trial `trial` of the check named `name`.
std::uint64_t trial_seed(std::uint64_t seed, const std::string& name, std::uint64_t trial);

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    int integer(int lo, int hi);
    /// p/q with |p| <= num_bound and 1 <= q <= den_bound.
    ExactScalar rational(int num_bound = 20, int den_bound = 9);
    ExactScalar nonzero_rational(int num_bound = 20, int den_bound = 9);
    std::vector<ExactScalar> rationals(std::size_t n);
    /// n + 1 pairwise distinct points in random order.
    Lattice lattice(int n);
    /// x_0 + i h with random x_0 and h != 0.
    Lattice uniform_lattice(int n);
    PointedCurveSamples samples(int n);
    /// Random polynomial in the given variables with total degree <= degree.
    Expr polynomial(const std::vector<std::string>& vars, int degree, int terms = 4);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace multijet
