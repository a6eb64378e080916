#pragma once

// Multispace lattices, Vandermonde determinants, divided differences,
// Newton interpolation and the multispace coordinates u^(k)_(k), mu^(k)_l.

#include "multijet/exact.hpp"
#include "multijet/expr.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace multijet {

class LatticeError : public Error {
public:
    using Error::Error;
};

/// Ordered, pairwise distinct sample abscissas x_0, ..., x_n. Index 0 is the
/// basepoint and the ordering is significant.
class Lattice {
public:
    /// Throws LatticeError naming the first pair of colliding indices.
    static Lattice make(std::vector<ExactScalar> xs);

    const std::vector<ExactScalar>& points() const { return points_; }
    const ExactScalar& operator[](std::size_t i) const { return points_[i]; }
    std::size_t size() const { return points_.size(); }
    /// n for a lattice of n + 1 points.
    int order() const { return static_cast<int>(points_.size()) - 1; }
    /// The first k + 1 points.
    Lattice prefix(int k) const;
    /// True when consecutive spacings all agree.
    bool is_uniform() const;

private:
    explicit Lattice(std::vector<ExactScalar> xs) : points_(std::move(xs)) {}
    std::vector<ExactScalar> points_;
};

inline Lattice make_lattice(std::vector<ExactScalar> xs) { return Lattice::make(std::move(xs)); }

/// The points z_i = (x_i, u_i) of a pointed graph.
struct PointedCurveSamples {
    PointedCurveSamples(Lattice lat, std::vector<ExactScalar> u);

    Lattice lattice;
    std::vector<ExactScalar> uvalues;

    std::size_t size() const { return uvalues.size(); }
    PointedCurveSamples prefix(int k) const;
};

/// Samples of an expression u(x) at the lattice points.
PointedCurveSamples sample_curve(const Expr& curve, const Lattice& lat, const std::string& var = "x");

/// One abscissa of a confluent sample with its derivative data
/// u(x), u'(x), ..., u^(mult-1)(x).
struct ConfluentNode {
    ExactScalar x;
    int multiplicity = 1;
    std::vector<ExactScalar> derivatives;
};

/// Sample points where an abscissa may repeat; repeated abscissas carry jets.
struct ConfluentSamples {
    explicit ConfluentSamples(std::vector<ConfluentNode> nodes);

    std::vector<ConfluentNode> nodes;
    /// Sum of multiplicities.
    int point_count() const;
};

// ---------------------------------------------------------------------------
// Determinants

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free (Bareiss) elimination with row pivoting. T must be a field
/// with exact division and a free is_zero(const T&).
template <class T>
T bareiss_determinant(Matrix<T> m) {
    const std::size_t n = m.size();
    if (n == 0) return T(ExactScalar(1));
    T previous(ExactScalar(1));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t pivot = k + 1;
            while (pivot < n && is_zero(m[pivot][k])) ++pivot;
            if (pivot == n) return T(ExactScalar(0));
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / previous;
            }
        }
        previous = m[k][k];
    }
    T det = m[n - 1][n - 1];
    return negate ? T(ExactScalar(0)) - det : det;
}

/// Vandermonde matrix rows (1, x_i, ..., x_i^n) for the given abscissas.
template <class T>
Matrix<T> vandermonde_matrix(std::span<const T> xs) {
    const std::size_t n = xs.size();
    Matrix<T> m(n, std::vector<T>(n, T(ExactScalar(1))));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) m[i][j] = m[i][j - 1] * xs[i];
    }
    return m;
}

/// d(col, x^l): the Vandermonde determinant with column l replaced.
template <class T>
T vandermonde_replace_det(std::span<const T> xs, std::span<const T> col, std::size_t l) {
    Matrix<T> m = vandermonde_matrix(xs);
    for (std::size_t i = 0; i < xs.size(); ++i) m[i][l] = col[i];
    return bareiss_determinant(std::move(m));
}

/// d^(n) of the whole lattice via elimination.
ExactScalar vdet(const Lattice& lat);
/// prod_{i<j} (x_j - x_i); the closed form used to cross-check vdet.
ExactScalar vdet_product(const Lattice& lat);
/// d^(n)(col, x^l); column index l counts from 0 (the x^l column).
ExactScalar vdet_replace(const Lattice& lat, std::span<const ExactScalar> col, int l);
/// d^(n)([u, x^i]; [v, x^j]): two columns replaced at once.
ExactScalar vdet_replace2(const Lattice& lat, std::span<const ExactScalar> u, int i, std::span<const ExactScalar> v,
                          int j);

// ---------------------------------------------------------------------------
// Divided differences and interpolation

/// [z_0, ..., z_n] via the recursive rule
///   [z_0..z_{k-2}, z_{k-1}, z_k] = ([z_0..z_{k-2}, z_k] - [z_0..z_{k-1}]) / (x_k - x_{k-1}).
ExactScalar dd_recursive(const PointedCurveSamples& samples);
/// All leading divided differences [z_0], [z_0, z_1], ..., [z_0..z_n].
std::vector<ExactScalar> dd_recursive_prefixes(const PointedCurveSamples& samples);

/// Hermite divided difference over the expanded point list. A single
/// abscissa of multiplicity k + 1 yields u^(k)(x_0) / k!.
ExactScalar dd_confluent(const ConfluentSamples& cs);
/// Leading confluent divided differences, one per expanded point.
std::vector<ExactScalar> dd_confluent_prefixes(const ConfluentSamples& cs);

/// Newton form sum_k (u^(k)_(k) / k!) prod_{j<k} (x - x_j) as an expression in `var`.
Expr newton_interpolant(const PointedCurveSamples& samples, const std::string& var = "x");
/// Monomial coefficients a_0, ..., a_n of the interpolating polynomial.
std::vector<ExactScalar> interpolant_coefficients(const PointedCurveSamples& samples);
/// Hermite interpolant of confluent samples in Newton form.
Expr hermite_interpolant(const ConfluentSamples& cs, const std::string& var = "x");

/// u^(k)_(k) = k! d^(k)(u, x^k) / d^(k) on the first k + 1 points.
ExactScalar multispace_coord(const PointedCurveSamples& samples, int k);
/// mu^(k)_l = k! d^(k)(u, x^l) / d^(k) on the first k + 1 points.
ExactScalar mu(const PointedCurveSamples& samples, int k, int l);

/// Triangular array T[k][r] = u^(k)_(k) on the window (x_r, ..., x_{r+k}),
/// built by T[k+1][r] = (k+1) (T[k][r+1] - T[k][r]) / (x_{k+1+r} - x_r).
class DividedDifferenceTableau {
public:
    explicit DividedDifferenceTableau(const PointedCurveSamples& samples);

    int order() const { return static_cast<int>(rows_.size()) - 1; }
    const std::vector<ExactScalar>& row(int k) const { return rows_.at(static_cast<std::size_t>(k)); }
    const ExactScalar& at(int k, int r) const { return row(k).at(static_cast<std::size_t>(r)); }
    const std::vector<std::vector<ExactScalar>>& rows() const { return rows_; }

private:
    std::vector<std::vector<ExactScalar>> rows_;
};

inline DividedDifferenceTableau tableau(const PointedCurveSamples& samples) { return DividedDifferenceTableau(samples); }

}  // namespace multijet
