#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "signless/graph.hpp"

namespace signless {

class EigenError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense real symmetric matrix; every write updates both triangles.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int order);

  /// Throws unless rows form an exactly symmetric square matrix.
  static auto from_rows(const std::vector<std::vector<double>> &rows) -> SymMatrix;

  auto order() const -> int { return n_; }
  auto operator()(int i, int j) const -> double { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  auto set(int i, int j, double value) -> void;

  auto trace() const -> double;
  auto frobenius_norm() const -> double;
  auto data() const -> std::span<const double> { return a_; }

  friend auto operator+(const SymMatrix &a, const SymMatrix &b) -> SymMatrix;
  auto operator==(const SymMatrix &) const -> bool = default;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

struct Spectrum {
  /// Nonincreasing: values[0] = q_1, values.back() = q_n.
  std::vector<double> values;
  /// Column-major n x n; column i is the unit eigenvector of values[i].
  std::optional<std::vector<double>> vectors;
  /// With vectors: max_i ||M v_i - values[i] v_i||_2.
  /// Without: the final off-diagonal Frobenius norm, which bounds every
  /// eigenvalue error.
  double max_residual = 0.0;
  int sweeps = 0;

  auto vector(int i) const -> std::span<const double>;
};

inline constexpr double kDefaultEigenTol = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;

/**
 * Full spectrum of a symmetric matrix by cyclic Jacobi rotations.
 *
 * Sweeps stop once the off-diagonal Frobenius norm is at most
 * tol * ||M||_F; after kMaxJacobiSweeps an EigenError is thrown. Eigenvalues
 * equal to each other keep the diagonal order Jacobi left them in, so the
 * output is a pure function of the input.
 */
auto eigen_sym(const SymMatrix &m, double tol = kDefaultEigenTol, bool want_vectors = false)
    -> Spectrum;

/// Q(G) = D(G) + A(G).
auto signless_laplacian(const Graph &g) -> SymMatrix;

struct QExtremes {
  double q1 = 0.0;
  double qn = 0.0;
};

auto q_extremes(const Graph &g, double tol = kDefaultEigenTol) -> QExtremes;

/// ||M v - value v||_2 / ||v||_2.
auto rayleigh_residual(const SymMatrix &m, double value, std::span<const double> v) -> double;

/// q^3 + c2 q^2 + c1 q + c0.
struct MonicCubic {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  auto operator()(double q) const -> double { return ((q + c2) * q + c1) * q + c0; }
  auto derivative(double q) const -> double { return (3.0 * q + 2.0 * c2) * q + c1; }
};

/**
 * Determinant polynomial of the three-orbit eigen-system of Q(G) for
 * G = complement of K_{1,n-3} + K_2, orbits {v1}, {v2,v3}, {v4..vn}:
 *
 *   (q-2) x1 - 2 x2                = 0
 *              2 x2 + (2n-6-q) x4  = 0
 *   x1 + (n-2-q) x2 + (n-3) x4     = 0
 *
 * Returned monic (sign flipped from the raw determinant). Requires n >= 5.
 */
auto reduced_star_k2_cubic(int n) -> MonicCubic;

/// Real roots in [lo, hi], ascending: bracket between critical points,
/// bisect, then Newton-polish to 1e-12.
auto cubic_roots(const MonicCubic &p, double lo, double hi) -> std::vector<double>;

}  // namespace signless
