#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "signless/enumerate.hpp"
#include "signless/spectral.hpp"

using namespace signless;

namespace {

auto matrix(const std::vector<std::vector<double>> &rows) -> SymMatrix {
  return SymMatrix::from_rows(rows);
}

/// 3x3 determinant by cofactor expansion.
auto det3(const std::array<std::array<double, 3>, 3> &a) -> double {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

auto reduced_system(int n, double q) -> std::array<std::array<double, 3>, 3> {
  return {{{q - 2.0, -2.0, 0.0}, {0.0, 2.0, 2.0 * n - 6.0 - q}, {1.0, n - 2.0 - q, n - 3.0}}};
}

}  // namespace

TEST(SymMatrix, RejectsAsymmetry) {
  EXPECT_THROW(matrix({{1, 2}, {2.0000001, 1}}), std::invalid_argument);
  EXPECT_THROW(matrix({{1, 2}}), std::invalid_argument);
  EXPECT_THROW(SymMatrix(2) + SymMatrix(3), std::invalid_argument);
}

TEST(SignlessLaplacian, Examples) {
  EXPECT_EQ(signless_laplacian(make_complete(2)), matrix({{1, 1}, {1, 1}}));
  EXPECT_EQ(signless_laplacian(Graph(3)), SymMatrix(3));
  EXPECT_EQ(signless_laplacian(make_complete(3)), matrix({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}));
}

TEST(EigenSym, CompleteGraphs) {
  const Spectrum k2 = eigen_sym(signless_laplacian(make_complete(2)));
  EXPECT_NEAR(k2.values[0], 2.0, 1e-12);
  EXPECT_NEAR(k2.values[1], 0.0, 1e-12);
  for (int n = 3; n <= 10; ++n) {
    const Spectrum s = eigen_sym(signless_laplacian(make_complete(n)));
    EXPECT_NEAR(s.values[0], 2.0 * n - 2.0, 1e-10);
    for (int i = 1; i < n; ++i)
      EXPECT_NEAR(s.values[i], n - 2.0, 1e-10);
  }
}

TEST(EigenSym, CompleteMinusEdgeLeastValue) {
  const Spectrum s = eigen_sym(signless_laplacian(make_complete_minus_edge(5)));
  EXPECT_NEAR(s.values.back(), (9.0 - std::sqrt(33.0)) / 2.0, 1e-12);
  EXPECT_NEAR(s.values.back(), 1.6277186767309857, 1e-12);
}

TEST(EigenSym, InvalidTolerance) {
  EXPECT_THROW(eigen_sym(SymMatrix(2), 0.0), std::invalid_argument);
}

TEST(EigenSym, MatchesReferenceSolverOnRandomMatrices) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 24);
    const SymMatrix m = oracle::random_symmetric(n, rng);
    const Spectrum s = eigen_sym(m, kDefaultEigenTol, true);
    const auto ref = oracle::eigenvalues(m);
    const double scale = 1.0 + m.frobenius_norm();
    ASSERT_EQ(s.values.size(), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      EXPECT_NEAR(s.values[i], ref[i], 1e-10 * scale);
    for (int i = 1; i < n; ++i)
      EXPECT_GE(s.values[i - 1], s.values[i]);
    EXPECT_LE(s.max_residual, 1e-9 * scale);
    double sum = 0.0;
    for (double v : s.values)
      sum += v;
    EXPECT_NEAR(sum, m.trace(), n * 1e-10 * std::max(1.0, std::abs(m.trace())));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double dot = 0.0;
        const auto vi = s.vector(i);
        const auto vj = s.vector(j);
        for (int k = 0; k < n; ++k)
          dot += vi[k] * vj[k];
        EXPECT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-8);
      }
  }
}

TEST(EigenSym, Deterministic) {
  std::mt19937_64 rng(5);
  const SymMatrix m = oracle::random_symmetric(12, rng);
  const Spectrum a = eigen_sym(m, kDefaultEigenTol, true);
  const Spectrum b = eigen_sym(m, kDefaultEigenTol, true);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(*a.vectors, *b.vectors);
}

TEST(EigenSym, ValuesOnlyResidualBoundsError) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const SymMatrix m = oracle::random_symmetric(10, rng);
    const Spectrum s = eigen_sym(m);
    EXPECT_FALSE(s.vectors.has_value());
    const auto ref = oracle::eigenvalues(m);
    for (int i = 0; i < 10; ++i)
      EXPECT_LE(std::abs(s.values[i] - ref[i]), s.max_residual + 1e-13);
  }
}

TEST(QExtremes, Examples) {
  const QExtremes k2 = q_extremes(make_complete(2));
  EXPECT_NEAR(k2.q1, 2.0, 1e-12);
  EXPECT_NEAR(k2.qn, 0.0, 1e-10);
  EXPECT_NEAR(q_extremes(make_star(3)).q1, 4.0, 1e-12);
  EXPECT_NEAR(q_extremes(make_cycle(4)).qn, 0.0, 1e-10);
}

TEST(RayleighResidual, Examples) {
  const SymMatrix q = signless_laplacian(make_complete(2));
  const std::vector<double> ones{1.0, 1.0};
  const std::vector<double> alt{1.0, -1.0};
  const std::vector<double> perturbed{1.0, 1.0 + 1e-6};
  EXPECT_DOUBLE_EQ(rayleigh_residual(q, 2.0, ones), 0.0);
  EXPECT_DOUBLE_EQ(rayleigh_residual(q, 0.0, alt), 0.0);
  const double r = rayleigh_residual(q, 2.0, perturbed);
  EXPECT_GT(r, 0.0);
  EXPECT_LE(r, 2e-6);
  const std::vector<double> zero{0.0, 0.0};
  EXPECT_THROW(rayleigh_residual(q, 1.0, zero), std::invalid_argument);
}

TEST(ReducedCubic, MatchesDeterminant) {
  for (int n = 5; n <= 20; ++n) {
    const MonicCubic p = reduced_star_k2_cubic(n);
    for (double q : {-3.0, 0.0, 0.5, 1.0, 2.0, 7.25, 2.0 * n}) {
      // The raw determinant has leading coefficient -1.
      EXPECT_NEAR(p(q), -det3(reduced_system(n, q)), 1e-9 * (1.0 + std::abs(p(q))));
    }
  }
  EXPECT_THROW(reduced_star_k2_cubic(4), std::invalid_argument);
}

TEST(ReducedCubic, RootsAgreeWithFullSpectrum) {
  const MonicCubic p = reduced_star_k2_cubic(8);
  const auto roots = cubic_roots(p, 0.0, 16.0);
  ASSERT_EQ(roots.size(), 3U);
  const double qn = eigen_sym(signless_laplacian(make_star_k2_complement(8))).values.back();
  EXPECT_NEAR(roots.front(), qn, 1e-9);
  EXPECT_NEAR(roots.front(), 1.4151968295507575, 1e-9);
  EXPECT_GE(roots.front(), 1.0 / 3.0);
  // q = 2 forces x2 = 0 in the first equation, then x4 = 0 and x1 = 0, so 2
  // is not a root.
  EXPECT_NE(p(2.0), 0.0);
  const auto sys = reduced_system(8, 2.0);
  EXPECT_EQ(sys[0][0], 0.0);
  EXPECT_NE(sys[1][2], 0.0);
}

TEST(CubicRoots, KnownFactors) {
  // (q-1)(q-2)(q-3)
  const MonicCubic p{-6.0, 11.0, -6.0};
  const auto roots = cubic_roots(p, 0.0, 10.0);
  ASSERT_EQ(roots.size(), 3U);
  EXPECT_NEAR(roots[0], 1.0, 1e-12);
  EXPECT_NEAR(roots[1], 2.0, 1e-12);
  EXPECT_NEAR(roots[2], 3.0, 1e-12);
  EXPECT_EQ(cubic_roots(p, 3.5, 10.0).size(), 0U);
  EXPECT_THROW(cubic_roots(p, 1.0, 1.0), std::invalid_argument);
}

TEST(SpectralProperty, PositiveSemidefiniteAndTrace) {
  for (int n = 1; n <= 6; ++n) {
    enumerate_labeled(n, [&](const Graph &g) {
      const Spectrum s = eigen_sym(signless_laplacian(g));
      EXPECT_GE(s.values.back(), -1e-9);
      double sum = 0.0;
      for (double v : s.values)
        sum += v;
      const double two_m = 2.0 * g.edge_count();
      EXPECT_NEAR(sum, two_m, n * 1e-10 * std::max(1.0, two_m));
    });
  }
}

TEST(SpectralProperty, ComplementSumIsCompleteGraph) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    EXPECT_EQ(signless_laplacian(g) + signless_laplacian(complement(g)),
              signless_laplacian(make_complete(n)));
  }
}

TEST(SpectralProperty, PermutationInvariance) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 14);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const auto perm = oracle::random_permutation(n, rng);
    const auto a = eigen_sym(signless_laplacian(g)).values;
    const auto b = eigen_sym(signless_laplacian(relabel(g, perm))).values;
    for (int i = 0; i < n; ++i)
      EXPECT_NEAR(a[i], b[i], 1e-9);
  }
}

TEST(SpectralProperty, StarK2EigenvectorSymmetry) {
  for (int n = 8; n <= 16; ++n) {
    const Graph g = make_star_k2_complement(n);
    const Spectrum s = eigen_sym(signless_laplacian(g), kDefaultEigenTol, true);
    const double gap = s.values[n - 2] - s.values[n - 1];
    ASSERT_GT(gap, 1e-6) << "q_n not simple at n=" << n;
    auto x = std::vector<double>(s.vector(n - 1).begin(), s.vector(n - 1).end());
    if (x[0] < 0)
      for (double &xi : x)
        xi = -xi;
    EXPECT_LE(std::abs(x[1] - x[2]), 1e-7);
    for (int i = 3; i < n; ++i)
      EXPECT_LE(std::abs(x[i] - x[3]), 1e-7);
    // The reduced system holds with q = q_n.
    const double q = s.values.back();
    EXPECT_NEAR((q - 2) * x[0] - 2 * x[1], 0.0, 1e-9);
    EXPECT_NEAR(2 * x[1] + (2.0 * n - 6 - q) * x[3], 0.0, 1e-9);
    EXPECT_NEAR(x[0] + (n - 2 - q) * x[1] + (n - 3) * x[3], 0.0, 1e-9);
  }
}
