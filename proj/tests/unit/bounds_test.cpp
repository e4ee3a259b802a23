#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "signless/bounds.hpp"
#include "signless/enumerate.hpp"

using namespace signless;

TEST(ConjectureBound, Examples) {
  EXPECT_DOUBLE_EQ(conjecture_bound(5, 9), 1.5);
  EXPECT_DOUBLE_EQ(conjecture_bound(2, 1), 2.0);
  EXPECT_DOUBLE_EQ(conjecture_bound(4, 5), 4.0 / 3.0);
  EXPECT_THROW(conjecture_bound(1, 0), std::invalid_argument);
}

TEST(TheoremBound, Examples) {
  EXPECT_DOUBLE_EQ(theorem_bound(5, 9), 2.0);
  EXPECT_DOUBLE_EQ(theorem_bound(6, 10), 0.0);
  EXPECT_DOUBLE_EQ(theorem_bound(8, 22), 1.0 / 3.0);
  EXPECT_THROW(theorem_bound(2, 1), std::invalid_argument);
}

TEST(Bounds, DifferenceIdentity) {
  for (int n = 4; n <= 20; ++n) {
    const long half = static_cast<long>(n - 1) * (n - 2) / 2;
    for (long m = 0; m <= static_cast<long>(n) * (n - 1) / 2; ++m) {
      const double diff = theorem_bound(n, m) - conjecture_bound(n, m);
      EXPECT_NEAR(diff, 2.0 * m * (1.0 / (n - 2) - 1.0 / (n - 1)) - 1.0, 1e-12);
      if (m > half)
        EXPECT_GT(diff, 0.0);
      else if (m < half)
        EXPECT_LT(diff, 0.0);
      else
        EXPECT_EQ(diff, 0.0);
    }
  }
}

TEST(Tau, Examples) {
  EXPECT_DOUBLE_EQ(tau(3), 0.0);
  EXPECT_NEAR(tau(5), 1.6277186767, 1e-10);
  EXPECT_NEAR(tau(4), 0.7639320225, 1e-10);
  EXPECT_NEAR(tau(4), 3.0 - std::sqrt(5.0), 1e-15);
  EXPECT_LT(tau(4), conjecture_bound(4, 5));
  EXPECT_THROW(tau(2), std::invalid_argument);
}

TEST(Tau, MatchesLeastEigenvalueOfCompleteMinusEdge) {
  for (int n = 3; n <= 12; ++n)
    EXPECT_NEAR(tau(n), oracle::least_q(make_complete_minus_edge(n)), 1e-9) << "n=" << n;
}

TEST(Merris, Examples) {
  EXPECT_DOUBLE_EQ(merris_q1_upper(make_star(3)), 4.0);
  for (int n = 3; n <= 8; ++n) {
    EXPECT_DOUBLE_EQ(merris_q1_upper(make_complete(n)), 2.0 * n - 2.0);
    EXPECT_NEAR(oracle::largest_q(make_complete(n)), 2.0 * n - 2.0, 1e-9);
  }
  EXPECT_DOUBLE_EQ(merris_q1_upper(Graph(4)), 0.0);
}

TEST(EdgeDegree, Examples) {
  for (int n = 5; n <= 12; ++n)
    EXPECT_DOUBLE_EQ(edge_degree_q1_upper(complement(make_star_k2_complement(n))), n - 2.0);
  EXPECT_DOUBLE_EQ(edge_degree_q1_upper(make_complete(3)), 4.0);
  EXPECT_THROW(edge_degree_q1_upper(Graph(3)), std::invalid_argument);
}

TEST(EdgeDegree, DominatesMerrisWhichDominatesQ1) {
  for (int n = 2; n <= 7; ++n) {
    EnumSpec spec;
    spec.n = n;
    enumerate_graphs(spec, [&](const Graph &g) {
      const double q1 = oracle::largest_q(g);
      const double merris = merris_q1_upper(g);
      EXPECT_LE(q1, merris + kSlackTol);
      if (g.edge_count() > 0)
        EXPECT_LE(merris, edge_degree_q1_upper(g) + kSlackTol);
    });
  }
}

TEST(FullVertexBound, Examples) {
  for (int n = 2; n <= 10; ++n) {
    EXPECT_DOUBLE_EQ(lemma23_lower(n, 0), 0.0);
    EXPECT_DOUBLE_EQ(lemma23_lower(n, 1), 0.0);
  }
  EXPECT_NEAR(lemma23_lower(5, 3), (9.0 - std::sqrt(33.0)) / 2.0, 1e-15);
  EXPECT_NEAR(lemma23_lower(5, 3), oracle::least_q(make_complete_minus_edge(5)), 1e-9);
  EXPECT_NEAR(lemma23_lower(8, 4), 2.0, 1e-15);
  EXPECT_THROW(lemma23_lower(5, 6), std::invalid_argument);
  EXPECT_THROW(lemma23_lower(5, -1), std::invalid_argument);
}

TEST(FullVertexBound, HoldsForEightVertexGraphsWithFourFullVertices) {
  EnumSpec spec;
  spec.n = 8;
  int checked = 0;
  enumerate_graphs(spec, [&](const Graph &g) {
    if (degree_profile(g).full != 4)
      return;
    ++checked;
    EXPECT_LE(lemma23_lower(8, 4), oracle::least_q(g) + kSlackTol);
  });
  EXPECT_GT(checked, 0);
}

TEST(NearFullBound, ValuesAndApplicability) {
  EXPECT_DOUBLE_EQ(lemma24_lower(8, 1), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(lemma24_lower(8, 2), 2.0 / 3.0);
  EXPECT_THROW(lemma24_lower(8, 3), std::invalid_argument);
  EXPECT_THROW(lemma24_lower(8, 0), std::invalid_argument);

  DegreeProfile p;
  p.full = 1;
  p.near_full = 1;
  EXPECT_TRUE(lemma24_applicable(p, 7));
  EXPECT_FALSE(lemma24_applicable(p, 6));
  p.full = 3;
  EXPECT_FALSE(lemma24_applicable(p, 8));
  p.full = 2;
  p.near_full = 0;
  EXPECT_FALSE(lemma24_applicable(p, 8));
}

TEST(Weyl, Examples) {
  const SymMatrix q = signless_laplacian(make_complete(2));
  const WeylPair w = weyl_min_sum(q, q);
  EXPECT_NEAR(w.lhs, 0.0, 1e-12);
  EXPECT_NEAR(w.rhs, 2.0, 1e-12);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(n, 0.6, rng);
    const WeylPair pair = weyl_min_sum(signless_laplacian(complement(g)), signless_laplacian(g));
    EXPECT_NEAR(pair.lhs, n - 2.0, 1e-9);
    EXPECT_LE(pair.lhs, pair.rhs + kSlackTol);
  }
  EXPECT_THROW(weyl_min_sum(SymMatrix(2), SymMatrix(3)), std::invalid_argument);
}

TEST(Weyl, RandomSymmetricPairs) {
  std::mt19937_64 rng(1000);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const SymMatrix a = oracle::random_symmetric(n, rng);
    const SymMatrix b = oracle::random_symmetric(n, rng);
    const WeylPair w = weyl_min_sum(a, b);
    EXPECT_LE(w.lhs, w.rhs + kSlackTol);
  }
}
