#pragma once

#include <optional>

#include "signless/graph.hpp"
#include "signless/spectral.hpp"

namespace signless {

/// Absolute tolerance applied to every slack comparison.
inline constexpr double kSlackTol = 1e-9;

/// m - (n-1)(n-2)/2: the edge surplus over K_{n-1} plus an isolated vertex.
auto edge_surplus(int n, long m) -> long;

/// 2m/(n-1) - n + 2, evaluated as 2r/(n-1) from the integer surplus. n >= 2.
auto conjecture_bound(int n, long m) -> double;

/// 2m/(n-2) - n + 1, evaluated as 2r/(n-2). n >= 3.
auto theorem_bound(int n, long m) -> double;

/// Least signless Laplacian eigenvalue of K_n minus one edge:
/// (3n - 6 - sqrt((n-2)(n+6))) / 2. n >= 3.
auto tau(int n) -> double;

/**
 * Merris-type upper bound on q_1:
 *   max over u with d(u) > 0 of  d(u) + (sum of neighbour degrees) / d(u).
 * Isolated vertices are skipped; an edgeless graph gives 0.
 */
auto merris_q1_upper(const Graph &g) -> double;

/// max over edges uv of d(u) + d(v). Dominates merris_q1_upper. Throws on
/// an edgeless graph.
auto edge_degree_q1_upper(const Graph &g) -> double;

/// (s - sqrt(s^2 - 8k(k-1))) / 2 with s = n + 2k - 2, for a graph with k
/// vertices of degree n-1. Only claimed for G != K_n (k < n).
auto lemma23_lower(int n, int k) -> double;

/// k in {1,2}, some vertex of degree n-2, and n >= 7.
auto lemma24_applicable(const DegreeProfile &profile, int n) -> bool;

/// 2k/(n-2); k must be 1 or 2.
auto lemma24_lower(int n, int k) -> double;

struct WeylPair {
  double lhs = 0.0;  // lambda_n(A + B)
  double rhs = 0.0;  // lambda_1(A) + lambda_n(B)
};

auto weyl_min_sum(const SymMatrix &a, const SymMatrix &b) -> WeylPair;

/// Every bound evaluated on one graph, with slacks q_n - bound.
struct BoundReport {
  int n = 0;
  long m = 0;
  long r = 0;
  int k = 0;
  int near_full = 0;
  double q1 = 0.0;
  double qn = 0.0;
  double conj_bound = 0.0;
  double thm_bound = 0.0;
  double conj_slack = 0.0;
  double thm_slack = 0.0;
  bool conj_holds = false;
  bool thm_holds = false;
  double merris_upper = 0.0;
  std::optional<double> edge_degree_upper;
  double lemma23_lower = 0.0;
  /// False when G = K_n, where the lemma's hypothesis fails.
  bool lemma23_hypothesis = true;
  bool lemma24_applicable = false;
  std::optional<double> lemma24_lower;
};

}  // namespace signless
