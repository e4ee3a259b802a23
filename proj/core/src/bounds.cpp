#include "signless/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace signless {

auto edge_surplus(int n, long m) -> long {
  return m - static_cast<long>(n - 1) * (n - 2) / 2;
}

auto conjecture_bound(int n, long m) -> double {
  if (n < 2)
    throw std::invalid_argument("conjecture_bound: n must be at least 2");
  return 2.0 * static_cast<double>(edge_surplus(n, m)) / (n - 1);
}

auto theorem_bound(int n, long m) -> double {
  if (n < 3)
    throw std::invalid_argument("theorem_bound: n must be at least 3");
  return 2.0 * static_cast<double>(edge_surplus(n, m)) / (n - 2);
}

auto tau(int n) -> double {
  if (n < 3)
    throw std::invalid_argument("tau: n must be at least 3");
  // Rationalised: (3n-6)^2 - (n-2)(n+6) = 8(n-2)(n-3).
  const double s = 3.0 * n - 6.0;
  const double root = std::sqrt(static_cast<double>(n - 2) * (n + 6));
  return 8.0 * (n - 2) * (n - 3) / (2.0 * (s + root));
}

auto merris_q1_upper(const Graph &g) -> double {
  const int n = g.order();
  double best = 0.0;
  for (int u = 0; u < n; ++u) {
    const int du = g.degree(u);
    if (du == 0)
      continue;
    long sum = 0;
    Row nb = g.neighbours(u);
    while (nb) {
      sum += g.degree(std::countr_zero(nb));
      nb &= nb - 1;
    }
    best = std::max(best, du + static_cast<double>(sum) / du);
  }
  return best;
}

auto edge_degree_q1_upper(const Graph &g) -> double {
  const int n = g.order();
  int best = -1;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v))
        best = std::max(best, g.degree(u) + g.degree(v));
  if (best < 0)
    throw std::invalid_argument("edge_degree_q1_upper: graph has no edges");
  return best;
}

auto lemma23_lower(int n, int k) -> double {
  if (n < 1 || k < 0 || k > n)
    throw std::invalid_argument("lemma23_lower: need 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  if (k <= 1)
    return 0.0;
  const long s = n + 2L * k - 2;
  const long prod = 8L * k * (k - 1);
  // (s - sqrt(s^2 - 8k(k-1)))/2 = 4k(k-1) / (s + sqrt(s^2 - 8k(k-1))).
  return 0.5 * static_cast<double>(prod) / (s + std::sqrt(static_cast<double>(s * s - prod)));
}

auto lemma24_applicable(const DegreeProfile &profile, int n) -> bool {
  return n >= 7 && (profile.full == 1 || profile.full == 2) && profile.near_full >= 1;
}

auto lemma24_lower(int n, int k) -> double {
  if (k != 1 && k != 2)
    throw std::invalid_argument("lemma24_lower: k must be 1 or 2");
  if (n < 3)
    throw std::invalid_argument("lemma24_lower: n must be at least 3");
  return 2.0 * k / (n - 2);
}

auto weyl_min_sum(const SymMatrix &a, const SymMatrix &b) -> WeylPair {
  if (a.order() != b.order())
    throw std::invalid_argument("weyl_min_sum: dimension mismatch");
  const Spectrum sum = eigen_sym(a + b);
  const Spectrum sa = eigen_sym(a);
  const Spectrum sb = eigen_sym(b);
  return {sum.values.back(), sa.values.front() + sb.values.back()};
}

}  // namespace signless
