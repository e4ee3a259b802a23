#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "signless/bounds.hpp"
#include "signless/enumerate.hpp"
#include "signless/graph.hpp"

namespace signless {

enum class BoundKind { conjecture, theorem };

auto to_string(BoundKind kind) -> std::string_view;
/// Accepts "conjecture" or "theorem".
auto parse_bound_kind(std::string_view text) -> BoundKind;

/// conjecture_bound or theorem_bound for the given kind.
auto bound_value(BoundKind kind, int n, long m) -> double;

/// Eigen tolerance used to re-confirm a violation before it is reported.
inline constexpr double kConfirmEigenTol = 1e-13;

struct Violation {
  std::string graph6;
  double qn = 0.0;
  double bound = 0.0;
  double slack = 0.0;
};

struct VerifyRun {
  EnumSpec spec;
  BoundKind bound = BoundKind::theorem;
  std::uint64_t count = 0;
  /// +infinity when no graph matched.
  double min_slack = 0.0;
  std::string argmin_graph6;
  /// Sorted by graph6.
  std::vector<Violation> violations;
  double tol = kSlackTol;
  double elapsed_seconds = 0.0;
};

/// Every bound of bounds.hpp on one graph. Requires n >= 3.
auto check_graph(const Graph &g, double tol = kSlackTol) -> BoundReport;

/**
 * Checks q_n >= bound(n, m) over every isomorphism class matching spec.
 *
 * Work is sharded by parent graph; each shard keeps (min slack, least graph6
 * among ties) and the shards merge with the same rule, so the summary does
 * not depend on jobs. Candidate violations are re-solved at
 * kConfirmEigenTol before they are recorded.
 */
auto verify_bound(const EnumSpec &spec, BoundKind kind, double tol = kSlackTol, int jobs = 1)
    -> VerifyRun;

struct AuditCheck {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  /// lhs <= rhs + tol.
  bool passed = false;
};

/**
 * Unconditional inequalities along the least-eigenvalue argument, on one
 * graph. Every check is oriented as lhs <= rhs:
 *
 *   weyl                        (n-2) - q_n(G)          <= q_1(G^c)
 *   complement_q1_edge_degree   q_1(G^c)                <= max_{uv} d(u)+d(v) in G^c
 *   edge_degree_edges           max_{uv} d(u)+d(v)      <= |E(G^c)| + 1
 *   edges_surplus               |E(G^c)| + 1            <= n - r
 *   lemma23                     lemma23_lower(n, k)     <= q_n(G)
 *   lemma24                     2k/(n-2)                <= q_n(G)   (when applicable)
 *   theorem_surplus             2r/(n-2)                <= q_n(G)
 *
 * The three complement-edge checks are omitted when G^c has no edges, and
 * lemma23 is omitted for G = K_n.
 */
struct ProofAudit {
  std::string graph6;
  int n = 0;
  long m = 0;
  long r = 0;
  int k = 0;
  std::vector<AuditCheck> checks;

  auto passed() const -> bool;
};

auto audit_graph(const Graph &g, double tol = kSlackTol) -> ProofAudit;

/// audit_graph over every connected class with m >= (n-1)(n-2)/2 + 1;
/// 6 <= n <= 9. Sorted by graph6.
auto audit_proof(int n, double tol = kSlackTol, int jobs = 1) -> std::vector<ProofAudit>;

struct Extremal {
  int n = 0;
  int m = 0;
  BoundKind bound = BoundKind::theorem;
  std::uint64_t count = 0;
  double min_slack = 0.0;
  std::string witness_graph6;
};

/// Least slack over connected classes with exactly m edges; 3 <= n <= 9.
/// Throws std::invalid_argument when no such class exists.
auto extremal_slack(int n, int m, BoundKind kind, int jobs = 1) -> Extremal;

}  // namespace signless
