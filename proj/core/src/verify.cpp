#include "signless/verify.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "signless/graph6.hpp"
#include "signless/spectral.hpp"

namespace signless {

auto to_string(BoundKind kind) -> std::string_view {
  return kind == BoundKind::theorem ? "theorem" : "conjecture";
}

auto parse_bound_kind(std::string_view text) -> BoundKind {
  if (text == "theorem")
    return BoundKind::theorem;
  if (text == "conjecture")
    return BoundKind::conjecture;
  throw std::invalid_argument("unknown bound kind '" + std::string(text) +
                              "' (expected theorem or conjecture)");
}

auto bound_value(BoundKind kind, int n, long m) -> double {
  return kind == BoundKind::theorem ? theorem_bound(n, m) : conjecture_bound(n, m);
}

auto check_graph(const Graph &g, double tol) -> BoundReport {
  const int n = g.order();
  if (n < 3)
    throw std::invalid_argument("check_graph: n must be at least 3");
  const DegreeProfile profile = degree_profile(g);
  const Spectrum spec = eigen_sym(signless_laplacian(g));

  BoundReport rep;
  rep.n = n;
  rep.m = g.edge_count();
  rep.r = edge_surplus(n, rep.m);
  rep.k = profile.full;
  rep.near_full = profile.near_full;
  rep.q1 = spec.values.front();
  rep.qn = spec.values.back();
  rep.conj_bound = conjecture_bound(n, rep.m);
  rep.thm_bound = theorem_bound(n, rep.m);
  rep.conj_slack = rep.qn - rep.conj_bound;
  rep.thm_slack = rep.qn - rep.thm_bound;
  rep.conj_holds = rep.conj_slack >= -tol;
  rep.thm_holds = rep.thm_slack >= -tol;
  rep.merris_upper = merris_q1_upper(g);
  if (rep.m > 0)
    rep.edge_degree_upper = edge_degree_q1_upper(g);
  rep.lemma23_lower = lemma23_lower(n, rep.k);
  rep.lemma23_hypothesis = rep.k < n;
  rep.lemma24_applicable = lemma24_applicable(profile, n);
  if (rep.lemma24_applicable)
    rep.lemma24_lower = lemma24_lower(n, rep.k);
  return rep;
}

namespace {

struct Accumulator {
  std::uint64_t count = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::string argmin;
  std::vector<Violation> violations;

  auto offer(double slack, const Graph &g) -> void {
    if (slack > min_slack)
      return;
    std::string g6 = to_graph6(g);
    if (slack < min_slack || argmin.empty() || g6 < argmin) {
      min_slack = slack;
      argmin = std::move(g6);
    }
  }

  auto merge(const Accumulator &other) -> void {
    count += other.count;
    if (other.count > 0 && (other.min_slack < min_slack ||
                            (other.min_slack == min_slack && other.argmin < argmin))) {
      min_slack = other.min_slack;
      argmin = other.argmin;
    }
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

auto least_eigenvalue(const Graph &g, double eigen_tol) -> double {
  return eigen_sym(signless_laplacian(g), eigen_tol).values.back();
}

auto check_order_for(BoundKind kind, int n) -> void {
  const int minimum = kind == BoundKind::theorem ? 3 : 2;
  if (n < minimum)
    throw std::invalid_argument(std::string(to_string(kind)) + " bound needs n >= " +
                                std::to_string(minimum));
}

}  // namespace

auto verify_bound(const EnumSpec &spec, BoundKind kind, double tol, int jobs) -> VerifyRun {
  spec.validate();
  check_order_for(kind, spec.n);
  jobs = std::max(1, jobs);
  const auto start = std::chrono::steady_clock::now();

  std::vector<Accumulator> shards(jobs);
  enumerate_graphs_parallel(spec, jobs, [&](int worker, const Graph &g) {
    Accumulator &acc = shards[worker];
    ++acc.count;
    const int n = g.order();
    const long m = g.edge_count();
    const double bound = bound_value(kind, n, m);
    double qn = least_eigenvalue(g, kDefaultEigenTol);
    double slack = qn - bound;
    if (slack < -tol) {
      qn = least_eigenvalue(g, kConfirmEigenTol);
      slack = qn - bound;
      if (slack < -tol)
        acc.violations.push_back({to_graph6(g), qn, bound, slack});
    }
    acc.offer(slack, g);
  });

  Accumulator total;
  for (const Accumulator &acc : shards)
    total.merge(acc);
  std::sort(total.violations.begin(), total.violations.end(),
            [](const Violation &a, const Violation &b) { return a.graph6 < b.graph6; });

  VerifyRun run;
  run.spec = spec;
  run.bound = kind;
  run.count = total.count;
  run.min_slack = total.min_slack;
  run.argmin_graph6 = total.argmin;
  run.violations = std::move(total.violations);
  run.tol = tol;
  run.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

auto ProofAudit::passed() const -> bool {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck &c) { return c.passed; });
}

auto audit_graph(const Graph &g, double tol) -> ProofAudit {
  const int n = g.order();
  if (n < 3)
    throw std::invalid_argument("audit_graph: n must be at least 3");
  const Graph gc = complement(g);
  const DegreeProfile profile = degree_profile(g);
  const double qn = eigen_sym(signless_laplacian(g)).values.back();
  const double q1c = eigen_sym(signless_laplacian(gc)).values.front();

  ProofAudit audit;
  audit.graph6 = to_graph6(g);
  audit.n = n;
  audit.m = g.edge_count();
  audit.r = edge_surplus(n, audit.m);
  audit.k = profile.full;

  auto add = [&](std::string id, double lhs, double rhs) {
    audit.checks.push_back({std::move(id), lhs, rhs, lhs <= rhs + tol});
  };
  add("weyl", (n - 2) - qn, q1c);
  const int complement_edges = gc.edge_count();
  if (complement_edges > 0) {
    const double edge_degree = edge_degree_q1_upper(gc);
    add("complement_q1_edge_degree", q1c, edge_degree);
    add("edge_degree_edges", edge_degree, complement_edges + 1.0);
    add("edges_surplus", complement_edges + 1.0, static_cast<double>(n - audit.r));
  }
  if (audit.k < n)
    add("lemma23", lemma23_lower(n, audit.k), qn);
  if (lemma24_applicable(profile, n))
    add("lemma24", lemma24_lower(n, audit.k), qn);
  add("theorem_surplus", 2.0 * static_cast<double>(audit.r) / (n - 2), qn);
  return audit;
}

auto audit_proof(int n, double tol, int jobs) -> std::vector<ProofAudit> {
  if (n < 6 || n > 9)
    throw std::invalid_argument("audit_proof: n must be in 6..9");
  jobs = std::max(1, jobs);
  EnumSpec spec;
  spec.n = n;
  spec.connected_only = true;
  spec.m_min = static_cast<int>((n - 1) * (n - 2) / 2 + 1);

  std::vector<std::vector<ProofAudit>> shards(jobs);
  enumerate_graphs_parallel(spec, jobs, [&](int worker, const Graph &g) {
    shards[worker].push_back(audit_graph(g, tol));
  });
  std::vector<ProofAudit> all;
  for (auto &s : shards)
    std::move(s.begin(), s.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end(),
            [](const ProofAudit &a, const ProofAudit &b) { return a.graph6 < b.graph6; });
  return all;
}

auto extremal_slack(int n, int m, BoundKind kind, int jobs) -> Extremal {
  if (n < 3 || n > 9)
    throw std::invalid_argument("extremal_slack: n must be in 3..9");
  if (m < 0 || m > n * (n - 1) / 2)
    throw std::invalid_argument("extremal_slack: m outside 0..n(n-1)/2");
  EnumSpec spec;
  spec.n = n;
  spec.connected_only = true;
  spec.m_min = m;
  spec.m_max = m;
  const VerifyRun run = verify_bound(spec, kind, kSlackTol, jobs);
  if (run.count == 0)
    throw std::invalid_argument("no connected graph on " + std::to_string(n) + " vertices has " +
                                std::to_string(m) + " edges");
  return {n, m, kind, run.count, run.min_slack, run.argmin_graph6};
}

}  // namespace signless
