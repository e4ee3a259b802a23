#include "report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

#ifndef SIGNLESS_VERSION
#define SIGNLESS_VERSION "0.0.0"
#endif

namespace signless::report {

namespace {

auto number_or_null(double x) -> Json {
  if (!std::isfinite(x))
    return nullptr;
  return x;
}

auto csv_quote(const std::string &s) -> std::string {
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"')
      quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

template <class T>
auto optional_json(const std::optional<T> &x) -> Json {
  if (!x)
    return nullptr;
  return *x;
}

}  // namespace

auto format_double(double x) -> std::string {
  if (!std::isfinite(x))
    return {};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

auto to_json(const EnumSpec &spec) -> Json {
  Json j;
  j["n"] = spec.n;
  j["connected_only"] = spec.connected_only;
  j["m_min"] = optional_json(spec.m_min);
  j["m_max"] = optional_json(spec.m_max);
  return j;
}

auto to_json(const Spectrum &spectrum) -> Json {
  Json j;
  j["values"] = spectrum.values;
  j["max_residual"] = spectrum.max_residual;
  j["sweeps"] = spectrum.sweeps;
  if (spectrum.vectors) {
    Json cols = Json::array();
    for (std::size_t i = 0; i < spectrum.values.size(); ++i) {
      const auto v = spectrum.vector(static_cast<int>(i));
      cols.push_back(std::vector<double>(v.begin(), v.end()));
    }
    j["vectors"] = std::move(cols);
  }
  return j;
}

auto to_json(const BoundReport &r) -> Json {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["r"] = r.r;
  j["k"] = r.k;
  j["near_full"] = r.near_full;
  j["q1"] = r.q1;
  j["qn"] = r.qn;
  j["conj_bound"] = r.conj_bound;
  j["thm_bound"] = r.thm_bound;
  j["conj_slack"] = r.conj_slack;
  j["thm_slack"] = r.thm_slack;
  j["conj_holds"] = r.conj_holds;
  j["thm_holds"] = r.thm_holds;
  j["merris_upper"] = r.merris_upper;
  j["edge_degree_upper"] = optional_json(r.edge_degree_upper);
  j["lemma23_lower"] = r.lemma23_lower;
  j["lemma23_hypothesis"] = r.lemma23_hypothesis;
  j["lemma24_applicable"] = r.lemma24_applicable;
  j["lemma24_lower"] = optional_json(r.lemma24_lower);
  return j;
}

auto to_json(const VerifyRun &run, bool include_timing) -> Json {
  Json j;
  j["spec"] = to_json(run.spec);
  j["bound"] = std::string(to_string(run.bound));
  j["count"] = run.count;
  j["min_slack"] = number_or_null(run.min_slack);
  j["argmin_graph6"] = run.argmin_graph6;
  j["tol"] = run.tol;
  Json violations = Json::array();
  for (const Violation &v : run.violations) {
    Json item;
    item["graph6"] = v.graph6;
    item["qn"] = v.qn;
    item["bound"] = v.bound;
    item["slack"] = v.slack;
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  if (include_timing)
    j["elapsed_seconds"] = run.elapsed_seconds;
  return j;
}

auto to_json(const ProofAudit &audit) -> Json {
  Json j;
  j["graph6"] = audit.graph6;
  j["n"] = audit.n;
  j["m"] = audit.m;
  j["r"] = audit.r;
  j["k"] = audit.k;
  j["passed"] = audit.passed();
  Json checks = Json::array();
  for (const AuditCheck &c : audit.checks) {
    Json item;
    item["id"] = c.id;
    item["lhs"] = c.lhs;
    item["rhs"] = c.rhs;
    item["passed"] = c.passed;
    checks.push_back(std::move(item));
  }
  j["checks"] = std::move(checks);
  return j;
}

auto to_json(const Extremal &e) -> Json {
  Json j;
  j["n"] = e.n;
  j["m"] = e.m;
  j["bound"] = std::string(to_string(e.bound));
  j["count"] = e.count;
  j["min_slack"] = e.min_slack;
  j["witness_graph6"] = e.witness_graph6;
  return j;
}

auto utc_timestamp() -> std::string {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

auto make_record(std::string_view command, Json params, Json result) -> Json {
  Json j;
  j["tool"] = "signless";
  j["version"] = SIGNLESS_VERSION;
  j["command"] = std::string(command);
  j["params"] = std::move(params);
  j["result"] = std::move(result);
  j["timestamp"] = utc_timestamp();
  return j;
}

auto write_bounds_csv_header(std::ostream &out) -> void {
  out << "graph6,n,m,r,k,near_full,q1,qn,conj_bound,thm_bound,conj_slack,thm_slack,"
         "merris_upper,edge_degree_upper,lemma23_lower,lemma23_hypothesis,"
         "lemma24_applicable,lemma24_lower\n";
}

auto write_bounds_csv_row(std::ostream &out, const std::string &graph6, const BoundReport &r)
    -> void {
  out << csv_quote(graph6) << ',' << r.n << ',' << r.m << ',' << r.r << ',' << r.k << ',' << r.near_full
      << ',' << format_double(r.q1) << ',' << format_double(r.qn) << ','
      << format_double(r.conj_bound) << ',' << format_double(r.thm_bound) << ','
      << format_double(r.conj_slack) << ',' << format_double(r.thm_slack) << ','
      << format_double(r.merris_upper) << ','
      << (r.edge_degree_upper ? format_double(*r.edge_degree_upper) : "") << ','
      << format_double(r.lemma23_lower) << ',' << (r.lemma23_hypothesis ? 1 : 0) << ','
      << (r.lemma24_applicable ? 1 : 0) << ','
      << (r.lemma24_lower ? format_double(*r.lemma24_lower) : "") << '\n';
}

auto write_verify_csv_header(std::ostream &out) -> void {
  out << "n,bound,connected_only,m_min,m_max,count,min_slack,argmin_graph6,violations,tol\n";
}

auto write_verify_csv_row(std::ostream &out, const VerifyRun &run) -> void {
  out << run.spec.n << ',' << to_string(run.bound) << ',' << (run.spec.connected_only ? 1 : 0)
      << ',' << (run.spec.m_min ? std::to_string(*run.spec.m_min) : "") << ','
      << (run.spec.m_max ? std::to_string(*run.spec.m_max) : "") << ',' << run.count << ','
      << format_double(run.min_slack) << ',' << csv_quote(run.argmin_graph6) << ','
      << run.violations.size() << ',' << format_double(run.tol) << '\n';
}

auto write_audit_csv_header(std::ostream &out) -> void {
  out << "graph6,n,m,r,k,check,lhs,rhs,passed\n";
}

auto write_audit_csv_rows(std::ostream &out, const ProofAudit &audit) -> void {
  const std::string g6 = csv_quote(audit.graph6);
  for (const AuditCheck &c : audit.checks)
    out << g6 << ',' << audit.n << ',' << audit.m << ',' << audit.r << ',' << audit.k << ','
        << c.id << ',' << format_double(c.lhs) << ',' << format_double(c.rhs) << ','
        << (c.passed ? 1 : 0) << '\n';
}

}  // namespace signless::report
