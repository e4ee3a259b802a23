#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>

#include "report.hpp"
#include "signless/canonical.hpp"
#include "signless/enumerate.hpp"
#include "signless/graph6.hpp"
#include "signless/spectral.hpp"
#include "signless/verify.hpp"

namespace signless::cli {

using report::Json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

auto parse_int(std::string_view text) -> int {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return value;
}

/// A single positional graph6 string, or one per line of standard input for "-".
auto read_graphs(const std::string &arg, std::istream &in) -> std::vector<std::string> {
  std::vector<std::string> lines;
  if (arg != "-") {
    lines.push_back(arg);
    return lines;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (!line.empty())
      lines.push_back(line);
  }
  return lines;
}

auto optional_int(const std::optional<int> &x) -> Json {
  if (!x)
    return nullptr;
  return *x;
}

enum class Format { json, csv };

auto parse_format(const std::string &text) -> Format {
  if (text == "json")
    return Format::json;
  if (text == "csv")
    return Format::csv;
  throw UsageError("--out must be json or csv");
}

struct SpectrumOpts {
  std::string graph;
  bool vectors = false;
  double tol = kDefaultEigenTol;
};

auto cmd_spectrum(const SpectrumOpts &o, Streams io) -> int {
  for (const std::string &g6 : read_graphs(o.graph, io.in)) {
    const Graph g = from_graph6(g6);
    const Spectrum s = eigen_sym(signless_laplacian(g), o.tol, o.vectors);
    Json params;
    params["graph6"] = g6;
    params["vectors"] = o.vectors;
    params["tol"] = o.tol;
    Json result = report::to_json(s);
    io.out << report::make_record("spectrum", std::move(params), std::move(result)).dump() << '\n';
  }
  return kOk;
}

struct BoundsOpts {
  std::string graph;
  std::string out = "json";
  double tol = kSlackTol;
};

auto cmd_bounds(const BoundsOpts &o, Streams io) -> int {
  const Format fmt = parse_format(o.out);
  if (fmt == Format::csv)
    report::write_bounds_csv_header(io.out);
  for (const std::string &g6 : read_graphs(o.graph, io.in)) {
    const BoundReport rep = check_graph(from_graph6(g6), o.tol);
    if (fmt == Format::csv) {
      report::write_bounds_csv_row(io.out, g6, rep);
      continue;
    }
    Json params;
    params["graph6"] = g6;
    params["tol"] = o.tol;
    io.out << report::make_record("bounds", std::move(params), report::to_json(rep)).dump()
           << '\n';
  }
  return kOk;
}

struct VerifyOpts {
  std::string bound;
  std::string n;
  bool connected = false;
  double tol = kSlackTol;
  std::optional<int> m_min;
  std::optional<int> m_max;
  int jobs = 1;
  std::string out = "json";
  bool timing = false;
};

auto cmd_verify(const VerifyOpts &o, Streams io) -> int {
  const BoundKind kind = parse_bound_kind(o.bound);
  const auto [lo, hi] = parse_range(o.n);
  const Format fmt = parse_format(o.out);
  if (o.jobs < 1)
    throw UsageError("--jobs must be at least 1");

  if (fmt == Format::csv)
    report::write_verify_csv_header(io.out);
  bool violated = false;
  for (int n = lo; n <= hi; ++n) {
    EnumSpec spec;
    spec.n = n;
    spec.connected_only = o.connected;
    spec.m_min = o.m_min;
    spec.m_max = o.m_max;
    const VerifyRun run = verify_bound(spec, kind, o.tol, o.jobs);
    violated |= !run.violations.empty();
    io.err << "verify " << to_string(kind) << " n=" << n << ": " << run.count << " graphs, "
           << run.violations.size() << " violations, min slack "
           << report::format_double(run.min_slack) << " (" << run.elapsed_seconds << " s)\n";
    if (fmt == Format::csv) {
      report::write_verify_csv_row(io.out, run);
      continue;
    }
    Json params;
    params["bound"] = std::string(to_string(kind));
    params["n"] = n;
    params["connected"] = o.connected;
    params["tol"] = o.tol;
    params["m_min"] = optional_int(o.m_min);
    params["m_max"] = optional_int(o.m_max);
    params["jobs"] = o.jobs;
    io.out << report::make_record("verify", std::move(params), report::to_json(run, o.timing))
                  .dump()
           << '\n';
  }
  return violated ? kViolations : kOk;
}

struct AuditOpts {
  int n = 0;
  double tol = kSlackTol;
  int jobs = 1;
  std::string out = "json";
};

auto cmd_audit(const AuditOpts &o, Streams io) -> int {
  const Format fmt = parse_format(o.out);
  if (o.jobs < 1)
    throw UsageError("--jobs must be at least 1");
  const std::vector<ProofAudit> audits = audit_proof(o.n, o.tol, o.jobs);
  std::size_t failed = 0;
  for (const ProofAudit &a : audits)
    failed += a.passed() ? 0 : 1;
  io.err << "audit n=" << o.n << ": " << audits.size() << " graphs, " << failed << " failing\n";

  if (fmt == Format::csv) {
    report::write_audit_csv_header(io.out);
    for (const ProofAudit &a : audits)
      report::write_audit_csv_rows(io.out, a);
  } else {
    Json params;
    params["n"] = o.n;
    params["tol"] = o.tol;
    params["jobs"] = o.jobs;
    Json result;
    result["n"] = o.n;
    result["count"] = audits.size();
    result["failed"] = failed;
    Json list = Json::array();
    for (const ProofAudit &a : audits)
      list.push_back(report::to_json(a));
    result["audits"] = std::move(list);
    io.out << report::make_record("audit", std::move(params), std::move(result)).dump() << '\n';
  }
  return failed == 0 ? kOk : kViolations;
}

struct EnumerateOpts {
  int n = 0;
  bool connected = false;
  std::optional<int> m_min;
  std::optional<int> m_max;
  bool count_only = false;
};

auto cmd_enumerate(const EnumerateOpts &o, Streams io) -> int {
  EnumSpec spec;
  spec.n = o.n;
  spec.connected_only = o.connected;
  spec.m_min = o.m_min;
  spec.m_max = o.m_max;
  std::uint64_t count = 0;
  if (o.count_only) {
    count = enumerate_graphs(spec, [](const Graph &) {});
    io.out << count << '\n';
  } else {
    enumerate_graphs(spec, [&](const Graph &g) { io.out << to_graph6(g) << '\n'; });
  }
  return kOk;
}

struct ExtremalOpts {
  int n = 0;
  int m = 0;
  std::string bound = "theorem";
  int jobs = 1;
};

auto cmd_extremal(const ExtremalOpts &o, Streams io) -> int {
  const BoundKind kind = parse_bound_kind(o.bound);
  const Extremal e = extremal_slack(o.n, o.m, kind, o.jobs);
  Json params;
  params["n"] = o.n;
  params["m"] = o.m;
  params["bound"] = std::string(to_string(kind));
  params["jobs"] = o.jobs;
  io.out << report::make_record("extremal", std::move(params), report::to_json(e)).dump() << '\n';
  return kOk;
}

}  // namespace

auto parse_range(const std::string &text) -> std::pair<int, int> {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(text);
    return {n, n};
  }
  const int lo = parse_int(std::string_view(text).substr(0, dots));
  const int hi = parse_int(std::string_view(text).substr(dots + 2));
  if (lo > hi)
    throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

auto run(const std::vector<std::string> &args, Streams io) -> int {
  CLI::App app{"Signless Laplacian spectra, least-eigenvalue bounds, and exhaustive small-graph "
               "verification"};
  app.name("signless");
  app.require_subcommand(1);

  SpectrumOpts spectrum;
  auto *sp = app.add_subcommand("spectrum", "Eigenvalues of Q(G) for a graph6 string (or - for stdin)");
  sp->add_option("graph", spectrum.graph, "graph6 string, or - for one per line on stdin")->required();
  sp->add_flag("--vectors", spectrum.vectors, "Include eigenvectors");
  sp->add_option("--tol", spectrum.tol, "Relative Jacobi stopping threshold")->capture_default_str();

  BoundsOpts bounds;
  auto *bp = app.add_subcommand("bounds", "Evaluate every bound on a graph");
  bp->add_option("graph", bounds.graph, "graph6 string, or - for one per line on stdin")->required();
  bp->add_option("--out", bounds.out, "json or csv")->capture_default_str();
  bp->add_option("--tol", bounds.tol, "Slack tolerance")->capture_default_str();

  VerifyOpts verify;
  auto *vp = app.add_subcommand("verify", "Exhaustively check a lower bound on q_n");
  vp->add_option("--bound", verify.bound, "theorem or conjecture")->required();
  vp->add_option("--n", verify.n, "Vertex count N or range A..B")->required();
  vp->add_flag("--connected", verify.connected, "Connected graphs only");
  vp->add_option("--tol", verify.tol, "Slack tolerance")->capture_default_str();
  vp->add_option("--m-min", verify.m_min, "Minimum edge count");
  vp->add_option("--m-max", verify.m_max, "Maximum edge count");
  vp->add_option("--jobs", verify.jobs, "Worker threads")->capture_default_str();
  vp->add_option("--out", verify.out, "json or csv")->capture_default_str();
  vp->add_flag("--timing", verify.timing, "Include elapsed_seconds in the JSON result");

  AuditOpts audit;
  auto *ap = app.add_subcommand("audit", "Check the intermediate inequalities on the critical regime");
  ap->add_option("--n", audit.n, "Vertex count, 6..9")->required();
  ap->add_option("--tol", audit.tol, "Slack tolerance")->capture_default_str();
  ap->add_option("--jobs", audit.jobs, "Worker threads")->capture_default_str();
  ap->add_option("--out", audit.out, "json or csv")->capture_default_str();

  EnumerateOpts enumerate;
  auto *ep = app.add_subcommand("enumerate", "Stream one graph6 per isomorphism class");
  ep->add_option("--n", enumerate.n, "Vertex count, 1..10")->required();
  ep->add_flag("--connected", enumerate.connected, "Connected graphs only");
  ep->add_option("--m-min", enumerate.m_min, "Minimum edge count");
  ep->add_option("--m-max", enumerate.m_max, "Maximum edge count");
  ep->add_flag("--count-only", enumerate.count_only, "Print only the number of classes");

  ExtremalOpts extremal;
  auto *xp = app.add_subcommand("extremal", "Least slack over connected graphs with n vertices and m edges");
  xp->add_option("--n", extremal.n, "Vertex count, 3..9")->required();
  xp->add_option("--m", extremal.m, "Edge count")->required();
  xp->add_option("--bound", extremal.bound, "theorem or conjecture")->capture_default_str();
  xp->add_option("--jobs", extremal.jobs, "Worker threads")->capture_default_str();

  std::vector<const char *> argv{"signless"};
  for (const std::string &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (sp->parsed())
      return cmd_spectrum(spectrum, io);
    if (bp->parsed())
      return cmd_bounds(bounds, io);
    if (vp->parsed())
      return cmd_verify(verify, io);
    if (ap->parsed())
      return cmd_audit(audit, io);
    if (ep->parsed())
      return cmd_enumerate(enumerate, io);
    if (xp->parsed())
      return cmd_extremal(extremal, io);
  } catch (const std::exception &e) {
    io.err << "signless: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace signless::cli
