// cyclecount: exact graphical r-cycle polynomials, moments, and a claim
// verification engine over a brute-force oracle and a subset-DP engine.
//
// Subcommands: poly, moments, verify, scan, bench. Exit codes: 0 success,
// 1 pinned-verdict mismatch, 2 parameter error, 3 resource guard, 4 parse
// error. All big integers print as decimal strings; exact rationals carry
// "p/q" companions next to any decimal rendering.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclecount/claims.hpp"
#include "cyclecount/corpus.hpp"
#include "cyclecount/engine.hpp"
#include "cyclecount/graph.hpp"
#include "cyclecount/oracle.hpp"
#include "cyclecount/stats.hpp"

namespace cc = cyclecount;
using nlohmann::json;

namespace {

struct GraphInput {
  std::string family;
  std::string file;
  int r = -1;  // -1: keep the source's r
  bool hub_last = false;
};

int env_max_n(int fallback) {
  if (const char* env = std::getenv("CYCLECOUNT_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw cc::parameter_error("CYCLECOUNT_MAX_N must be an integer");
    }
  }
  return fallback;
}

cc::LabeledGraph load_graph(const GraphInput& in) {
  cc::LabeledGraph g;
  if (!in.family.empty() && !in.file.empty())
    throw cc::parameter_error("give either --family or --file, not both");
  if (!in.family.empty()) {
    g = cc::make_family(cc::parse_family_spec(in.family, std::max(0, in.r), in.hub_last));
  } else if (!in.file.empty()) {
    std::ifstream stream(in.file);
    if (!stream) throw cc::parse_error("cannot open graph file '" + in.file + "'");
    std::stringstream buf;
    buf << stream.rdbuf();
    g = cc::parse_graph(buf.str());
  } else {
    throw cc::parameter_error("a graph is required: --family NAME:SIZE or --file PATH");
  }
  if (in.r >= 0) g = g.with_r(in.r);
  return g;
}

int precision = 12;  // significant digits for decimal rendering

json moments_json(const cc::MomentSummary& m) {
  return json{{"mean",
               {{"exact", cc::to_fraction(m.mean)}, {"decimal", cc::to_decimal_string(m.mean, precision)}}},
              {"variance",
               {{"exact", cc::to_fraction(m.variance)},
                {"decimal", cc::to_decimal_string(m.variance, precision)}}},
              {"support", {m.k_min, m.k_max}},
              {"total", cc::to_decimal(m.total)}};
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

void add_graph_flags(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("--family", in.family, "family spec, e.g. path:5, tadpole:4,2");
  cmd->add_option("--file", in.file, "graph JSON file: {\"n\":..,\"edges\":[[u,v],..],\"r\":..}");
  cmd->add_option("--r", in.r, "restricted prefix size (overrides the source's r)");
  cmd->add_flag("--hub-last", in.hub_last, "place star/wheel/fan hub at the last label");
}

int cmd_poly(const GraphInput& in, bool use_oracle, bool with_moments, const std::string& format,
             int max_n_flag, int threads, bool moments_only) {
  const cc::LabeledGraph g = load_graph(in);
  cc::Polynomial p;
  if (use_oracle) {
    const int limit = max_n_flag > 0 ? max_n_flag : env_max_n(cc::kDefaultOracleLimit);
    p = cc::brute_force_polynomial(g, limit);
  } else {
    const int limit = max_n_flag > 0 ? max_n_flag : env_max_n(cc::kDefaultEngineLimit);
    p = cc::cycle_polynomial(g, limit, threads);
  }
  const bool want_moments = with_moments || moments_only;
  std::optional<cc::MomentSummary> moments;
  if (want_moments) moments = cc::moments_from_polynomial(p);

  if (format == "json") {
    json out;
    out["graph"] = cc::graph_to_json(g);
    out["method"] = use_oracle ? "oracle" : "engine";
    if (!moments_only) {
      out["coefficients"] = p.to_json();
      out["total"] = cc::to_decimal(p.total());
    }
    if (moments) out["moments"] = moments_json(*moments);
    std::cout << out.dump(2) << "\n";
  } else {
    if (!moments_only) {
      std::cout << "C_r(G, x) = " << p.to_string() << "\n";
      std::cout << "coefficients:";
      for (int k = 0; k <= p.degree(); ++k) std::cout << " " << p.coeff(k);
      std::cout << "\ntotal: " << p.total() << "\n";
    }
    if (moments) {
      std::cout << "mean: " << cc::to_fraction(moments->mean) << " ("
                << cc::to_decimal_string(moments->mean, precision) << ")\n";
      std::cout << "variance: " << cc::to_fraction(moments->variance) << " ("
                << cc::to_decimal_string(moments->variance, precision) << ")\n";
      std::cout << "support: [" << moments->k_min << ", " << moments->k_max << "]\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& format, const std::string& expect_path, int grid_n,
               bool no_scans) {
  cc::RegistryOptions opts;
  if (grid_n > 0) {
    opts.coeff_n = grid_n;
    opts.poly_n = std::min(grid_n, opts.poly_n);
    opts.moments_n = std::min(grid_n, opts.moments_n);
  }
  opts.include_scans = !no_scans;
  const cc::DiscrepancyReport report = cc::run_claim_registry(opts);

  if (format == "json")
    std::cout << cc::report_to_json(report).dump(2) << "\n";
  else
    std::cout << cc::report_to_table(report);

  if (!expect_path.empty()) {
    std::ifstream stream(expect_path);
    if (!stream) throw cc::parse_error("cannot open expect file '" + expect_path + "'");
    json expected;
    try {
      stream >> expected;
    } catch (const json::parse_error& err) {
      throw cc::parse_error(std::string("expect file: ") + err.what());
    }
    const auto mismatches = cc::compare_expectations(report, expected);
    if (!mismatches.empty()) {
      for (const auto& m : mismatches) std::cerr << "verdict mismatch: " << m << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_scan(const std::string& family, const std::string& range, int r, bool conjectures,
             int max_n_flag, const std::string& format) {
  if (conjectures) {
    const int max_n = max_n_flag > 0 ? max_n_flag : 9;
    auto corpus = cc::default_family_corpus(max_n);
    const auto report = cc::conjecture_scan(corpus, 3);
    if (format == "json") {
      json rows = json::array();
      for (const auto& row : report.rows) {
        rows.push_back({{"name", row.name},
                        {"n", row.n},
                        {"log_concave", row.shape.log_concave},
                        {"unimodal", row.shape.unimodal},
                        {"real_rooted", row.shape.real_rooted},
                        {"weak_r_monotone", row.weak_r_monotone},
                        {"strict_r_monotone", row.strict_r_monotone},
                        {"restriction_invisible", row.restriction_invisible}});
      }
      json out{{"graphs", rows},
               {"shape_violations", report.shape_violations},
               {"strictness_failures", report.strictness_failures},
               {"equality_graphs", report.equality_graphs}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "conjecture scan over " << report.rows.size() << " graphs (n <= " << max_n
                << ")\n";
      std::cout << "shape violations (unimodality/log-concavity): "
                << report.shape_violations.size() << "\n";
      std::cout << "strict r-monotonicity failures: " << report.strictness_failures.size()
                << "\n";
      for (const auto& s : report.strictness_failures) std::cout << "  " << s << "\n";
      std::cout << "restriction-invisible graphs ({G k}_r = {G k}):\n";
      for (const auto& s : report.equality_graphs) std::cout << "  " << s << "\n";
    }
    return 0;
  }

  if (family.empty() || range.empty())
    throw cc::parameter_error("scan needs --family and --n LO:HI (or --conjectures)");
  const auto colon = range.find(':');
  if (colon == std::string::npos)
    throw cc::parameter_error("--n expects LO:HI, e.g. --n 100:400");
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(range.substr(0, colon));
    hi = std::stoi(range.substr(colon + 1));
  } catch (const std::exception&) {
    throw cc::parameter_error("--n expects integers LO:HI");
  }
  const cc::FamilySpec spec = cc::parse_family_spec(family + ":0");
  const auto rep = cc::asymptotic_scan(spec.family, lo, hi, r);

  if (format == "json") {
    json points = json::array();
    for (const auto& pt : rep.points)
      points.push_back({{"n", pt.n},
                        {"mean", {{"exact", cc::to_fraction(pt.mean)},
                                  {"decimal", cc::to_decimal_string(pt.mean, precision)}}},
                        {"variance", {{"exact", cc::to_fraction(pt.variance)},
                                      {"decimal", cc::to_decimal_string(pt.variance, precision)}}}});
    json claims = json::array();
    for (const auto& c : rep.claimed)
      claims.push_back({{"label", c.label},
                        {"value", c.value},
                        {"abs_error", c.abs_error},
                        {"within_band", c.within_band}});
    json out{{"family", cc::family_name(rep.family)},
             {"r", rep.r},
             {"range", {rep.n_lo, rep.n_hi}},
             {"trend", rep.trend},
             {"measured_head", rep.measured_head},
             {"measured_tail", rep.measured_tail},
             {"slope_stable", rep.slope_stable},
             {"points", points},
             {"claimed_constants", claims}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "scan " << cc::family_name(rep.family) << " n in [" << rep.n_lo << ", "
              << rep.n_hi << "], r = " << rep.r << " (" << rep.trend << " trend)\n";
    std::cout << "measured head/tail: " << rep.measured_head << " / " << rep.measured_tail
              << (rep.slope_stable ? " (stable)" : " (NOT stable)") << "\n";
    for (const auto& c : rep.claimed)
      std::cout << "claimed " << c.label << " = " << c.value << ", |err| = " << c.abs_error
                << (c.within_band ? " (within band)" : "") << "\n";
    for (const auto& pt : rep.points)
      std::cout << "  n=" << pt.n << " mean=" << cc::to_decimal_string(pt.mean, precision) << " ("
                << cc::to_fraction(pt.mean) << ") var=" << cc::to_decimal_string(pt.variance, precision)
                << "\n";
  }
  return 0;
}

int cmd_bench(const std::string& family, int max_n_flag, int threads) {
  using clock = std::chrono::steady_clock;
  auto run_one = [&](const std::string& name, const cc::LabeledGraph& g) {
    const auto t0 = clock::now();
    cc::BlockWeightTable table(g, env_max_n(cc::kDefaultEngineLimit), threads);
    const auto t1 = clock::now();
    const cc::Polynomial p = cc::cycle_polynomial(g, table);
    const auto t2 = clock::now();
    std::string payload;
    for (int k = 0; k <= p.degree(); ++k) payload += p.coeff(k).str() + ",";
    const double table_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const double poly_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    std::cout << name << ": table " << table_ms << " ms, polynomial " << poly_ms
              << " ms, hash " << std::hex << fnv1a(payload) << std::dec << "\n";
  };
  if (!family.empty()) {
    const auto spec = cc::parse_family_spec(family);
    run_one(family, cc::make_family(spec));
    return 0;
  }
  const int top = max_n_flag > 0 ? max_n_flag : 12;
  for (int n = 4; n <= top; n += 2)
    run_one("complete:" + std::to_string(n), cc::make_family({cc::Family::complete, n}));
  for (int n = 4; n <= top; n += 2)
    run_one("cycle:" + std::to_string(n), cc::make_family({cc::Family::cycle, n}));
  for (int n = 4; n + 1 <= top; n += 2)
    run_one("wheel:" + std::to_string(n), cc::make_family({cc::Family::wheel, n}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graphical r-cycle polynomials, moments, and claim verification"};
  app.require_subcommand(1);

  GraphInput in;
  bool use_oracle = false, use_engine = false, with_moments = false;
  std::string format = "table";
  int max_n_flag = 0, threads = 1;

  auto* poly = app.add_subcommand("poly", "compute C_r(G, x)");
  add_graph_flags(poly, in);
  poly->add_flag("--oracle", use_oracle, "use the brute-force oracle");
  poly->add_flag("--engine", use_engine, "use the subset-DP engine (default)");
  poly->add_flag("--moments", with_moments, "also print exact moments");
  poly->add_option("--format", format, "json|table")->check(CLI::IsMember({"json", "table"}));
  poly->add_option("--max-n", max_n_flag, "override the vertex guard");
  poly->add_option("--precision", precision, "significant digits for decimal rendering");
  poly->add_option("--threads", threads, "worker threads for the block-weight table");

  auto* moments = app.add_subcommand("moments", "exact mean/variance of the block count");
  add_graph_flags(moments, in);
  moments->add_flag("--oracle", use_oracle, "use the brute-force oracle");
  moments->add_flag("--engine", use_engine, "use the subset-DP engine (default)");
  moments->add_option("--format", format, "json|table")->check(CLI::IsMember({"json", "table"}));
  moments->add_option("--max-n", max_n_flag, "override the vertex guard");
  moments->add_option("--precision", precision, "significant digits for decimal rendering");
  moments->add_option("--threads", threads, "worker threads for the block-weight table");

  std::string expect_path;
  int grid_n = 0;
  bool no_scans = false;
  auto* verify = app.add_subcommand("verify", "run the full claim registry");
  verify->add_option("--format", format, "json|table")->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--expect", expect_path, "JSON file pinning verdicts per claim id");
  verify->add_option("--grid-n", grid_n, "cap the coefficient grids (speed/coverage)");
  verify->add_flag("--no-scans", no_scans, "skip the large-n asymptotic claims");

  std::string scan_family, scan_range;
  int scan_r = 1;
  bool conjectures = false;
  auto* scan = app.add_subcommand("scan", "asymptotic slope and conjecture scans");
  scan->add_option("--family", scan_family, "path|cycle|complete|complement_path");
  scan->add_option("--n", scan_range, "size range LO:HI");
  scan->add_option("--r", scan_r, "restricted prefix size");
  scan->add_flag("--conjectures", conjectures, "scan the default corpus for the conjectures");
  scan->add_option("--corpus", [](const std::vector<std::string>&) { return true; },
                   "corpus name (only 'default')");
  scan->add_option("--max-n", max_n_flag, "corpus size cap for --conjectures");
  scan->add_option("--format", format, "json|table")->check(CLI::IsMember({"json", "table"}));
  scan->add_option("--precision", precision, "significant digits for decimal rendering");

  std::string bench_family;
  auto* bench = app.add_subcommand("bench", "time the table build and polynomial");
  bench->add_option("--family", bench_family, "single family spec, e.g. complete:16");
  bench->add_option("--max-n", max_n_flag, "series cap for the default suite");
  bench->add_option("--threads", threads, "worker threads for the block-weight table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (poly->parsed())
      return cmd_poly(in, use_oracle, with_moments, format, max_n_flag, threads, false);
    if (moments->parsed())
      return cmd_poly(in, use_oracle, true, format, max_n_flag, threads, true);
    if (verify->parsed()) return cmd_verify(format, expect_path, grid_n, no_scans);
    if (scan->parsed())
      return cmd_scan(scan_family, scan_range, scan_r, conjectures, max_n_flag, format);
    if (bench->parsed()) return cmd_bench(bench_family, max_n_flag, threads);
  } catch (const cc::parameter_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const cc::resource_guard_error& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const cc::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
