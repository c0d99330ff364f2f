// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] (optional) is the path to the CLI binary, used for the
// cross-process determinism and expectation-pinning checks.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifndef TEST_DATA_DIR
#define TEST_DATA_DIR "tests/data"
#endif

#include "cyclecount/claims.hpp"
#include "cyclecount/closed_forms.hpp"
#include "cyclecount/corpus.hpp"
#include "cyclecount/engine.hpp"
#include "cyclecount/oracle.hpp"
#include "cyclecount/stats.hpp"
#include "cyclecount/sturm.hpp"

using namespace cyclecount;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;
std::string cli_path;

void report(int criterion, bool pass, const std::string& label, const std::string& detail) {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << label;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!pass) ++failures;
}

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string run_cli(const std::string& args, int& exit_code) {
  const std::string cmd = cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// --- 1: oracle <-> engine equivalence ------------------------------------------

void criterion1() {
  const auto t0 = clock_type::now();
  int graphs = 0, mismatches = 0;
  std::string witness;
  auto check = [&](const std::string& name, const LabeledGraph& g) {
    for (int r = 0; r <= std::min(g.n, 3); ++r) {
      ++graphs;
      const auto gr = g.with_r(r);
      if (cycle_polynomial(gr) != brute_force_polynomial(gr)) {
        ++mismatches;
        if (witness.empty()) witness = name + " r=" + std::to_string(r);
      }
    }
  };
  for (const auto& e : default_family_corpus(9)) check(e.name, e.graph);
  for (const auto& e : seeded_random_corpus(50, 8)) check(e.name, e.graph);
  std::ostringstream detail;
  detail << graphs << " (graph, r) pairs, " << mismatches << " mismatches, "
         << seconds_since(t0) << "s";
  if (mismatches) detail << ", first: " << witness;
  report(1, mismatches == 0, "oracle <-> engine equivalence", detail.str());
}

// --- 2: complete graphs vs Broder recurrence and rising factorial ----------------

void criterion2() {
  bool ok = true;
  std::string detail;
  for (int r = 0; r <= 3 && ok; ++r) {
    const auto table = broder_recurrence_table(9, r);
    for (int n = std::max(1, r); n <= 9 && ok; ++n) {
      const auto engine = cycle_polynomial(make_family({Family::complete, n, 0, r}));
      const auto rf = rising_factorial(r, n);
      for (int k = 0; k <= n; ++k)
        if (engine.coeff(k) != rf.coeff(k) ||
            engine.coeff(k) != table[static_cast<size_t>(n)][static_cast<size_t>(k)]) {
          ok = false;
          detail = "K_" + std::to_string(n) + " r=" + std::to_string(r) +
                   " k=" + std::to_string(k);
          break;
        }
      if (r >= 1 && engine.total() != complete_total(n, r)) {
        ok = false;
        detail = "total K_" + std::to_string(n) + " r=" + std::to_string(r);
      }
    }
  }
  if (cycle_polynomial(make_family({Family::complete, 4, 0, 1})) !=
      Polynomial{0, 6, 11, 6, 1}) {
    ok = false;
    detail = "K_4 spot vector";
  }
  report(2, ok, "complete-graph coefficients, Broder recurrence, totals n!/r!", detail);
}

// --- 3: structural identity property suite (100 seeded instances each) -----------

void criterion3() {
  const auto t0 = clock_type::now();
  int bad = 0;
  std::string first;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      ++bad;
      if (first.empty()) first = what;
    }
  };

  const auto small = seeded_random_corpus(200, 6, 0xACC3ull);
  for (int i = 0; i < 100; ++i) {
    const auto& g1 = small[static_cast<size_t>(2 * i)].graph;
    const auto& g2 = small[static_cast<size_t>(2 * i + 1)].graph;
    expect(cycle_polynomial(disjoint_union(g1, g2)) ==
               cycle_polynomial(g1) * cycle_polynomial(g2),
           "union #" + std::to_string(i));
  }
  const auto mid = seeded_random_corpus(100, 8, 0xACC4ull);
  for (int i = 0; i < 100; ++i) {
    const auto& g = mid[static_cast<size_t>(i)].graph;
    const int m = 1 + i % 2;
    expect(cycle_polynomial(disjoint_union(g, make_family({Family::empty, m}))) ==
               cycle_polynomial(g).shifted(m),
           "isolation #" + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const auto& g = mid[static_cast<size_t>(i)].graph;
    const int w = 1 + i % g.n;
    expect(cycle_polynomial(add_pendant(g, w)) ==
               (cycle_polynomial(g) + cycle_polynomial(delete_vertex(g, w))).shifted(1),
           "pendant #" + std::to_string(i));
  }
  const auto brooms = seeded_random_corpus(100, 7, 0xACC5ull);
  for (int i = 0; i < 100; ++i) {
    const auto& g = brooms[static_cast<size_t>(i)].graph;
    const int w = 1 + i % g.n;
    const int ell = 1 + i % 3;
    expect(cycle_polynomial(add_broom(g, w, ell)) ==
               (cycle_polynomial(g) + cycle_polynomial(delete_vertex(g, w)).scaled(ell))
                   .shifted(ell),
           "broom #" + std::to_string(i));
  }
  const auto pairs = seeded_random_corpus(200, 6, 0xACC6ull);
  for (int i = 0; i < 100; ++i) {
    const auto& g1 = pairs[static_cast<size_t>(2 * i)].graph;
    const auto& g2 = pairs[static_cast<size_t>(2 * i + 1)].graph;
    const int u = 1 + i % g1.n, v = 1 + (i / 2) % g2.n;
    expect(cycle_polynomial(bridge_join(g1, u, g2, v)) ==
               cycle_polynomial(g1) * cycle_polynomial(g2) +
                   (cycle_polynomial(delete_vertex(g1, u)) *
                    cycle_polynomial(delete_vertex(g2, v)))
                       .shifted(1),
           "bridge #" + std::to_string(i));
  }
  std::ostringstream detail;
  detail << "500 instances, " << bad << " failures, " << seconds_since(t0) << "s";
  if (bad) detail << ", first: " << first;
  report(3, bad == 0, "union/isolation/pendant/broom/bridge identities", detail.str());
}

// --- 4: path and unrestricted-cycle closed forms vs the oracle --------------------

void criterion4() {
  const auto t0 = clock_type::now();
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 12 && ok; ++n)
    for (int r = 1; r <= std::min(n, 3) && ok; ++r) {
      const auto oracle = brute_force_polynomial(make_family({Family::path, n, 0, r}), 12);
      for (int k = 0; k <= n; ++k) {
        const Integer claim = (k >= r) ? path_coefficient(n, k, r) : Integer(0);
        if (oracle.coeff(k) != claim) {
          ok = false;
          detail = "path n=" + std::to_string(n) + " r=" + std::to_string(r) +
                   " k=" + std::to_string(k);
          break;
        }
      }
    }
  for (int n = 3; n <= 12 && ok; ++n) {
    const auto oracle = brute_force_polynomial(make_family({Family::cycle, n}), 12);
    for (int k = 1; k <= n; ++k)
      if (oracle.coeff(k) != cycle_coefficient_unrestricted(n, k)) {
        ok = false;
        detail = "cycle n=" + std::to_string(n) + " k=" + std::to_string(k);
        break;
      }
    if (oracle.coeff(1) != 2) {
      ok = false;
      detail = "cycle Hamiltonian term n=" + std::to_string(n);
    }
  }
  report(4, ok, "path {P_n k}_r = C(k-r+1, n-k) and cycle coefficients vs oracle (n <= 12)",
         ok ? std::to_string(seconds_since(t0)) + "s" : detail);
}

// --- 5: composite identities + real-rootedness -----------------------------------

void criterion5() {
  const auto t0 = clock_type::now();
  bool ok = true;
  std::string detail;
  auto fail = [&](const std::string& what) {
    if (ok) detail = what;
    ok = false;
  };
  for (int n = 3; n <= 7; ++n)
    for (int m = 1; m <= 7; ++m) {
      if (tadpole_polynomial(n, m, LucasVariant::full) !=
          cycle_polynomial(make_family({Family::tadpole, n, m})))
        fail("tadpole " + std::to_string(n) + "," + std::to_string(m));
    }
  for (int n = 2; n <= 7; ++n)
    for (int m = 1; m <= 7; ++m) {
      const auto poly = lollipop_polynomial(n, m);
      if (poly != cycle_polynomial(make_family({Family::lollipop, n, m})))
        fail("lollipop " + std::to_string(n) + "," + std::to_string(m));
      if (!sturm_real_rooted(poly).real_rooted)
        fail("lollipop real-rootedness " + std::to_string(n) + "," + std::to_string(m));
    }
  for (int n = 2; n <= 7; ++n) {
    const auto poly = barbell_polynomial(n);
    if (poly != cycle_polynomial(make_family({Family::barbell, n})))
      fail("barbell " + std::to_string(n));
    if (!sturm_real_rooted(poly).real_rooted)
      fail("barbell real-rootedness " + std::to_string(n));
  }
  std::ostringstream note;
  note << seconds_since(t0) << "s";
  if (!ok) note << ", first: " << detail;
  report(5, ok, "tadpole/lollipop/barbell identities (sizes <= 7) + Sturm real-rootedness",
         note.str());
}

// --- 6: exactness of moments ------------------------------------------------------

void criterion6() {
  bool ok = true;
  std::string detail;
  for (int n = 1; n <= 30; ++n)
    if (moments_from_polynomial(rising_factorial(1, n)).mean != harmonic(n)) {
      ok = false;
      detail = "K_" + std::to_string(n) + " mean != H_n";
      break;
    }
  for (int m = 2; m <= 9 && ok; ++m) {
    const auto degen = moments_from_polynomial(
        cycle_polynomial(make_family({Family::star, m, 0, m})));
    if (degen.variance != 0) {
      ok = false;
      detail = "star all-restricted variance not exactly 0";
    }
  }
  int negative = 0;
  for (const auto& e : default_family_corpus(9)) {
    if (e.graph.n < 1) continue;
    for (int r = 0; r <= std::min(e.graph.n, 3); ++r)
      if (moments_from_polynomial(cycle_polynomial(e.graph.with_r(r))).variance < 0) {
        ++negative;
        if (ok) detail = "negative variance: " + e.name + " r=" + std::to_string(r);
        ok = false;
      }
  }
  report(6, ok, "moment exactness: H_n means, degenerate star variance 0, variances >= 0",
         ok ? "" : detail);
}

// --- 7: verify-run completeness + convention audit --------------------------------

void criterion7() {
  const auto t0 = clock_type::now();
  const auto report_data = run_claim_registry({});
  bool ok = true;
  std::string detail;
  auto fail = [&](const std::string& what) {
    if (ok) detail = what;
    ok = false;
  };

  if (report_data.claims.size() < 25)
    fail("registry holds only " + std::to_string(report_data.claims.size()) + " claims");
  std::set<std::string> ids;
  for (const auto& o : report_data.claims) {
    ids.insert(o.id);
    if (o.verdict == Verdict::REFUTED && !o.witness) fail(o.id + " refuted without witness");
  }
  for (const char* required :
       {"w4-example-vector", "cycle-total-lucas", "path-total-fibonacci-r",
        "coalescence-identity", "wheel-closed-form", "fan-closed-form", "path-moments-mean",
        "cycle-moments-mean", "complete-moments-mean", "pnc-product-statement",
        "pnc-product-proof"})
    if (!ids.count(required)) fail(std::string("missing claim ") + required);

  // Convention audit: hand-derived expectations must match the oracle.
  struct Audit {
    const char* what;
    bool pass;
  };
  const auto oracle = [](const LabeledGraph& g) { return brute_force_polynomial(g); };
  const std::vector<Audit> audits = {
      {"W_4 vector", oracle(make_family({Family::wheel, 4})) == Polynomial{0, 8, 18, 18, 8, 1}},
      {"P_5 r=2 vector",
       oracle(make_family({Family::path, 5, 0, 2})) == Polynomial{0, 0, 0, 1, 3, 1}},
      {"P_5 r=2 total", oracle(make_family({Family::path, 5, 0, 2})).total() == 5},
      {"C_4 total", oracle(make_family({Family::cycle, 4, 0, 1})).total() == 9},
      {"tadpole(3,1)",
       oracle(make_family({Family::tadpole, 3, 1})) == Polynomial{0, 0, 3, 4, 1}},
      {"barbell(2) = P_4",
       oracle(make_family({Family::barbell, 2})) == Polynomial{0, 0, 1, 3, 1}},
      {"lollipop(3,1) = tadpole(3,1)",
       lollipop_polynomial(3, 1) == oracle(make_family({Family::tadpole, 3, 1}))},
      {"K_4 r=1", oracle(make_family({Family::complete, 4, 0, 1})) == Polynomial{0, 6, 11, 6, 1}},
      {"P_3^c", oracle(make_family({Family::complement_path, 3, 0, 1})) == Polynomial{0, 0, 1, 1}},
      {"S_{1,3}", oracle(make_family({Family::star, 4, 0, 1})) == Polynomial{0, 0, 0, 3, 1}},
      {"star S_4 r=1 total", oracle(make_family({Family::star, 5, 0, 1})).total() == 5},
      {"star S_4 r=1 moments",
       moments_from_polynomial(oracle(make_family({Family::star, 5, 0, 1}))).mean ==
           Rational(21, 5)},
      {"K_4 mean 25/12",
       moments_from_polynomial(oracle(make_family({Family::complete, 4, 0, 1}))).mean ==
           Rational(25, 12)},
      {"P_5 coefficient drop 4,3,2",
       oracle(make_family({Family::path, 5, 0, 1})).coeff(4) == 4 &&
           oracle(make_family({Family::path, 5, 0, 2})).coeff(4) == 3 &&
           oracle(make_family({Family::path, 5, 0, 3})).coeff(4) == 2},
  };
  for (const auto& a : audits)
    if (!a.pass) fail(std::string("convention audit failed: ") + a.what);

  // CLI: report covers the registry and pinned verdicts hold end to end.
  if (!cli_path.empty()) {
    int code = 0;
    const std::string out = run_cli("verify --format json", code);
    if (code != 0) fail("CLI verify exited " + std::to_string(code));
    try {
      const auto j = nlohmann::json::parse(out);
      if (j["claims"].size() != report_data.claims.size())
        fail("CLI report length != registry length");
    } catch (...) {
      fail("CLI verify JSON did not parse");
    }
    const std::string expect_file = std::string(TEST_DATA_DIR) + "/expected_verdicts.json";
    std::ifstream probe(expect_file);
    if (probe) {
      const std::string out2 = run_cli("verify --expect " + expect_file, code);
      if (code != 0) fail("pinned verdicts drifted (verify --expect exited nonzero)");
    } else {
      fail("missing expected_verdicts.json");
    }
  }
  std::ostringstream note;
  note << report_data.claims.size() << " claims (" << report_data.confirmed() << " confirmed, "
       << report_data.refuted() << " refuted, " << report_data.partial() << " partial), "
       << seconds_since(t0) << "s";
  if (!ok) note << ", " << detail;
  report(7, ok, "discrepancy report completeness + convention audit", note.str());
}

// --- 8: shape suite ----------------------------------------------------------------

void criterion8() {
  bool ok = true;
  std::string detail;
  int findings = 0, monotone_violations = 0, chain_bugs = 0;
  for (const auto& e : default_family_corpus(9)) {
    if (e.graph.n < 1) continue;
    BlockWeightTable table(e.graph);
    std::vector<Polynomial> polys;
    for (int r = 0; r <= std::min(e.graph.n, 4); ++r)
      polys.push_back(cycle_polynomial(e.graph.with_r(r), table));
    for (int r = 0; r <= std::min(e.graph.n, 3); ++r) {
      const auto& p = polys[static_cast<size_t>(r)];
      const auto v = shape_analysis(p);
      if (!v.log_concave || !v.unimodal) {
        ++findings;
        std::cout << "  [finding] shape violation: " << e.name << " r=" << r
                  << " first_violation_index=" << v.first_violation << " coeffs=";
        for (int k = 0; k <= p.degree(); ++k) std::cout << (k ? "," : "") << p.coeff(k);
        std::cout << "\n";
      }
      if ((v.real_rooted && !v.log_concave) || (v.log_concave && !v.unimodal)) {
        ++chain_bugs;
        detail = "shape implication chain broken on " + e.name;
        ok = false;
      }
    }
    for (size_t i = 0; i + 1 < polys.size(); ++i)
      for (int k = 0; k <= e.graph.n; ++k)
        if (polys[i + 1].coeff(k) > polys[i].coeff(k)) {
          ++monotone_violations;
          if (ok) detail = "weak r-monotonicity violated on " + e.name;
          ok = false;
        }
  }
  std::ostringstream note;
  note << findings << " shape findings reported, " << monotone_violations
       << " monotonicity violations, " << chain_bugs << " chain bugs";
  if (!ok) note << ", " << detail;
  report(8, ok, "log-concavity/unimodality findings + weak r-monotonicity", note.str());
}

// --- 9: asymptotic scans -------------------------------------------------------------

void criterion9() {
  const auto t0 = clock_type::now();
  bool ok = true;
  std::string detail;
  const auto rep = asymptotic_scan(Family::path, 100, 400, 1);
  std::cout << "  path mean slope: measured " << rep.measured_tail
            << " (head " << rep.measured_head << ")";
  for (const auto& c : rep.claimed) std::cout << "; claimed " << c.label << " = " << c.value;
  std::cout << "\n";
  if (!rep.slope_stable) {
    ok = false;
    detail = "path slope not stable within 0.001";
  }
  if (!complete_mean_is_harmonic(30)) {
    ok = false;
    detail = "complete-graph mean deviates from H_n";
  }
  if (!variance_strictly_increasing(Family::path, 10, 200, 1)) {
    ok = false;
    detail = "path variance not strictly increasing on [10,200]";
  }
  // The cycle variance statement matches the restricted (r >= 2) family,
  // the hypothesis of the printed cycle variance theorem. The unrestricted
  // polynomial dips while its Hamiltonian term loses relative weight.
  if (!variance_strictly_increasing(Family::cycle, 10, 200, 2)) {
    ok = false;
    detail = "restricted cycle variance not strictly increasing on [10,200]";
  }
  if (variance_strictly_increasing(Family::cycle, 10, 200, 0))
    std::cout << "  [finding] unrestricted cycle variance unexpectedly monotone from 10\n";
  else if (!variance_strictly_increasing(Family::cycle, 14, 200, 0)) {
    ok = false;
    detail = "unrestricted cycle variance not strictly increasing even on [14,200]";
  } else {
    std::cout << "  [finding] unrestricted cycle variance dips over n=10..13 (Hamiltonian "
                 "term), strictly increasing from n=14\n";
  }
  std::ostringstream note;
  note << seconds_since(t0) << "s";
  if (!ok) note << ", " << detail;
  report(9, ok,
         "path slope stability (0.001), complete mean = H_n exactly, variance growth",
         note.str());
}

// --- 10: performance and determinism -------------------------------------------------

void criterion10() {
  bool ok = true;
  std::string detail;
  auto timed = [&](const std::string& what, const LabeledGraph& g, double budget) {
    const auto t0 = clock_type::now();
    const auto p = cycle_polynomial(g);
    const double secs = seconds_since(t0);
    std::cout << "  " << what << ": " << secs << "s (budget " << budget << "s), total "
              << p.total() << "\n";
    if (secs > budget) {
      ok = false;
      if (detail.empty()) detail = what + " exceeded budget";
    }
    return p;
  };
  timed("K_16", make_family({Family::complete, 16, 0, 1}), 60.0);
  const auto c20 = timed("C_20", make_family({Family::cycle, 20}), 10.0);
  timed("P_20", make_family({Family::path, 20}), 10.0);
  if (c20 != cycle_full(20)) {
    ok = false;
    detail = "C_20 does not match its closed form";
  }

  {
    const auto t0 = clock_type::now();
    const auto m = moments_from_polynomial(path_polynomial(400, 1));
    const double secs = seconds_since(t0);
    std::cout << "  path moments n=400: " << secs << "s, mean ~ "
              << to_decimal_string(m.mean, 8) << "\n";
    if (secs > 1.0) {
      ok = false;
      detail = "path moments at n=400 exceeded 1s";
    }
  }

  // In-process determinism across thread counts.
  const auto g = make_family({Family::complete, 12, 0, 2});
  if (cycle_polynomial(g, kDefaultEngineLimit, 1) != cycle_polynomial(g, kDefaultEngineLimit, 4)) {
    ok = false;
    detail = "thread count changed the polynomial";
  }
  // Cross-process byte determinism through the CLI.
  if (!cli_path.empty()) {
    int c1 = 0, c2 = 0;
    const std::string a = run_cli("poly --family wheel:10 --r 2 --format json --threads 1", c1);
    const std::string b = run_cli("poly --family wheel:10 --r 2 --format json --threads 4", c2);
    if (c1 != 0 || c2 != 0 || a.empty() || a != b) {
      ok = false;
      detail = "CLI output differs across --threads";
    }
  }
  report(10, ok, "performance budgets + deterministic output across threads", detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  const auto t0 = clock_type::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::cout << (failures ? "ACCEPTANCE: FAILED (" : "ACCEPTANCE: PASSED (")
            << (failures ? std::to_string(failures) + " criteria failed, " : std::string())
            << seconds_since(t0) << "s total)" << std::endl;
  return failures ? 1 : 0;
}
