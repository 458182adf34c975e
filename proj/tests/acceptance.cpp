// Acceptance suite: runs every criterion end to end and prints one
// pass/fail line each. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "hgdec/frac.hpp"
#include "hgdec/ghd.hpp"
#include "hgdec/harness.hpp"
#include "hgdec/invariants.hpp"
#include "hgdec/lp.hpp"
#include "support/oracles.hpp"
#include "support/random_hg.hpp"

using namespace hgdec;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what,
            const std::string& detail) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion
            << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Hypergraph make(const std::string& text) { return parse_hypergraph(text); }

std::size_t witnesses_checked = 0;
std::size_t witnesses_valid = 0;

void note_witness(const Hypergraph& h, const RunOutcome& r, bool hd_kind) {
  if (r.status != RunStatus::Yes) return;
  ++witnesses_checked;
  auto v = hd_kind ? check_hd(h, *r.witness) : check_ghd(h, *r.witness);
  if (v.empty()) ++witnesses_valid;
}

// ---- criterion 1: decide_hw vs the brute-force oracle ----
void criterion1() {
  auto t0 = Clock::now();
  int mismatches = 0;
  for (std::uint32_t seed = 0; seed < 200; ++seed) {
    auto h = testing::random_hypergraph(seed);
    for (int k = 1; k <= 3; ++k) {
      bool expect = testing::brute_force_hw_decide(h, k);
      auto got = decide_hw(h, k);
      note_witness(h, got, /*hd_kind=*/true);
      if ((got.status == RunStatus::Yes) != expect) ++mismatches;
    }
  }
  double secs = seconds_since(t0);
  report(1, mismatches == 0 && secs < 120,
         "decide_hw matches brute force on 200 instances, k in {1,2,3}",
         std::to_string(mismatches) + " mismatches, " +
             std::to_string(secs).substr(0, 5) + " s");
}

struct SampleResult {
  int hw = 0;
  int ghw_decided = 0;  // via the three deciders (agreeing)
  double fhw_ub = 0;
};
std::vector<SampleResult> samples;

// ---- criterion 2: three ghw deciders vs the ghw oracle ----
void criterion2() {
  auto t0 = Clock::now();
  int mismatches = 0;
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    auto h = testing::random_hypergraph(seed);
    SampleResult s;
    s.hw = testing::brute_force_hw(h);
    int truth = testing::brute_force_ghw(h);
    s.ghw_decided = truth;
    for (int k = 1; k <= 3; ++k) {
      bool expect = k >= truth;
      auto g = decide_ghw_global(h, k);
      auto l = decide_ghw_local(h, k);
      auto b = decide_ghw_balsep(h, k);
      for (auto* r : {&g, &l, &b}) {
        note_witness(h, *r, /*hd_kind=*/false);
        bool yes = r->status == RunStatus::Yes;
        bool witness_ok =
            !yes || (check_ghd(h, *r->witness).empty() &&
                     width(*r->witness) <= Rational(k));
        if (yes != expect || !witness_ok) ++mismatches;
      }
    }
    // fractional upper bound from the hw witness
    auto hw_run = decide_hw(h, s.hw);
    s.fhw_ub = width(simple_improve(h, *hw_run.witness)).to_double();
    samples.push_back(s);
  }
  double secs = seconds_since(t0);
  report(2, mismatches == 0 && secs < 600,
         "global, local and balsep match brute-force ghw on 100 instances",
         std::to_string(mismatches) + " mismatches, " +
             std::to_string(secs).substr(0, 5) + " s");
}

// ---- criterion 3: hw in {1,2} forces ghw = hw ----
void criterion3() {
  int violations = 0;
  for (const auto& s : samples)
    if (s.hw <= 2 && s.ghw_decided != s.hw) ++violations;
  report(3, violations == 0 && !samples.empty(),
         "hw in {1,2} implies ghw = hw on all samples",
         std::to_string(violations) + " violations in " +
             std::to_string(samples.size()) + " instances");
}

// ---- criterion 4: width chains ----
void criterion4() {
  int violations = 0;
  for (const auto& s : samples) {
    if (!(s.fhw_ub <= s.ghw_decided + 1e-6)) ++violations;
    if (!(s.ghw_decided <= s.hw)) ++violations;
    if (!(s.hw <= 3 * s.ghw_decided + 1)) ++violations;
  }
  report(4, violations == 0 && !samples.empty(),
         "fhw_ub <= ghw <= hw <= 3*ghw + 1 on all decided instances",
         std::to_string(violations) + " violations");
}

// ---- criterion 5: triangle end to end ----
void criterion5() {
  auto t0 = Clock::now();
  auto tri = make("ab(a,b), bc(b,c), ca(c,a).");
  bool ok = true;
  std::string why;
  auto hw = compute_hw(tri, 4);
  if (!(hw.upper && *hw.upper == 2 && hw.lower == 2)) {
    ok = false;
    why += "hw != 2; ";
  }
  auto ghw_yes = portfolio_ghw(tri, 2);
  auto ghw_no = portfolio_ghw(tri, 1);
  note_witness(tri, ghw_yes, false);
  if (ghw_yes.status != RunStatus::Yes || ghw_no.status != RunStatus::No) {
    ok = false;
    why += "ghw != 2; ";
  }
  auto improved = simple_improve(tri, *hw.witness);
  if (std::abs(width(improved).to_double() - 1.5) > 1e-6) {
    ok = false;
    why += "simple improve width != 1.5; ";
  }
  if (frac_improve_search(tri, 2, 1.5).status != RunStatus::Yes) {
    ok = false;
    why += "no yes at k'=1.5; ";
  }
  if (frac_improve_search(tri, 2, 1.4).status != RunStatus::No) {
    ok = false;
    why += "no no at k'=1.4; ";
  }
  double secs = seconds_since(t0);
  if (secs >= 1.0) {
    ok = false;
    why += "took " + std::to_string(secs) + " s; ";
  }
  report(5, ok, "triangle: hw 2, ghw 2, improves to 1.5 and not beyond", why);
}

// ---- criterion 6: balsep rejects rings fast ----
void criterion6() {
  bool ok = true;
  std::string why;
  for (int variant = 0; variant < 2 && ok; ++variant) {
    std::string text;
    for (int i = 0; i < 12; ++i) {
      text += "e" + std::to_string(i) + "(v" + std::to_string(i) + ",v" +
              std::to_string((i + 1) % 12);
      if (variant == 1) text += ",w" + std::to_string(i);  // arity-3 ring
      text += "),";
    }
    text.back() = '.';
    auto ring = make(text);
    auto t0 = Clock::now();
    auto r = decide_ghw_balsep(ring, 1);
    double secs = seconds_since(t0);
    if (r.status != RunStatus::No) {
      ok = false;
      why = "status " + to_string(r.status);
    } else if (secs >= 1.0) {
      ok = false;
      why = "took " + std::to_string(secs) + " s";
    }
  }
  report(6, ok, "balsep answers no for 12-edge rings at k = 1 in under 1 s",
         why);
}

// ---- criterion 7: validator soundness over the whole matrix ----
void criterion7() {
  bool all_valid =
      witnesses_checked > 0 && witnesses_valid == witnesses_checked;

  // Re-rooting regression: an HD whose lower node reuses the upper edge.
  auto h = make("xa(x,a), ab(a,b).");
  VertexSet upper(h.vertex_count()), lower(h.vertex_count());
  upper.set(*h.vertex_index("x"));
  upper.set(*h.vertex_index("a"));
  lower.set(*h.vertex_index("a"));
  lower.set(*h.vertex_index("b"));
  Decomposition d;
  d.kind = DecompKind::HD;
  d.nodes.push_back({0, -1, upper, {{0, Rational(1)}}});
  d.nodes.push_back({1, 0, lower, {{0, Rational(1)}, {1, Rational(1)}}});
  bool before_ok = check_hd(h, d).empty();
  auto r = rerooted(d, 1);
  auto v = check_hd(h, r);
  bool detected = v.size() == 1 && v[0].condition == 4;

  report(7, all_valid && before_ok && detected,
         "all solver witnesses validate; re-rooting breakage is detected",
         std::to_string(witnesses_valid) + "/" +
             std::to_string(witnesses_checked) + " witnesses valid");
}

// ---- criterion 8: LP correctness ----
void criterion8() {
  std::mt19937 rng(2024);
  int mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 2 + rng() % 7;  // up to 8 variables
    std::size_t m = 2 + rng() % 5;
    LinearProgram lp;
    lp.objective.assign(n, 1.0);
    lp.upper.assign(n, 1.0);
    for (std::size_t row = 0; row < m; ++row) {
      LpRow rr;
      rr.coeffs.assign(n, 0.0);
      bool any = false;
      for (std::size_t j = 0; j < n; ++j)
        if (rng() % 3 == 0) {
          rr.coeffs[j] = 1.0;
          any = true;
        }
      if (!any) rr.coeffs[rng() % n] = 1.0;
      rr.sense = '>';
      rr.rhs = 1.0;
      lp.rows.push_back(std::move(rr));
    }
    auto sol = lp_solve(lp);
    double oracle = testing::lp_vertex_enum_min(lp);
    if (sol.status == LpSolution::Status::Optimal) {
      if (!std::isfinite(oracle) || std::abs(sol.value - oracle) > 1e-6)
        ++mismatches;
    } else if (std::isfinite(oracle)) {
      ++mismatches;
    }
  }
  // triangle dual
  LinearProgram dual;
  dual.objective = {-1, -1, -1};
  dual.upper = {-1, -1, -1};
  dual.rows.push_back({{1, 1, 0}, '<', 1});
  dual.rows.push_back({{0, 1, 1}, '<', 1});
  dual.rows.push_back({{1, 0, 1}, '<', 1});
  auto ds = lp_solve(dual);
  bool dual_ok = ds.status == LpSolution::Status::Optimal &&
                 std::abs(-ds.value - 1.5) < 1e-6;
  report(8, mismatches == 0 && dual_ok,
         "simplex matches vertex enumeration on 100 covering programs; "
         "triangle dual is 1.5",
         std::to_string(mismatches) + " mismatches");
}

// ---- criterion 9: invariant oracles ----
void criterion9() {
  int mismatches = 0;
  int used = 0;
  for (std::uint32_t seed = 0; seed < 120; ++seed) {
    testing::RandomHgParams p;
    p.max_vertices = 12;
    p.max_edges = 10;
    p.max_arity = 6;
    p.connected = false;
    auto h = testing::random_hypergraph(seed, p);
    ++used;
    std::size_t nv = h.vertex_count();
    // vc: every subset of V
    std::size_t vc_truth = 0;
    for (std::uint32_t mask = 1; mask < (1u << nv); ++mask) {
      std::vector<std::size_t> xs;
      for (std::size_t v = 0; v < nv; ++v)
        if (mask & (1u << v)) xs.push_back(v);
      std::set<std::uint32_t> restr;
      for (std::size_t e = 0; e < h.edge_count(); ++e) {
        std::uint32_t rm = 0;
        for (std::size_t i = 0; i < xs.size(); ++i)
          if (h.edge(e).test(xs[i])) rm |= 1u << i;
        restr.insert(rm);
      }
      if (restr.size() == (1u << xs.size()))
        vc_truth = std::max(vc_truth, xs.size());
    }
    auto vc = vc_dimension(h);
    if (!vc.exact || vc.value != vc_truth) ++mismatches;
    // intersection widths: full combination scans, no pruning
    for (std::size_t c = 2; c <= 4; ++c) {
      std::size_t truth = 0;
      std::function<void(std::size_t, std::size_t, VertexSet)> rec =
          [&](std::size_t start, std::size_t left, VertexSet acc) {
            if (left == 0) {
              truth = std::max(truth, acc.count());
              return;
            }
            for (std::size_t e = start; e + left <= h.edge_count(); ++e)
              rec(e + 1, left - 1, acc & h.edge(e));
          };
      if (h.edge_count() >= c)
        for (std::size_t e = 0; e + c <= h.edge_count(); ++e)
          rec(e + 1, c - 1, h.edge(e));
      std::size_t got =
          c == 2 ? intersection_width(h) : multi_intersection_width(h, c);
      if (got != truth) ++mismatches;
    }
  }
  report(9, mismatches == 0 && used > 0,
         "vc and multi-intersection widths match full brute force",
         std::to_string(mismatches) + " mismatches over " +
             std::to_string(used) + " instances");
}

// ---- criterion 10: harness determinism and resume ----
void criterion10() {
  namespace fs = std::filesystem;
  auto tmp = fs::temp_directory_path() /
             ("hgdec_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(tmp);
  fs::create_directories(tmp / "corpus" / "toy");
  auto put = [&](const std::string& name, const std::string& text) {
    std::ofstream out(tmp / "corpus" / "toy" / name);
    out << text;
  };
  put("edge.hg", "e(a,b).\n");
  put("triangle.hg", "ab(a,b), bc(b,c), ca(c,a).\n");
  put("cycle4.hg", "ab(a,b), bc(b,c), cd(c,d), da(d,a).\n");

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  auto mask = [](const std::string& text) {
    std::string out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      for (int i = 0; i < 4; ++i) line.erase(line.rfind(','));
      out += line + "\n";
    }
    return out;
  };

  BenchConfig cfg;
  cfg.corpus = tmp / "corpus";
  cfg.k_max = 4;
  cfg.timeout_s = 120;

  bool ok = true;
  std::string why;
  try {
    cfg.csv_path = tmp / "w1.csv";
    cfg.workers = 1;
    run_corpus(cfg);
    cfg.csv_path = tmp / "w8.csv";
    cfg.workers = 8;
    run_corpus(cfg);
    auto full1 = slurp(tmp / "w1.csv");
    if (mask(full1) != mask(slurp(tmp / "w8.csv"))) {
      ok = false;
      why += "worker count changed results; ";
    }
    // simulated kill: keep the header and first row, then resume
    std::istringstream in(full1);
    std::string header, row1;
    std::getline(in, header);
    std::getline(in, row1);
    {
      std::ofstream out(tmp / "resume.csv");
      out << header << "\n" << row1 << "\n";
    }
    cfg.csv_path = tmp / "resume.csv";
    cfg.workers = 1;
    cfg.resume = true;
    run_corpus(cfg);
    auto resumed = slurp(tmp / "resume.csv");
    if (mask(resumed) != mask(full1)) {
      ok = false;
      why += "resume diverged; ";
    }
    std::istringstream rin(resumed);
    std::string rheader, rrow1;
    std::getline(rin, rheader);
    std::getline(rin, rrow1);
    if (rrow1 != row1) {
      ok = false;
      why += "resumed row recomputed; ";
    }
  } catch (const std::exception& e) {
    ok = false;
    why = e.what();
  }
  fs::remove_all(tmp);
  report(10, ok, "harness is deterministic across workers and resume", why);
}

// ---- criterion 11 (optional): HyperBench spot check ----
void criterion11() {
  const char* dir = std::getenv("HYPERBENCH_DIR");
  if (!dir) {
    std::cout << "[SKIP] criterion 11: CQ-Application corpus not supplied "
                 "(set HYPERBENCH_DIR)"
              << std::endl;
    return;
  }
  namespace fs = std::filesystem;
  int checked = 0, failures_here = 0;
  for (auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".hg")
      continue;
    auto rel = entry.path().string();
    if (rel.find("application_cq") == std::string::npos &&
        rel.find("cq_application") == std::string::npos)
      continue;
    std::ifstream in(entry.path());
    std::stringstream buf;
    buf << in.rdbuf();
    Hypergraph h;
    try {
      h = parse_hypergraph(buf.str(), entry.path().stem().string());
    } catch (const std::exception&) {
      ++failures_here;
      continue;
    }
    ++checked;
    SearchOptions opts;
    opts.timeout = std::chrono::milliseconds(3'600'000);
    bool ok = false;
    for (int k = 1; k <= 3; ++k)
      if (decide_hw(h, k, opts).status == RunStatus::Yes) {
        ok = true;
        break;
      }
    if (!ok) ++failures_here;
  }
  report(11, failures_here == 0 && checked > 0,
         "every CQ-Application instance decides hw <= 3",
         std::to_string(checked) + " instances");
}

}  // namespace

int main() {
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
  criterion11();
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED")
            << " (" << failures << " failing criteria)" << std::endl;
  return failures;
}
