#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hgdec/frac.hpp"
#include "hgdec/ghd.hpp"
#include "hgdec/harness.hpp"
#include "hgdec/invariants.hpp"

namespace {

using namespace hgdec;

// Exit codes: 0 yes, 1 no, 2 timeout, >2 error.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitError = 3;

Hypergraph load(const std::string& path, bool as_cq) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto name = std::filesystem::path(path).stem().string();
  return as_cq ? cq_to_hypergraph(buf.str(), name)
               : parse_hypergraph(buf.str(), name);
}

void write_witness(const RunOutcome& r, const Hypergraph& h,
                   const std::string& out_path) {
  if (out_path.empty() || !r.witness) return;
  std::ofstream out(out_path);
  out << serialize_decomposition(*r.witness, h);
}

int outcome_exit(const RunOutcome& r, const Hypergraph& h,
                 const std::string& out_path) {
  switch (r.status) {
    case RunStatus::Yes:
      std::cout << "yes width=" << width(*r.witness).to_decimal()
                << " method=" << r.method << " ms=" << r.elapsed.count()
                << "\n";
      write_witness(r, h, out_path);
      return kExitYes;
    case RunStatus::No:
      std::cout << "no method=" << r.method << " ms=" << r.elapsed.count()
                << "\n";
      return kExitNo;
    case RunStatus::Unknown:
      std::cout << "unknown method=" << r.method << " ms=" << r.elapsed.count()
                << "\n";
      return kExitTimeout;
    case RunStatus::Timeout:
      std::cout << "timeout ms=" << r.elapsed.count() << "\n";
      return kExitTimeout;
    case RunStatus::Error:
      std::cerr << "error: " << r.error << "\n";
      return kExitError;
  }
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph invariants and (generalized, fractional) "
               "hypertree decompositions"};
  app.require_subcommand(1);

  std::string file, out_path, method = "portfolio", hd_path, csv_path;
  std::string config_path;
  bool as_cq = false, no_simplify = false, plain = false;
  bool buckets = false, do_corr = false, do_summary = false;
  int k = 1;
  double timeout_s = 3600, kprime = -1;
  std::size_t cap = 100'000;
  unsigned seed = 0;
  bool have_seed = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "hypergraph file")->required();
    cmd->add_flag("--cq", as_cq, "input is conjunctive-query text");
    cmd->add_option("--timeout", timeout_s, "seconds per decision");
    cmd->add_flag("--no-simplify", no_simplify,
                  "skip subsumed-edge preprocessing");
  };

  auto* hd = app.add_subcommand("hd", "decide hypertree width <= k");
  add_common(hd);
  hd->add_option("-k", k, "width bound")->required();
  hd->add_option("--out", out_path, "write the witness decomposition");
  hd->add_option("--seed", seed, "shuffle candidate order")
      ->each([&](const std::string&) { have_seed = true; });

  auto* ghd = app.add_subcommand("ghd", "decide generalized hypertree width <= k");
  add_common(ghd);
  ghd->add_option("-k", k, "width bound")->required();
  ghd->add_option("--method", method, "global|local|balsep|portfolio");
  ghd->add_option("--cap", cap, "subedge generation cap");
  ghd->add_flag("--plain", plain, "balsep without augmentation");
  ghd->add_option("--out", out_path, "write the witness decomposition");

  auto* improve = app.add_subcommand("improve", "fractional improvement");
  add_common(improve);
  improve->add_option("-k", k, "hw upper bound")->required();
  improve->add_option("--kprime", kprime, "target fractional width");
  improve->add_flag("--buckets", buckets, "report the improvement bucket");
  improve->add_option("--method", method, "simple|search");
  improve->add_option("--hd", hd_path, "decomposition to improve (simple)");
  improve->add_option("--out", out_path, "write the improved decomposition");

  auto* stats_cmd = app.add_subcommand("stats", "structural invariants");
  add_common(stats_cmd);

  auto* check = app.add_subcommand("check", "validate a decomposition file");
  add_common(check);
  check->add_option("--decomp", hd_path, "decomposition file")->required();
  std::string check_kind = "ghd";
  check->add_option("--kind", check_kind, "hd|ghd|fhd");

  BenchConfig bench_cfg;
  auto* bench = app.add_subcommand("bench", "run a corpus");
  bench->add_option("dir", bench_cfg.corpus, "corpus directory");
  bench->add_option("--config", config_path, "key = value config file");
  bench->add_option("--glob", bench_cfg.glob, "instance file glob");
  std::string tasks_csv = "stats,hw,ghw,improve";
  bench->add_option("--tasks", tasks_csv, "subset of stats,hw,ghw,improve");
  bench->add_option("--kmax", bench_cfg.k_max, "largest k for the hw loop");
  bench->add_option("--timeout", bench_cfg.timeout_s, "seconds per task");
  bench->add_option("--workers", bench_cfg.workers, "parallel instances");
  bench->add_option("--csv", bench_cfg.csv_path, "output CSV path");
  bench->add_flag("--resume", bench_cfg.resume, "reuse completed CSV rows");
  bench->add_option("--seed", bench_cfg.seed, "run seed");
  bench->add_option("--ghw-depth", bench_cfg.ghw_depth,
                    "how far below hw to push ghw attempts");

  auto* report = app.add_subcommand("report", "derive views from a bench CSV");
  report->add_option("--csv", csv_path, "bench CSV")->required();
  report->add_flag("--correlations", do_corr, "pairwise Pearson matrix");
  report->add_flag("--summary", do_summary, "per-group per-k tables");

  CLI11_PARSE(app, argc, argv);

  try {
    SearchOptions opts;
    opts.timeout = std::chrono::milliseconds(
        static_cast<std::int64_t>(timeout_s * 1000));
    opts.simplify = !no_simplify;
    opts.subedge_cap = cap;
    opts.plain_balsep = plain;
    if (have_seed) opts.shuffle_seed = seed;

    if (app.got_subcommand(hd)) {
      auto h = load(file, as_cq);
      return outcome_exit(decide_hw(h, k, opts), h, out_path);
    }
    if (app.got_subcommand(ghd)) {
      auto h = load(file, as_cq);
      RunOutcome r;
      if (method == "global") r = decide_ghw_global(h, k, opts);
      else if (method == "local") r = decide_ghw_local(h, k, opts);
      else if (method == "balsep") r = decide_ghw_balsep(h, k, opts);
      else if (method == "portfolio") r = portfolio_ghw(h, k, opts);
      else throw std::runtime_error("unknown method '" + method + "'");
      return outcome_exit(r, h, out_path);
    }
    if (app.got_subcommand(improve)) {
      auto h = load(file, as_cq);
      if (method == "simple") {
        Decomposition d;
        if (!hd_path.empty()) {
          std::ifstream in(hd_path);
          std::stringstream buf;
          buf << in.rdbuf();
          d = parse_decomposition(buf.str(), h);
          d.kind = DecompKind::GHD;
        } else {
          auto r = decide_hw(h, k, opts);
          if (r.status != RunStatus::Yes) return outcome_exit(r, h, "");
          d = *r.witness;
        }
        auto improved = simple_improve(h, d);
        std::cout << "width=" << width(improved).to_decimal() << "\n";
        if (!out_path.empty()) {
          std::ofstream out(out_path);
          out << serialize_decomposition(improved, h);
        }
        return kExitYes;
      }
      if (buckets) {
        auto b = improvement_bucket(h, k, opts);
        std::cout << "bucket=" << to_string(b.bucket)
                  << (b.timed_out ? " (timeout)" : "") << "\n";
        return kExitYes;
      }
      if (kprime <= 0)
        throw std::runtime_error("need --kprime or --buckets");
      return outcome_exit(frac_improve_search(h, k, kprime, opts), h,
                          out_path);
    }
    if (app.got_subcommand(stats_cmd)) {
      auto h = load(file, as_cq);
      auto s = stats(h, opts.timeout);
      std::cout << "vertices=" << s.num_vertices << " edges=" << s.num_edges
                << " arity=" << s.arity << " degree=" << s.degree
                << " bip=" << s.iwidth << " bmip3=" << s.miwidth3
                << " bmip4=" << s.miwidth4 << " vc=" << s.vc.to_string()
                << "\n";
      return kExitYes;
    }
    if (app.got_subcommand(check)) {
      auto h = load(file, as_cq);
      std::ifstream in(hd_path);
      if (!in) throw std::runtime_error("cannot read " + hd_path);
      std::stringstream buf;
      buf << in.rdbuf();
      auto d = parse_decomposition(buf.str(), h);
      std::vector<Violation> bad;
      if (check_kind == "hd") {
        d.kind = DecompKind::HD;
        bad = check_hd(h, d);
      } else if (check_kind == "fhd") {
        d.kind = DecompKind::FHD;
        bad = check_fhd(h, d);
      } else {
        d.kind = DecompKind::GHD;
        bad = check_ghd(h, d);
      }
      if (bad.empty()) {
        std::cout << "ok width=" << width(d).to_decimal() << "\n";
        return kExitYes;
      }
      std::cout << describe(bad);
      return kExitNo;
    }
    if (app.got_subcommand(bench)) {
      if (!config_path.empty()) apply_config_file(bench_cfg, config_path);
      if (bench->count("--tasks") || config_path.empty()) {
        bench_cfg.tasks.clear();
        std::stringstream ss(tasks_csv);
        std::string t;
        while (std::getline(ss, t, ',')) bench_cfg.tasks.insert(t);
      }
      if (bench_cfg.corpus.empty())
        throw std::runtime_error("no corpus directory given");
      auto records = run_corpus(bench_cfg);
      std::cout << records.size() << " instances -> "
                << bench_cfg.csv_path.string() << "\n";
      return kExitYes;
    }
    if (app.got_subcommand(report)) {
      auto records = read_csv(csv_path);
      if (do_summary) std::cout << summarize(records).render();
      if (do_corr) {
        auto m = correlation_report(records);
        std::cout << m.to_ascii();
        std::cout << m.to_csv();
      }
      return kExitYes;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
