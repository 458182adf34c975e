#include "hgdec/harness.hpp"

#include <algorithm>
#include <cmath>
#include <condition_variable>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "hgdec/frac.hpp"
#include "hgdec/ghd.hpp"

namespace hgdec {

namespace fs = std::filesystem;

std::string to_string(TaskStatus s) {
  switch (s) {
    case TaskStatus::Ok: return "ok";
    case TaskStatus::Timeout: return "timeout";
    case TaskStatus::Error: return "error";
    case TaskStatus::Skip: return "skip";
  }
  return "error";
}

namespace {

TaskStatus task_status_from_string(const std::string& s) {
  if (s == "ok") return TaskStatus::Ok;
  if (s == "timeout") return TaskStatus::Timeout;
  if (s == "error") return TaskStatus::Error;
  return TaskStatus::Skip;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string opt_to_string(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "";
}

std::optional<int> opt_from_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stoi(s);
}

// Minimal glob: `*` and `?` on the file name.
bool glob_match(const std::string& pattern, const std::string& name) {
  std::size_t p = 0, n = 0, star = std::string::npos, mark = 0;
  while (n < name.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
      ++p;
      ++n;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = n;
    } else if (star != std::string::npos) {
      p = star + 1;
      n = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace

void apply_config_file(BenchConfig& cfg, const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read config " + file.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) +
                               ": expected key = value");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? "" : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "dir") cfg.corpus = val;
    else if (key == "glob") cfg.glob = val;
    else if (key == "tasks") {
      cfg.tasks.clear();
      std::stringstream ss(val);
      std::string t;
      while (std::getline(ss, t, ',')) cfg.tasks.insert(t);
    } else if (key == "kmax") cfg.k_max = std::stoi(val);
    else if (key == "timeout") cfg.timeout_s = std::stod(val);
    else if (key == "workers") cfg.workers = std::stoi(val);
    else if (key == "csv") cfg.csv_path = val;
    else if (key == "resume") cfg.resume = (val == "true" || val == "1");
    else if (key == "seed") cfg.seed = static_cast<std::uint32_t>(std::stoul(val));
    else if (key == "ghw-depth") cfg.ghw_depth = std::stoi(val);
    else throw std::runtime_error("unknown config key '" + key + "'");
  }
}

const char* const kCsvHeader =
    "instance,group,vertices,edges,arity,degree,bip,bmip3,bmip4,vc,"
    "hw_lb,hw_ub,ghw_lb,ghw_ub,improve_bucket,winning_method,"
    "status_stats,status_hw,status_ghw,status_improve,"
    "runtime_ms_stats,runtime_ms_hw,runtime_ms_ghw,runtime_ms_improve";

std::string record_to_csv(const RunRecord& r) {
  std::ostringstream out;
  out << csv_quote(r.instance) << ',' << csv_quote(r.group) << ',';
  if (r.stats) {
    out << r.stats->num_vertices << ',' << r.stats->num_edges << ','
        << r.stats->arity << ',' << r.stats->degree << ',' << r.stats->iwidth
        << ',' << r.stats->miwidth3 << ',' << r.stats->miwidth4 << ','
        << r.stats->vc.to_string();
  } else {
    out << ",,,,,,,";
  }
  out << ',' << opt_to_string(r.hw_lb) << ',' << opt_to_string(r.hw_ub) << ','
      << opt_to_string(r.ghw_lb) << ',' << opt_to_string(r.ghw_ub) << ','
      << csv_quote(r.improve_bucket) << ',' << r.winning_method << ','
      << to_string(r.status_stats) << ',' << to_string(r.status_hw) << ','
      << to_string(r.status_ghw) << ',' << to_string(r.status_improve) << ','
      << r.runtime_ms_stats << ',' << r.runtime_ms_hw << ','
      << r.runtime_ms_ghw << ',' << r.runtime_ms_improve;
  return out.str();
}

RunRecord record_from_csv(const std::string& line) {
  auto f = csv_split(line);
  if (f.size() != 24)
    throw std::runtime_error("malformed CSV row (" + std::to_string(f.size()) +
                             " fields)");
  RunRecord r;
  r.instance = f[0];
  r.group = f[1];
  if (!f[2].empty()) {
    StatsRecord s;
    s.num_vertices = std::stoul(f[2]);
    s.num_edges = std::stoul(f[3]);
    s.arity = std::stoul(f[4]);
    s.degree = std::stoul(f[5]);
    s.iwidth = std::stoul(f[6]);
    s.miwidth3 = std::stoul(f[7]);
    s.miwidth4 = std::stoul(f[8]);
    if (f[9].rfind(">=", 0) == 0) {
      s.vc.exact = false;
      s.vc.value = std::stoul(f[9].substr(2));
    } else if (!f[9].empty()) {
      s.vc.value = std::stoul(f[9]);
    }
    r.stats = s;
  }
  r.hw_lb = opt_from_string(f[10]);
  r.hw_ub = opt_from_string(f[11]);
  r.ghw_lb = opt_from_string(f[12]);
  r.ghw_ub = opt_from_string(f[13]);
  r.improve_bucket = f[14];
  r.winning_method = f[15];
  r.status_stats = task_status_from_string(f[16]);
  r.status_hw = task_status_from_string(f[17]);
  r.status_ghw = task_status_from_string(f[18]);
  r.status_improve = task_status_from_string(f[19]);
  r.runtime_ms_stats = std::stoll(f[20]);
  r.runtime_ms_hw = std::stoll(f[21]);
  r.runtime_ms_ghw = std::stoll(f[22]);
  r.runtime_ms_improve = std::stoll(f[23]);
  return r;
}

std::vector<RunRecord> read_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::vector<RunRecord> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      continue;  // header
    }
    out.push_back(record_from_csv(line));
  }
  return out;
}

namespace {

struct Deadline {
  std::chrono::steady_clock::time_point at;
  std::chrono::milliseconds remaining() const {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        at - std::chrono::steady_clock::now());
    return left.count() > 0 ? left : std::chrono::milliseconds(1);
  }
  bool passed() const { return std::chrono::steady_clock::now() >= at; }
};

RunRecord process_instance(const BenchConfig& cfg, const fs::path& file,
                           const std::string& rel, const std::string& group) {
  RunRecord rec;
  rec.instance = rel;
  rec.group = group;
  auto task_budget = std::chrono::milliseconds(
      static_cast<std::int64_t>(cfg.timeout_s * 1000));

  Hypergraph h;
  try {
    std::ifstream in(file);
    std::stringstream buf;
    buf << in.rdbuf();
    h = parse_hypergraph(buf.str(), file.stem().string());
  } catch (const std::exception&) {
    rec.status_stats = rec.status_hw = rec.status_ghw = rec.status_improve =
        TaskStatus::Error;
    return rec;
  }

  if (cfg.tasks.count("stats")) {
    auto t0 = std::chrono::steady_clock::now();
    StatsRecord s = stats(h, task_budget);
    rec.runtime_ms_stats = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
    rec.stats = s;
    rec.status_stats = TaskStatus::Ok;
  }

  SearchOptions base_opts;
  if (cfg.seed != 0) base_opts.shuffle_seed = cfg.seed;

  if (cfg.tasks.count("hw")) {
    auto t0 = std::chrono::steady_clock::now();
    Deadline dl{t0 + task_budget};
    rec.hw_lb = 1;
    bool timed_out = false;
    for (int k = 1; k <= cfg.k_max; ++k) {
      SearchOptions o = base_opts;
      o.timeout = dl.remaining();
      auto r = decide_hw(h, k, o);
      if (r.status == RunStatus::Yes) {
        rec.hw_ub = k;
        break;
      }
      if (r.status == RunStatus::No) rec.hw_lb = k + 1;
      if (r.status == RunStatus::Timeout) timed_out = true;
      if (dl.passed()) {
        timed_out = true;
        break;
      }
    }
    rec.runtime_ms_hw = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    rec.status_hw =
        (timed_out && !rec.hw_ub) ? TaskStatus::Timeout : TaskStatus::Ok;
    if (timed_out && rec.hw_ub) rec.status_hw = TaskStatus::Ok;
  }

  if (cfg.tasks.count("ghw")) {
    if (!rec.hw_ub) {
      rec.status_ghw = TaskStatus::Skip;
    } else {
      int k = *rec.hw_ub;
      rec.ghw_ub = k;
      rec.ghw_lb = std::max(1, (*rec.hw_lb + 2) / 3);  // hw <= 3*ghw + 1
      if (k <= 2) {
        // No improvement is possible below width 3.
        rec.ghw_lb = rec.hw_lb;
        rec.status_ghw = TaskStatus::Skip;
      } else if (k >= 3 && k <= 6) {
        auto t0 = std::chrono::steady_clock::now();
        Deadline dl{t0 + task_budget};
        for (int d = 1; d <= cfg.ghw_depth && k - d >= 1; ++d) {
          SearchOptions o = base_opts;
          o.timeout = dl.remaining();
          auto r = portfolio_ghw(h, k - d, o);
          rec.winning_method = r.method;
          if (r.status == RunStatus::Yes) {
            rec.ghw_ub = k - d;
            rec.status_ghw = TaskStatus::Ok;
            continue;
          }
          if (r.status == RunStatus::No) {
            rec.ghw_lb = std::max(rec.ghw_lb.value_or(1), k - d + 1);
            // A ghw no-answer at k-1 is also an hw no-answer there.
            rec.hw_lb = std::max(rec.hw_lb.value_or(1), k - d + 1);
            rec.status_ghw = TaskStatus::Ok;
          } else {
            rec.status_ghw = r.status == RunStatus::Timeout
                                 ? TaskStatus::Timeout
                                 : TaskStatus::Error;
          }
          break;
        }
        rec.runtime_ms_ghw =
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
      } else {
        rec.status_ghw = TaskStatus::Skip;
      }
    }
  }

  if (cfg.tasks.count("improve")) {
    if (!rec.hw_ub || *rec.hw_ub < 2) {
      rec.status_improve = TaskStatus::Skip;
    } else {
      auto t0 = std::chrono::steady_clock::now();
      SearchOptions o = base_opts;
      o.timeout = task_budget;
      auto b = improvement_bucket(h, *rec.hw_ub, o);
      rec.runtime_ms_improve =
          std::chrono::duration_cast<std::chrono::milliseconds>(
              std::chrono::steady_clock::now() - t0)
              .count();
      rec.improve_bucket = to_string(b.bucket);
      if (b.timed_out && b.bucket == ImproveBucket::None)
        rec.improve_bucket += " (timeout)";
      rec.status_improve =
          b.timed_out ? TaskStatus::Timeout : TaskStatus::Ok;
    }
  }

  // Cross-column sanity: the recorded bounds must satisfy the width chains.
  if (rec.hw_lb && rec.hw_ub && *rec.hw_lb > *rec.hw_ub)
    throw std::logic_error("hw bounds crossed for " + rec.instance);
  if (rec.ghw_lb && rec.ghw_ub && *rec.ghw_lb > *rec.ghw_ub)
    throw std::logic_error("ghw bounds crossed for " + rec.instance);
  if (rec.ghw_ub && rec.hw_ub && *rec.ghw_ub > *rec.hw_ub)
    throw std::logic_error("ghw_ub above hw_ub for " + rec.instance);
  return rec;
}

}  // namespace

std::vector<RunRecord> run_corpus(const BenchConfig& cfg) {
  if (!fs::exists(cfg.corpus))
    throw std::runtime_error("corpus directory " + cfg.corpus.string() +
                             " does not exist");
  // Deterministic instance order.
  std::vector<std::pair<fs::path, std::string>> files;  // path, relative
  for (auto& entry : fs::recursive_directory_iterator(cfg.corpus)) {
    if (!entry.is_regular_file()) continue;
    auto rel = fs::relative(entry.path(), cfg.corpus).generic_string();
    if (!glob_match(cfg.glob, entry.path().filename().string())) continue;
    files.emplace_back(entry.path(), rel);
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });

  std::map<std::string, RunRecord> previous;
  if (cfg.resume && fs::exists(cfg.csv_path)) {
    for (auto& r : read_csv(cfg.csv_path)) previous.emplace(r.instance, r);
  }

  std::ofstream csv;
  if (!cfg.csv_path.empty()) {
    csv.open(cfg.csv_path, std::ios::trunc);
    if (!csv)
      throw std::runtime_error("cannot write " + cfg.csv_path.string());
    csv << kCsvHeader << "\n" << std::flush;
  }

  std::vector<std::optional<RunRecord>> done(files.size());
  std::mutex mtx;
  std::condition_variable cv;
  std::size_t next_job = 0;
  std::size_t next_flush = 0;
  std::vector<RunRecord> results(files.size());

  auto worker = [&]() {
    for (;;) {
      std::size_t job;
      {
        std::lock_guard<std::mutex> lock(mtx);
        if (next_job >= files.size()) return;
        job = next_job++;
      }
      const auto& [path, rel] = files[job];
      std::string group = fs::path(rel).has_parent_path()
                              ? fs::path(rel).parent_path().generic_string()
                              : ".";
      RunRecord rec;
      auto prev = previous.find(rel);
      if (prev != previous.end()) {
        rec = prev->second;
      } else {
        rec = process_instance(cfg, path, rel, group);
      }
      {
        std::lock_guard<std::mutex> lock(mtx);
        done[job] = std::move(rec);
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  int workers = std::max(1, cfg.workers);
  for (int i = 0; i < workers; ++i) pool.emplace_back(worker);

  // Flush rows in instance order as soon as they (and all predecessors)
  // are complete, so a killed run leaves a resumable prefix.
  {
    std::unique_lock<std::mutex> lock(mtx);
    while (next_flush < files.size()) {
      cv.wait(lock, [&] {
        return next_flush < files.size() && done[next_flush].has_value();
      });
      while (next_flush < files.size() && done[next_flush]) {
        results[next_flush] = std::move(*done[next_flush]);
        if (csv.is_open())
          csv << record_to_csv(results[next_flush]) << "\n" << std::flush;
        ++next_flush;
      }
    }
  }
  for (auto& t : pool) t.join();
  return results;
}

namespace {

struct NumericColumn {
  const char* name;
  std::optional<double> (*get)(const RunRecord&);
};

const NumericColumn kColumns[] = {
    {"vertices",
     [](const RunRecord& r) -> std::optional<double> {
       if (!r.stats) return std::nullopt;
       return static_cast<double>(r.stats->num_vertices);
     }},
    {"edges",
     [](const RunRecord& r) -> std::optional<double> {
       if (!r.stats) return std::nullopt;
       return static_cast<double>(r.stats->num_edges);
     }},
    {"arity",
     [](const RunRecord& r) -> std::optional<double> {
       if (!r.stats) return std::nullopt;
       return static_cast<double>(r.stats->arity);
     }},
    {"degree",
     [](const RunRecord& r) -> std::optional<double> {
       if (!r.stats) return std::nullopt;
       return static_cast<double>(r.stats->degree);
     }},
    {"bip",
     [](const RunRecord& r) -> std::optional<double> {
       if (!r.stats) return std::nullopt;
       return static_cast<double>(r.stats->iwidth);
     }},
    {"bmip3",
     [](const RunRecord& r) -> std::optional<double> {
       if (!r.stats) return std::nullopt;
       return static_cast<double>(r.stats->miwidth3);
     }},
    {"bmip4",
     [](const RunRecord& r) -> std::optional<double> {
       if (!r.stats) return std::nullopt;
       return static_cast<double>(r.stats->miwidth4);
     }},
    {"vc",
     [](const RunRecord& r) -> std::optional<double> {
       if (!r.stats || !r.stats->vc.exact) return std::nullopt;
       return static_cast<double>(r.stats->vc.value);
     }},
    {"hw",
     [](const RunRecord& r) -> std::optional<double> {
       if (!r.hw_lb || !r.hw_ub || *r.hw_lb != *r.hw_ub) return std::nullopt;
       return static_cast<double>(*r.hw_ub);
     }},
};

}  // namespace

CorrelationMatrix correlation_report(const std::vector<RunRecord>& records) {
  if (records.size() < 3)
    throw std::runtime_error(
        "correlation report needs at least 3 records with decided values");
  CorrelationMatrix m;
  std::size_t nc = std::size(kColumns);
  for (const auto& c : kColumns) m.columns.push_back(c.name);
  m.r.assign(nc, std::vector<std::optional<double>>(nc));
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      std::vector<double> xs, ys;
      for (const auto& rec : records) {
        auto x = kColumns[i].get(rec);
        auto y = kColumns[j].get(rec);
        if (x && y) {
          xs.push_back(*x);
          ys.push_back(*y);
        }
      }
      if (xs.size() < 2) continue;
      double mx = 0, my = 0;
      for (std::size_t t = 0; t < xs.size(); ++t) {
        mx += xs[t];
        my += ys[t];
      }
      mx /= xs.size();
      my /= ys.size();
      double sxy = 0, sxx = 0, syy = 0;
      for (std::size_t t = 0; t < xs.size(); ++t) {
        sxy += (xs[t] - mx) * (ys[t] - my);
        sxx += (xs[t] - mx) * (xs[t] - mx);
        syy += (ys[t] - my) * (ys[t] - my);
      }
      if (sxx < 1e-12 || syy < 1e-12) continue;  // constant column: undefined
      m.r[i][j] = sxy / std::sqrt(sxx * syy);
    }
  }
  return m;
}

std::string CorrelationMatrix::to_csv() const {
  std::ostringstream out;
  out << "column";
  for (const auto& c : columns) out << ',' << c;
  out << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << columns[i];
    for (std::size_t j = 0; j < columns.size(); ++j) {
      out << ',';
      if (r[i][j]) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", *r[i][j]);
        out << buf;
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string CorrelationMatrix::to_ascii() const {
  std::ostringstream out;
  out << "          ";
  for (const auto& c : columns) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%9s", c.c_str());
    out << buf;
  }
  out << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%-10s", columns[i].c_str());
    out << buf;
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (r[i][j]) {
        std::snprintf(buf, sizeof buf, "%+9.2f", *r[i][j]);
        out << buf;
      } else {
        out << "        .";
      }
    }
    out << "\n";
  }
  return out.str();
}

Summary summarize(const std::vector<RunRecord>& records, int k_max) {
  Summary s;
  std::map<std::string, std::size_t> group_index;
  for (const auto& r : records) {
    if (!group_index.count(r.group)) {
      group_index[r.group] = s.groups.size();
      s.groups.push_back(r.group);
      s.hw_by_group.emplace_back();
      s.ghw_by_group.emplace_back();
    }
  }
  for (std::size_t g = 0; g < s.groups.size(); ++g) {
    std::map<int, SummaryCell> hw_cells, ghw_cells;
    std::map<int, std::pair<double, int>> yes_ms, no_ms;
    for (const auto& r : records) {
      if (r.group != s.groups[g]) continue;
      if (r.status_hw != TaskStatus::Skip) {
        // Reconstruct the iterative protocol from the final bounds:
        // definite no below hw_lb, timeouts from hw_lb up to the decision,
        // a yes exactly at hw_ub.
        int lb = r.hw_lb.value_or(1);
        for (int k = 1; k < lb; ++k) {
          hw_cells[k].no++;
          no_ms[k].first += static_cast<double>(r.runtime_ms_hw);
          no_ms[k].second++;
        }
        if (r.hw_ub) {
          hw_cells[*r.hw_ub].yes++;
          yes_ms[*r.hw_ub].first += static_cast<double>(r.runtime_ms_hw);
          yes_ms[*r.hw_ub].second++;
          for (int k = lb; k < *r.hw_ub; ++k) hw_cells[k].timeout++;
        } else {
          for (int k = lb; k <= k_max; ++k) hw_cells[k].timeout++;
        }
      }
      if (r.status_ghw == TaskStatus::Ok || r.status_ghw == TaskStatus::Timeout) {
        if (r.hw_ub && *r.hw_ub >= 3) {
          int k = *r.hw_ub;
          auto& cell = ghw_cells[k];
          if (r.ghw_ub && *r.ghw_ub < k)
            cell.yes++;
          else if (r.ghw_lb && *r.ghw_lb >= k)
            cell.no++;
          else
            cell.timeout++;
        }
      }
    }
    for (auto& [k, cell] : hw_cells) {
      if (yes_ms.count(k) && yes_ms[k].second)
        cell.avg_yes_ms = yes_ms[k].first / yes_ms[k].second;
      if (no_ms.count(k) && no_ms[k].second)
        cell.avg_no_ms = no_ms[k].first / no_ms[k].second;
      s.hw_by_group[g].emplace_back(k, cell);
    }
    for (auto& [k, cell] : ghw_cells) s.ghw_by_group[g].emplace_back(k, cell);
  }
  return s;
}

std::string Summary::render() const {
  std::ostringstream out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    out << "group " << groups[g] << "\n";
    out << "  hw:  k   yes   no   timeout   avg_yes_ms   avg_no_ms\n";
    for (const auto& [k, c] : hw_by_group[g]) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "      %2d %5d %4d %9d %12.1f %11.1f\n",
                    k, c.yes, c.no, c.timeout, c.avg_yes_ms, c.avg_no_ms);
      out << buf;
    }
    if (!ghw_by_group[g].empty()) {
      out << "  ghw: hw->hw-1   yes   no   timeout\n";
      for (const auto& [k, c] : ghw_by_group[g]) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "      %2d->%-2d %7d %4d %9d\n", k,
                      k - 1, c.yes, c.no, c.timeout);
        out << buf;
      }
    }
  }
  return out.str();
}

}  // namespace hgdec
