#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hgdec/invariants.hpp"
#include "hgdec/search.hpp"

namespace hgdec {

struct BenchConfig {
  std::filesystem::path corpus;
  std::string glob = "*.hg";
  std::set<std::string> tasks = {"stats", "hw", "ghw", "improve"};
  int k_max = 6;
  double timeout_s = 3600;
  int workers = 1;
  std::filesystem::path csv_path;
  bool resume = false;
  std::uint32_t seed = 0;
  int ghw_depth = 1;  // how far below hw to push the ghw attempts
};

// Applies `key = value` lines from a plain config file onto a BenchConfig.
// Keys mirror the CLI flags: dir, glob, tasks, kmax, timeout, workers, csv,
// resume, seed, ghw-depth.
void apply_config_file(BenchConfig& cfg, const std::filesystem::path& file);

enum class TaskStatus { Ok, Timeout, Error, Skip };
std::string to_string(TaskStatus s);

struct RunRecord {
  std::string instance;  // path relative to the corpus root
  std::string group;
  std::optional<StatsRecord> stats;
  std::optional<int> hw_lb, hw_ub;
  std::optional<int> ghw_lb, ghw_ub;
  std::string improve_bucket;
  std::string winning_method;
  TaskStatus status_stats = TaskStatus::Skip;
  TaskStatus status_hw = TaskStatus::Skip;
  TaskStatus status_ghw = TaskStatus::Skip;
  TaskStatus status_improve = TaskStatus::Skip;
  std::int64_t runtime_ms_stats = 0;
  std::int64_t runtime_ms_hw = 0;
  std::int64_t runtime_ms_ghw = 0;
  std::int64_t runtime_ms_improve = 0;
};

extern const char* const kCsvHeader;

std::string record_to_csv(const RunRecord& r);
RunRecord record_from_csv(const std::string& line);

// Runs every matching instance through the requested tasks with a worker
// pool; rows stream to the CSV in instance order so interrupted runs resume
// by reusing completed rows.
std::vector<RunRecord> run_corpus(const BenchConfig& cfg);

std::vector<RunRecord> read_csv(const std::filesystem::path& path);

struct CorrelationMatrix {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> r;
  std::string to_csv() const;
  std::string to_ascii() const;
};

// Pearson correlation over the numeric instance properties; pairs with an
// unknown value on either side are excluded per cell. Needs >= 3 records.
CorrelationMatrix correlation_report(const std::vector<RunRecord>& records);

struct SummaryCell {
  int yes = 0, no = 0, timeout = 0;
  double avg_yes_ms = 0, avg_no_ms = 0;
};

struct Summary {
  // group -> k -> cell, reconstructed from the recorded bounds
  std::vector<std::string> groups;
  std::vector<std::vector<std::pair<int, SummaryCell>>> hw_by_group;
  std::vector<std::vector<std::pair<int, SummaryCell>>> ghw_by_group;
  std::string render() const;
};

Summary summarize(const std::vector<RunRecord>& records, int k_max = 6);

}  // namespace hgdec
