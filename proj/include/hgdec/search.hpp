#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hgdec/decomposition.hpp"
#include "hgdec/hypergraph.hpp"

namespace hgdec {

enum class RunStatus { Yes, No, Timeout, Unknown, Error };

std::string to_string(RunStatus s);

struct RunOutcome {
  RunStatus status = RunStatus::Error;
  std::optional<Decomposition> witness;
  std::chrono::milliseconds elapsed{0};
  std::uint64_t nodes_expanded = 0;
  std::string method;
  std::string error;
};

struct SearchOptions {
  std::chrono::milliseconds timeout{3'600'000};
  bool simplify = true;
  std::optional<std::uint32_t> shuffle_seed;
  std::size_t subedge_cap = 100'000;
  bool plain_balsep = false;  // skip augmentation; NO degrades to Unknown
  const std::atomic<bool>* stop = nullptr;
};

// REC(HD,k): an HD of width <= k (validated against check_hd) or an exact
// no-answer. k = 1 is answered through the GYO reduction.
RunOutcome decide_hw(const Hypergraph& h, int k, const SearchOptions& opts = {});

struct WidthBounds {
  int lower = 1;                    // 1 + largest k with a definite no
  std::optional<int> upper;         // smallest k with yes; empty = unknown
  std::optional<Decomposition> witness;
  std::vector<std::pair<int, RunStatus>> per_k;
};

// Iterates k = 1..k_max with the per-k timeout taken from opts; stops at the
// first yes. Timeouts only widen the reported interval.
WidthBounds compute_hw(const Hypergraph& h, int k_max,
                       const SearchOptions& opts = {});

}  // namespace hgdec
