#pragma once

#include <optional>
#include <stdexcept>

#include "hgdec/decomposition.hpp"
#include "hgdec/hypergraph.hpp"
#include "hgdec/search.hpp"

namespace hgdec {

struct InfeasibleCover : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FracCover {
  EdgeCover cover;
  bool optimal = false;
};

// Minimum-weight fractional edge cover of `target`: min sum gamma(e) with
// sum_{e ∋ v} gamma(e) >= 1 for each target vertex and 0 <= gamma <= 1.
// Weights come back snapped to rationals with denominator <= 10^6. Throws
// InfeasibleCover when some target vertex lies in no support edge.
FracCover lp_min_cover(const Hypergraph& h, const VertexSet& target,
                       const std::optional<EdgeSet>& support = std::nullopt);

// Replaces every node's cover of an HD/GHD by an optimal fractional cover of
// its bag (support: all edges). Tree and bags are untouched.
Decomposition simple_improve(const Hypergraph& h, const Decomposition& d);

// Decides whether some HD of width <= k fractionally improves to width
// <= k_prime; yes-answers carry the improved FHD.
RunOutcome frac_improve_search(const Hypergraph& h, int k, double k_prime,
                               const SearchOptions& opts = {});

enum class ImproveBucket { AtLeastOne, HalfToOne, TenthToHalf, None };

std::string to_string(ImproveBucket b);

struct BucketOutcome {
  ImproveBucket bucket = ImproveBucket::None;
  bool timed_out = false;
  std::vector<std::pair<double, RunStatus>> thresholds;
};

// Tries k' = k-1, k-0.5, k-0.1 in that order; the first yes fixes the
// bucket, everything else is "no" (annotated when a threshold timed out).
BucketOutcome improvement_bucket(const Hypergraph& h, int k,
                                 const SearchOptions& opts = {});

}  // namespace hgdec
