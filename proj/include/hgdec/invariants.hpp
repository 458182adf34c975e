#pragma once

#include <chrono>
#include <cstddef>
#include <string>

#include "hgdec/hypergraph.hpp"

namespace hgdec {

// Maximum number of edges any vertex occurs in; 0 for an edgeless input.
std::size_t degree(const Hypergraph& h);

// Maximum |e1 ∩ e2| over distinct edge pairs; 0 with fewer than two edges.
std::size_t intersection_width(const Hypergraph& h);

// Maximum |e1 ∩ ... ∩ ec| over c distinct edges; 0 with fewer than c edges.
std::size_t multi_intersection_width(const Hypergraph& h, std::size_t c);

struct VcResult {
  std::size_t value = 0;
  bool exact = true;  // false: value is a verified lower bound (budget hit)
  std::string to_string() const {
    return (exact ? "" : ">=") + std::to_string(value);
  }
};

// Largest d such that some d-element vertex set X is shattered
// (E(H)|_X = 2^X). Ascends d; a level d with |E| < 2^d is impossible and
// ends the search exactly. On budget exhaustion the largest verified d is
// reported as a lower bound.
VcResult vc_dimension(const Hypergraph& h,
                      std::chrono::milliseconds budget =
                          std::chrono::milliseconds(3'600'000));

struct StatsRecord {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  std::size_t arity = 0;
  std::size_t degree = 0;
  std::size_t iwidth = 0;
  std::size_t miwidth3 = 0;
  std::size_t miwidth4 = 0;
  VcResult vc;
};

StatsRecord stats(const Hypergraph& h,
                  std::chrono::milliseconds vc_budget =
                      std::chrono::milliseconds(3'600'000));

}  // namespace hgdec
