#include "hgdec/invariants.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace hgdec {

std::size_t degree(const Hypergraph& h) {
  std::size_t d = 0;
  for (std::size_t v = 0; v < h.vertex_count(); ++v)
    d = std::max(d, h.incident_edges(v).count());
  return d;
}

std::size_t intersection_width(const Hypergraph& h) {
  return multi_intersection_width(h, 2);
}

namespace {

// DFS over edge combinations carrying the running intersection; a branch is
// abandoned as soon as the intersection cannot beat the best found.
void miw_rec(const Hypergraph& h, std::size_t c, std::size_t start,
             std::size_t depth, const VertexSet& inter, std::size_t& best) {
  if (depth == c) {
    best = std::max(best, inter.count());
    return;
  }
  if (inter.count() <= best) return;
  for (std::size_t e = start; e + (c - depth) <= h.edge_count(); ++e)
    miw_rec(h, c, e + 1, depth + 1, inter & h.edge(e), best);
}

}  // namespace

std::size_t multi_intersection_width(const Hypergraph& h, std::size_t c) {
  if (c < 2) throw std::invalid_argument("multi-intersection needs c >= 2");
  if (h.edge_count() < c) return 0;
  std::size_t best = 0;
  for (std::size_t e = 0; e + c <= h.edge_count(); ++e) {
    if (h.edge(e).count() <= best) continue;
    miw_rec(h, c, e + 1, 1, h.edge(e), best);
  }
  return best;
}

VcResult vc_dimension(const Hypergraph& h, std::chrono::milliseconds budget) {
  auto deadline = std::chrono::steady_clock::now() + budget;
  std::size_t nv = h.vertex_count();
  VcResult res;
  if (nv == 0 || h.edge_count() == 0) return res;

  std::vector<std::size_t> idx;
  std::uint64_t steps = 0;
  bool out_of_budget = false;

  // Shattering check: the restrictions X ∩ e must produce all 2^|X| subsets.
  auto shattered = [&](const std::vector<std::size_t>& xs) {
    VertexSet x(nv);
    for (auto v : xs) x.set(v);
    std::unordered_set<std::size_t> masks;
    std::size_t want = std::size_t(1) << xs.size();
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      VertexSet r = x & h.edge(e);
      std::size_t mask = 0;
      for (std::size_t b = 0; b < xs.size(); ++b)
        if (r.test(xs[b])) mask |= std::size_t(1) << b;
      masks.insert(mask);
      if (masks.size() == want) return true;
    }
    return false;
  };

  std::function<bool(std::size_t, std::size_t)> any_shattered =
      [&](std::size_t start, std::size_t remaining) -> bool {
    if ((++steps & 255) == 0 &&
        std::chrono::steady_clock::now() >= deadline) {
      out_of_budget = true;
      return false;
    }
    if (remaining == 0) return shattered(idx);
    for (std::size_t v = start; v + remaining <= nv; ++v) {
      idx.push_back(v);
      bool ok = any_shattered(v + 1, remaining - 1);
      idx.pop_back();
      if (ok || out_of_budget) return ok;
    }
    return false;
  };

  for (std::size_t d = 1; d <= nv; ++d) {
    // 2^d distinct restrictions are required, so |E| < 2^d is impossible.
    if (d >= 64 || h.edge_count() < (std::size_t(1) << d)) break;
    if (std::chrono::steady_clock::now() >= deadline) {
      res.exact = false;
      break;
    }
    idx.clear();
    bool found = any_shattered(0, d);
    if (out_of_budget) {
      res.exact = false;
      break;
    }
    if (!found) break;
    res.value = d;
  }
  return res;
}

StatsRecord stats(const Hypergraph& h, std::chrono::milliseconds vc_budget) {
  StatsRecord r;
  r.num_vertices = h.vertex_count();
  r.num_edges = h.edge_count();
  r.arity = h.max_arity();
  r.degree = degree(h);
  r.iwidth = intersection_width(h);
  r.miwidth3 = multi_intersection_width(h, 3);
  r.miwidth4 = multi_intersection_width(h, 4);
  r.vc = vc_dimension(h, vc_budget);
  return r;
}

}  // namespace hgdec
