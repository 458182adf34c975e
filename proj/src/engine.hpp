#pragma once

// Library-internal search engine shared by the hw, ghw and fractional
// solvers: top-down recursion on (component edges, connecting vertices)
// with candidate separators supplied per subproblem, the canonical bag rule
// B_u = B(lambda) ∩ V(component), and a negative cache keyed by the exact
// subproblem.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <unordered_set>
#include <vector>

#include "hgdec/bitset.hpp"
#include "hgdec/decomposition.hpp"
#include "hgdec/hypergraph.hpp"

namespace hgdec::detail {

struct SearchCancelled {
  bool timeout;
};

struct RunControl {
  std::chrono::steady_clock::time_point deadline;
  const std::atomic<bool>* stop = nullptr;
  std::uint64_t expansions = 0;

  void poll() {
    if ((++expansions & 1023) != 0) return;
    if (stop && stop->load(std::memory_order_relaxed))
      throw SearchCancelled{false};
    if (std::chrono::steady_clock::now() >= deadline)
      throw SearchCancelled{true};
  }
};

struct Candidate {
  VertexSet verts;
  std::size_t original_edge;  // projection target in the caller's hypergraph
};

// Deterministic candidate list for one subproblem; span = V(component edges).
using CandidateFn = std::function<void(const EdgeSet& component_edges,
                                       const VertexSet& span,
                                       std::vector<Candidate>& out)>;

struct SubKey {
  EdgeSet edges;
  VertexSet conn;
  bool operator==(const SubKey& o) const {
    return edges == o.edges && conn == o.conn;
  }
};

struct SubKeyHash {
  std::size_t operator()(const SubKey& k) const {
    return k.edges.hash() * 1000003u ^ k.conn.hash();
  }
};

class Engine {
 public:
  Engine(const Hypergraph& h, int k, CandidateFn candidates, RunControl& ctl)
      : h_(h), k_(k), candidates_(std::move(candidates)), ctl_(ctl) {}

  // Bags failing the filter are not expanded (fractional-improvement prune).
  void set_bag_filter(std::function<bool(const VertexSet&)> f) {
    bag_filter_ = std::move(f);
  }
  void set_shuffle_seed(std::uint32_t seed) { shuffle_seed_ = seed; }

  // Runs the search over the whole hypergraph; nodes of the result cover
  // the caller's edge index space via Candidate::original_edge.
  std::optional<Decomposition> run() {
    pool_.clear();
    fail_.clear();
    EdgeSet all = h_.all_edges();
    if (h_.edge_count() == 0) return std::nullopt;
    VertexSet span = h_.all_vertices();
    auto root = decompose(all, span, VertexSet(h_.vertex_count()));
    if (!root) return std::nullopt;
    Decomposition d;
    d.kind = DecompKind::HD;
    d.nodes.resize(pool_.size());
    for (std::size_t i = 0; i < pool_.size(); ++i) {
      d.nodes[i].id = static_cast<int>(i);
      d.nodes[i].parent = -1;
      d.nodes[i].bag = pool_[i].bag;
      d.nodes[i].cover = pool_[i].cover;
      for (auto c : pool_[i].children)
        d.nodes[c].parent = static_cast<int>(i);
    }
    return d;
  }

  std::uint64_t expansions() const { return ctl_.expansions; }

 private:
  struct PoolNode {
    VertexSet bag;
    std::vector<CoverEntry> cover;
    std::vector<std::size_t> children;
  };

  std::optional<std::size_t> decompose(const EdgeSet& edges,
                                       const VertexSet& span,
                                       const VertexSet& conn) {
    ctl_.poll();
    SubKey key{edges, conn};
    if (fail_.count(key)) return std::nullopt;

    std::vector<Candidate> cands;
    candidates_(edges, span, cands);
    if (shuffle_seed_) {
      std::mt19937 rng(*shuffle_seed_);
      std::shuffle(cands.begin(), cands.end(), rng);
    }

    // Last candidate index covering each connecting vertex, for pruning.
    std::vector<std::size_t> last_cover(h_.vertex_count(), Bitset::npos);
    bool conn_coverable = true;
    for (auto v : conn) {
      std::size_t last = Bitset::npos;
      for (std::size_t i = cands.size(); i-- > 0;) {
        if (cands[i].verts.test(v)) {
          last = i;
          break;
        }
      }
      if (last == Bitset::npos) conn_coverable = false;
      last_cover[v] = last;
    }

    if (conn_coverable) {
      VertexSet comp_free = span - conn;
      std::vector<std::size_t> chosen;
      for (int card = 1; card <= k_ && card <= static_cast<int>(cands.size());
           ++card) {
        auto r = combo(cands, last_cover, chosen,
                       VertexSet(h_.vertex_count()), 0, card, edges, span,
                       conn, comp_free);
        if (r) return r;
      }
    }

    fail_.insert(std::move(key));
    return std::nullopt;
  }

  std::optional<std::size_t> combo(const std::vector<Candidate>& cands,
                                   const std::vector<std::size_t>& last_cover,
                                   std::vector<std::size_t>& chosen,
                                   const VertexSet& lam_verts,
                                   std::size_t start, int remaining,
                                   const EdgeSet& edges, const VertexSet& span,
                                   const VertexSet& conn,
                                   const VertexSet& comp_free) {
    if (remaining == 0)
      return try_separator(cands, chosen, lam_verts, edges, span, conn,
                           comp_free);
    if (cands.size() - start < static_cast<std::size_t>(remaining))
      return std::nullopt;
    for (auto v : conn) {
      if (!lam_verts.test(v) &&
          (last_cover[v] == Bitset::npos || last_cover[v] < start))
        return std::nullopt;
    }
    for (std::size_t i = start; i + remaining <= cands.size(); ++i) {
      chosen.push_back(i);
      auto r = combo(cands, last_cover, chosen, lam_verts | cands[i].verts,
                     i + 1, remaining - 1, edges, span, conn, comp_free);
      chosen.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> try_separator(
      const std::vector<Candidate>& cands,
      const std::vector<std::size_t>& chosen, const VertexSet& lam_verts,
      const EdgeSet& edges, const VertexSet& span, const VertexSet& conn,
      const VertexSet& comp_free) {
    ctl_.poll();
    if (!conn.is_subset_of(lam_verts)) return std::nullopt;
    VertexSet bag = lam_verts & span;
    if (!bag.intersects(comp_free) && comp_free.any()) return std::nullopt;
    if (bag_filter_ && !bag_filter_(bag)) return std::nullopt;

    VertexSet rest = comp_free - bag;
    std::vector<VertexSet> comps = components_within(rest);

    std::size_t pool_mark = pool_.size();
    std::vector<std::size_t> children;
    for (const auto& comp : comps) {
      EdgeSet child_edges = h_.edges_meeting(comp);
      child_edges &= edges;
      VertexSet child_span = h_.vertices_of(child_edges);
      VertexSet child_conn = bag & child_span;
      auto r = decompose(child_edges, child_span, child_conn);
      if (!r) {
        pool_.resize(pool_mark);
        return std::nullopt;
      }
      children.push_back(*r);
    }

    PoolNode node;
    node.bag = bag;
    node.children = std::move(children);
    std::vector<CoverEntry> cover;
    for (auto i : chosen) cover.push_back({cands[i].original_edge, Rational(1)});
    std::sort(cover.begin(), cover.end(),
              [](const CoverEntry& a, const CoverEntry& b) {
                return a.edge < b.edge;
              });
    cover.erase(std::unique(cover.begin(), cover.end(),
                            [](const CoverEntry& a, const CoverEntry& b) {
                              return a.edge == b.edge;
                            }),
                cover.end());
    node.cover = std::move(cover);
    pool_.push_back(std::move(node));
    return pool_.size() - 1;
  }

  // Components of the given vertex set under edges restricted to it.
  std::vector<VertexSet> components_within(const VertexSet& verts) {
    std::vector<VertexSet> out;
    VertexSet seen(h_.vertex_count());
    for (auto seed : verts) {
      if (seen.test(seed)) continue;
      VertexSet comp(h_.vertex_count());
      comp.set(seed);
      std::vector<std::size_t> queue{seed};
      while (!queue.empty()) {
        auto v = queue.back();
        queue.pop_back();
        for (auto e : h_.incident_edges(v)) {
          for (auto w : h_.edge(e)) {
            if (!verts.test(w) || comp.test(w)) continue;
            comp.set(w);
            queue.push_back(w);
          }
        }
      }
      seen |= comp;
      out.push_back(std::move(comp));
    }
    return out;
  }

  const Hypergraph& h_;
  int k_;
  CandidateFn candidates_;
  RunControl& ctl_;
  std::function<bool(const VertexSet&)> bag_filter_;
  std::optional<std::uint32_t> shuffle_seed_;
  std::vector<PoolNode> pool_;
  std::unordered_set<SubKey, SubKeyHash> fail_;
};

}  // namespace hgdec::detail
