#include "hgdec/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgdec {

std::optional<std::size_t> Hypergraph::vertex_index(
    std::string_view name) const {
  auto it = vertex_lookup_.find(std::string(name));
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Hypergraph::edge_index(std::string_view name) const {
  auto it = edge_lookup_.find(std::string(name));
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

VertexSet Hypergraph::vertices_of(const EdgeSet& edges) const {
  VertexSet out(vertex_count());
  for (auto e : edges) out |= edges_[e];
  return out;
}

EdgeSet Hypergraph::edges_meeting(const VertexSet& vertices) const {
  EdgeSet out(edge_count());
  for (auto v : vertices) out |= incidence_[v];
  return out;
}

std::size_t Hypergraph::max_arity() const {
  std::size_t a = 0;
  for (const auto& e : edges_) a = std::max(a, e.count());
  return a;
}

std::size_t HypergraphBuilder::add_vertex(std::string_view name) {
  auto key = std::string(name);
  auto it = hg_.vertex_lookup_.find(key);
  if (it != hg_.vertex_lookup_.end()) return it->second;
  std::size_t idx = hg_.vertex_names_.size();
  hg_.vertex_names_.push_back(key);
  hg_.vertex_lookup_.emplace(std::move(key), idx);
  return idx;
}

std::size_t HypergraphBuilder::add_edge(
    std::string_view name, std::span<const std::string> vertex_names) {
  if (vertex_names.empty())
    throw std::invalid_argument("empty edge '" + std::string(name) + "'");
  auto key = std::string(name);
  if (hg_.edge_lookup_.count(key))
    throw std::invalid_argument("duplicate edge name '" + key + "'");
  std::vector<std::size_t> verts;
  for (const auto& vn : vertex_names) {
    std::size_t v = add_vertex(vn);
    if (std::find(verts.begin(), verts.end(), v) == verts.end())
      verts.push_back(v);
  }
  std::size_t idx = hg_.edge_names_.size();
  hg_.edge_names_.push_back(key);
  hg_.edge_lookup_.emplace(std::move(key), idx);
  edge_vertices_.push_back(std::move(verts));
  return idx;
}

Hypergraph HypergraphBuilder::build() {
  std::size_t nv = hg_.vertex_names_.size();
  hg_.edges_.clear();
  hg_.incidence_.assign(nv, EdgeSet(edge_vertices_.size()));
  for (std::size_t e = 0; e < edge_vertices_.size(); ++e) {
    VertexSet vs(nv);
    for (auto v : edge_vertices_[e]) {
      vs.set(v);
      hg_.incidence_[v].set(e);
    }
    hg_.edges_.push_back(std::move(vs));
  }
  return std::move(hg_);
}

std::vector<VertexSet> connected_components(const Hypergraph& h,
                                            const VertexSet& excluded) {
  return connected_components(h, {}, excluded);
}

std::vector<VertexSet> connected_components(
    const Hypergraph& h, std::span<const VertexSet> special_edges,
    const VertexSet& excluded) {
  std::size_t nv = h.vertex_count();
  VertexSet remaining = VertexSet::full(nv);
  remaining -= excluded;

  std::vector<VertexSet> out;
  VertexSet seen(nv);
  for (std::size_t seed = remaining.find_first(); seed != Bitset::npos;
       seed = remaining.find_next(seed)) {
    if (seen.test(seed)) continue;
    VertexSet comp(nv);
    comp.set(seed);
    std::vector<std::size_t> queue{seed};
    while (!queue.empty()) {
      std::size_t v = queue.back();
      queue.pop_back();
      for (auto e : h.incident_edges(v)) {
        for (auto w : h.edge(e)) {
          if (!remaining.test(w) || comp.test(w)) continue;
          comp.set(w);
          queue.push_back(w);
        }
      }
      for (const auto& s : special_edges) {
        if (!s.test(v)) continue;
        for (auto w : s) {
          if (!remaining.test(w) || comp.test(w)) continue;
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

SubproblemContext induced_subproblem(const Hypergraph& h,
                                     std::span<const VertexSet> special_edges,
                                     const VertexSet& component,
                                     const VertexSet& sep_bag) {
  SubproblemContext ctx;
  ctx.edges = h.edges_meeting(component);
  ctx.vertices = h.vertices_of(ctx.edges);
  ctx.vertices |= sep_bag;
  for (const auto& s : special_edges)
    if (s.intersects(component)) ctx.special_edges.push_back(s);
  ctx.special_edges.push_back(sep_bag);
  return ctx;
}

namespace {

// GYO fixpoint: drop vertices occurring in one live edge, then drop live
// edges whose remainder is contained in another live edge, recording the
// witness as the parent.
std::pair<bool, std::vector<std::size_t>> gyo_run(const Hypergraph& h) {
  std::size_t ne = h.edge_count();
  std::size_t nv = h.vertex_count();
  std::vector<VertexSet> work;
  work.reserve(ne);
  for (std::size_t e = 0; e < ne; ++e) work.push_back(h.edge(e));
  std::vector<bool> alive(ne, true);
  std::vector<std::size_t> parent(ne, Bitset::npos);
  std::size_t alive_count = ne;

  bool changed = true;
  while (changed) {
    changed = false;
    // Vertices in exactly one live edge.
    std::vector<int> occ(nv, 0);
    for (std::size_t e = 0; e < ne; ++e)
      if (alive[e])
        for (auto v : work[e]) ++occ[v];
    for (std::size_t e = 0; e < ne; ++e) {
      if (!alive[e]) continue;
      for (auto v : work[e]) {
        if (occ[v] == 1) {
          work[e].reset(v);
          changed = true;
        }
      }
    }
    // Edges contained in another live edge.
    for (std::size_t e = 0; e < ne && alive_count > 1; ++e) {
      if (!alive[e]) continue;
      for (std::size_t w = 0; w < ne; ++w) {
        if (w == e || !alive[w]) continue;
        bool subsumed = work[e].is_subset_of(work[w]) &&
                        (work[e] != work[w] || e > w);
        if (subsumed) {
          alive[e] = false;
          parent[e] = w;
          --alive_count;
          changed = true;
          break;
        }
      }
    }
  }
  return {alive_count <= 1, std::move(parent)};
}

}  // namespace

bool gyo_acyclic(const Hypergraph& h) { return gyo_run(h).first; }

std::optional<std::vector<std::size_t>> gyo_parents(const Hypergraph& h) {
  auto [acyclic, parent] = gyo_run(h);
  if (!acyclic) return std::nullopt;
  return parent;
}

SimplifiedHypergraph simplify(const Hypergraph& h) {
  std::size_t ne = h.edge_count();
  std::vector<bool> keep(ne, true);
  for (std::size_t e = 0; e < ne; ++e) {
    for (std::size_t w = 0; w < ne && keep[e]; ++w) {
      if (w == e || !keep[w]) continue;
      if (h.edge(e).is_subset_of(h.edge(w)) &&
          (h.edge(e) != h.edge(w) || e > w))
        keep[e] = false;
    }
  }
  HypergraphBuilder b(h.name());
  // Vertex indexing is preserved: every vertex still occurs in a kept edge,
  // and we pre-register vertices in original order.
  for (std::size_t v = 0; v < h.vertex_count(); ++v)
    b.add_vertex(h.vertex_name(v));
  SimplifiedHypergraph out;
  for (std::size_t e = 0; e < ne; ++e) {
    if (!keep[e]) continue;
    std::vector<std::string> names;
    for (auto v : h.edge(e)) names.push_back(h.vertex_name(v));
    b.add_edge(h.edge_name(e), names);
    out.original_edge.push_back(e);
  }
  out.graph = b.build();
  return out;
}

}  // namespace hgdec
