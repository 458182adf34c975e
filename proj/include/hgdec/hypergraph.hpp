#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hgdec/bitset.hpp"

namespace hgdec {

// Named hypergraph over dense vertex/edge indices. Vertex indices follow
// first appearance, edge indices follow input order, so every downstream
// result is reproducible from the input file alone. Immutable after
// construction; safe to share across concurrent solver runs.
class Hypergraph {
 public:
  Hypergraph() = default;

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  const std::string& vertex_name(std::size_t v) const {
    return vertex_names_[v];
  }
  const std::string& edge_name(std::size_t e) const { return edge_names_[e]; }
  const VertexSet& edge(std::size_t e) const { return edges_[e]; }
  const EdgeSet& incident_edges(std::size_t v) const { return incidence_[v]; }

  std::optional<std::size_t> vertex_index(std::string_view name) const;
  std::optional<std::size_t> edge_index(std::string_view name) const;

  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }

  // Union of the vertex sets of the given edges.
  VertexSet vertices_of(const EdgeSet& edges) const;
  // Edges having at least one vertex in the given set.
  EdgeSet edges_meeting(const VertexSet& vertices) const;

  std::size_t max_arity() const;

 private:
  friend class HypergraphBuilder;

  std::string name_;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<VertexSet> edges_;
  std::vector<EdgeSet> incidence_;
  std::unordered_map<std::string, std::size_t> vertex_lookup_;
  std::unordered_map<std::string, std::size_t> edge_lookup_;
};

// Single-threaded construction front end; enforces the structural
// invariants (no empty edge, no duplicate edge name).
class HypergraphBuilder {
 public:
  explicit HypergraphBuilder(std::string name = "") { hg_.name_ = std::move(name); }

  std::size_t add_vertex(std::string_view name);
  // Duplicate vertices within one edge collapse (edges are sets).
  std::size_t add_edge(std::string_view name,
                       std::span<const std::string> vertex_names);
  bool has_edge_name(std::string_view name) const {
    return hg_.edge_lookup_.count(std::string(name)) > 0;
  }

  Hypergraph build();

 private:
  Hypergraph hg_;
  std::vector<std::vector<std::size_t>> edge_vertices_;
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, int line, int col);
  int line;
  int col;
};

// Benchmark hypergraph format: `name(v1,...,vn)` edges separated by commas,
// optional final dot, `%` comments. See README for the grammar.
Hypergraph parse_hypergraph(std::string_view text, std::string name = "");
std::string serialize_hypergraph(const Hypergraph& h);

// Conjunctive-query text: atoms `rel(a1,...,an)` separated by commas, `AND`,
// or the conjunction sign. Arguments starting with an uppercase letter or
// `?` are variables; one edge per atom over its variables, constants never
// become vertices, variable-free atoms are dropped.
Hypergraph cq_to_hypergraph(std::string_view text, std::string name = "");

// Maximal sets of vertices from V(H) \ excluded connected via edges
// restricted to V(H) \ excluded; ordered by smallest contained vertex.
std::vector<VertexSet> connected_components(const Hypergraph& h,
                                            const VertexSet& excluded);

// As above but connectivity may also run through extra (special) edges.
std::vector<VertexSet> connected_components(
    const Hypergraph& h, std::span<const VertexSet> special_edges,
    const VertexSet& excluded);

// One branch of a recursive decomposition search: the sub-hypergraph induced
// by a component plus the special edges carried into it.
struct SubproblemContext {
  EdgeSet edges;                          // E_i, over the parent's indexing
  VertexSet vertices;                     // V(E_i) together with the separator bag
  std::vector<VertexSet> special_edges;   // Sp_i
  int depth = 0;
};

SubproblemContext induced_subproblem(const Hypergraph& h,
                                     std::span<const VertexSet> special_edges,
                                     const VertexSet& component,
                                     const VertexSet& sep_bag);

// GYO reduction; true iff H is alpha-acyclic (equivalently hw = 1).
bool gyo_acyclic(const Hypergraph& h);

// Join forest from the GYO reduction: parent edge index per edge, npos for
// roots. Empty result when H is cyclic.
std::optional<std::vector<std::size_t>> gyo_parents(const Hypergraph& h);

struct SimplifiedHypergraph {
  Hypergraph graph;
  std::vector<std::size_t> original_edge;  // simplified index -> original index
};

// Removes duplicate edges and edges contained in another edge. Vertex
// indexing is preserved; covers over the result re-express over the
// original via original_edge.
SimplifiedHypergraph simplify(const Hypergraph& h);

}  // namespace hgdec
