#pragma once

#include <vector>

#include "hgdec/hypergraph.hpp"
#include "hgdec/search.hpp"

namespace hgdec {

struct Subedge {
  VertexSet vertices;
  std::size_t parent_edge;
};

// Subedges of H's edges: nonempty subsets of e ∩ (e1 ∪ ... ∪ ej) for j <= k
// other edges, deduplicated by vertex set (lowest-index parent wins) and
// excluding sets equal to existing edges. Adding them to H reduces ghw
// recognition to hw recognition.
struct SubedgeSet {
  std::vector<Subedge> items;
  bool cap_exceeded = false;
};

SubedgeSet subedge_closure_global(const Hypergraph& h, int k, std::size_t cap);

// H plus a subedge set as first-class edges; parent_edge maps every edge of
// the augmented hypergraph back to an edge of H.
struct AugmentedHypergraph {
  Hypergraph graph;
  std::vector<std::size_t> parent_edge;
};

AugmentedHypergraph augment(const Hypergraph& h, const SubedgeSet& subedges);

// REC(GHD,k) by hw-search over the globally augmented hypergraph.
RunOutcome decide_ghw_global(const Hypergraph& h, int k,
                             const SearchOptions& opts = {});

// REC(GHD,k) with subedges generated per search node from the edges still
// relevant to the node's component.
RunOutcome decide_ghw_local(const Hypergraph& h, int k,
                            const SearchOptions& opts = {});

// True iff every component left by removing B(lambda) has to cover at most
// half of the subproblem's ordinary edges.
bool is_balanced_separator(const Hypergraph& h, const SubproblemContext& ctx,
                           const EdgeSet& lambda);

// REC(GHD,k) by recursive balanced-separator splitting over the augmented
// hypergraph. With opts.plain_balsep the augmentation is skipped and a
// no-answer is reported as Unknown.
RunOutcome decide_ghw_balsep(const Hypergraph& h, int k,
                             const SearchOptions& opts = {});

// Races global, local and balsep; the first definite yes/no wins and the
// losers are cancelled cooperatively.
RunOutcome portfolio_ghw(const Hypergraph& h, int k,
                         const SearchOptions& opts = {});

}  // namespace hgdec
