#include "hgdec/ghd.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "engine.hpp"

namespace hgdec {

namespace {

using detail::Candidate;
using detail::Engine;
using detail::RunControl;
using detail::SearchCancelled;

struct CapExceeded {};

constexpr std::size_t kMaxSubsetBits = 62;
// Intermediate union enumeration is abandoned past this many combinations;
// the closure would be far beyond any sensible subedge cap anyway.
constexpr std::size_t kUnionBudget = 250'000;

struct ClosureClock {
  std::chrono::steady_clock::time_point deadline;
  bool enabled = false;
  std::uint64_t ops = 0;
  void poll() {
    if (!enabled || (++ops & 2047) != 0) return;
    if (std::chrono::steady_clock::now() >= deadline)
      throw SearchCancelled{true};
  }
};

// Distinct maximal pairwise pieces e ∩ f over the given partners.
std::vector<VertexSet> maximal_pieces(const Hypergraph& h, std::size_t e,
                                      const EdgeSet& partners,
                                      ClosureClock& clock) {
  std::vector<VertexSet> pieces;
  std::unordered_set<VertexSet> seen;
  for (auto f : partners) {
    if (f == e) continue;
    clock.poll();
    VertexSet p = h.edge(e) & h.edge(f);
    if (p.empty()) continue;
    if (seen.insert(p).second) pieces.push_back(std::move(p));
  }
  std::vector<VertexSet> maximal;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pieces.size() && !dominated; ++j) {
      clock.poll();
      if (i != j && pieces[i].is_subset_of(pieces[j]) &&
          (pieces[i] != pieces[j] || i > j))
        dominated = true;
    }
    if (!dominated) maximal.push_back(pieces[i]);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });
  return maximal;
}

// Unions of up to k pieces; dominated unions dropped.
std::vector<VertexSet> piece_unions(const std::vector<VertexSet>& pieces,
                                    int k, std::size_t nv,
                                    ClosureClock& clock) {
  std::vector<VertexSet> unions;
  if (pieces.empty()) return unions;
  if (pieces.size() <= static_cast<std::size_t>(k)) {
    VertexSet u(nv);
    for (const auto& p : pieces) u |= p;
    unions.push_back(std::move(u));
    return unions;
  }
  std::unordered_set<VertexSet> seen;
  std::size_t combos = 0;
  std::function<void(std::size_t, int, VertexSet)> rec =
      [&](std::size_t start, int remaining, VertexSet acc) {
        if (remaining == 0) {
          if (++combos > kUnionBudget) throw CapExceeded{};
          clock.poll();
          if (seen.insert(acc).second) unions.push_back(std::move(acc));
          return;
        }
        for (std::size_t i = start; i + remaining <= pieces.size(); ++i)
          rec(i + 1, remaining - 1, acc | pieces[i]);
      };
  rec(0, k, VertexSet(nv));
  std::vector<VertexSet> kept;
  for (std::size_t i = 0; i < unions.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < unions.size() && !dominated; ++j) {
      clock.poll();
      if (i != j && unions[i].is_subset_of(unions[j]) &&
          (unions[i] != unions[j] || i > j))
        dominated = true;
    }
    if (!dominated) kept.push_back(unions[i]);
  }
  std::sort(kept.begin(), kept.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });
  return kept;
}

// Expands all nonempty subsets of each union into `seen`; throws CapExceeded
// once more than `cap` distinct subedges exist.
void expand_subedges(const Hypergraph& h, std::size_t parent,
                     const std::vector<VertexSet>& unions,
                     const std::unordered_set<VertexSet>& existing,
                     std::map<VertexSet, std::size_t,
                              bool (*)(const VertexSet&, const VertexSet&)>& seen,
                     std::size_t cap, ClosureClock& clock) {
  std::size_t nv = h.vertex_count();
  for (const auto& u : unions) {
    auto bits = u.to_indices();
    if (bits.size() > kMaxSubsetBits ||
        ((bits.size() < kMaxSubsetBits) &&
         (1ULL << bits.size()) - 1 > cap + existing.size()))
      throw CapExceeded{};
    std::uint64_t limit = 1ULL << bits.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      clock.poll();
      VertexSet s(nv);
      for (std::size_t b = 0; b < bits.size(); ++b)
        if (mask & (1ULL << b)) s.set(bits[b]);
      if (existing.count(s)) continue;
      seen.emplace(std::move(s), parent);
      if (seen.size() > cap) throw CapExceeded{};
    }
  }
}

bool lex_less_fn(const VertexSet& a, const VertexSet& b) {
  return a.lex_less(b);
}

SubedgeSet closure_over(const Hypergraph& h, const EdgeSet& base_edges, int k,
                        std::size_t cap, ClosureClock clock) {
  SubedgeSet out;
  std::unordered_set<VertexSet> existing;
  for (std::size_t e = 0; e < h.edge_count(); ++e) existing.insert(h.edge(e));
  std::map<VertexSet, std::size_t, bool (*)(const VertexSet&, const VertexSet&)>
      seen(lex_less_fn);
  try {
    for (auto e : base_edges) {
      auto pieces = maximal_pieces(h, e, base_edges, clock);
      auto unions = piece_unions(pieces, k, h.vertex_count(), clock);
      expand_subedges(h, e, unions, existing, seen, cap, clock);
    }
  } catch (const CapExceeded&) {
    out.cap_exceeded = true;
  }
  for (auto& [verts, parent] : seen) out.items.push_back({verts, parent});
  return out;
}

}  // namespace

SubedgeSet subedge_closure_global(const Hypergraph& h, int k,
                                  std::size_t cap) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return closure_over(h, h.all_edges(), k, cap, {});
}

AugmentedHypergraph augment(const Hypergraph& h, const SubedgeSet& subedges) {
  HypergraphBuilder b(h.name());
  for (std::size_t v = 0; v < h.vertex_count(); ++v)
    b.add_vertex(h.vertex_name(v));
  AugmentedHypergraph out;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    std::vector<std::string> names;
    for (auto v : h.edge(e)) names.push_back(h.vertex_name(v));
    b.add_edge(h.edge_name(e), names);
    out.parent_edge.push_back(e);
  }
  std::size_t counter = 0;
  for (const auto& sub : subedges.items) {
    std::vector<std::string> names;
    for (auto v : sub.vertices) names.push_back(h.vertex_name(v));
    std::string ename;
    do {
      ename = h.edge_name(sub.parent_edge) + ":sub" + std::to_string(++counter);
    } while (b.has_edge_name(ename));
    b.add_edge(ename, names);
    out.parent_edge.push_back(sub.parent_edge);
  }
  out.graph = b.build();
  return out;
}

namespace {

struct Prepared {
  SimplifiedHypergraph simp;
  const Hypergraph* s = nullptr;
  std::vector<std::size_t> to_original;
};

Prepared prepare(const Hypergraph& h, const SearchOptions& opts) {
  Prepared p;
  if (opts.simplify) {
    p.simp = simplify(h);
    p.s = &p.simp.graph;
    p.to_original = p.simp.original_edge;
  } else {
    p.simp.graph = h;  // keep a stable copy to reference
    p.s = &p.simp.graph;
    p.to_original.resize(h.edge_count());
    for (std::size_t e = 0; e < h.edge_count(); ++e) p.to_original[e] = e;
  }
  return p;
}

RunOutcome run_ghd_engine(const Hypergraph& h, int k, const SearchOptions& opts,
                          const char* method, bool local) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (h.edge_count() == 0) throw std::invalid_argument("empty hypergraph");
  auto start = std::chrono::steady_clock::now();
  RunOutcome out;
  out.method = method;
  auto finish = [&](RunStatus st) {
    out.status = st;
    out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return out;
  };

  Prepared p = prepare(h, opts);
  const Hypergraph& s = *p.s;

  RunControl ctl;
  ctl.deadline = std::chrono::steady_clock::now() + opts.timeout;
  ctl.stop = opts.stop;
  ClosureClock clock{ctl.deadline, /*enabled=*/true};

  std::vector<Candidate> global_subs;
  std::unordered_map<VertexSet, std::shared_ptr<std::vector<Candidate>>>
      local_pools;

  detail::CandidateFn fn;
  if (!local) {
    fn = [&](const EdgeSet&, const VertexSet& span,
             std::vector<Candidate>& cands) {
      EdgeSet rel = s.edges_meeting(span);
      for (auto e : rel) cands.push_back({s.edge(e), p.to_original[e]});
      for (const auto& c : global_subs)
        if (c.verts.intersects(span)) cands.push_back(c);
    };
  } else {
    fn = [&](const EdgeSet&, const VertexSet& span,
             std::vector<Candidate>& cands) {
      auto it = local_pools.find(span);
      if (it == local_pools.end()) {
        auto pool = std::make_shared<std::vector<Candidate>>();
        EdgeSet rel = s.edges_meeting(span);
        for (auto e : rel) pool->push_back({s.edge(e), p.to_original[e]});
        SubedgeSet subs = closure_over(s, rel, k, opts.subedge_cap, clock);
        if (subs.cap_exceeded) throw CapExceeded{};
        for (const auto& sub : subs.items)
          if (sub.vertices.intersects(span))
            pool->push_back({sub.vertices, p.to_original[sub.parent_edge]});
        it = local_pools.emplace(span, std::move(pool)).first;
      }
      cands = *it->second;
    };
  }

  Engine engine(s, k, fn, ctl);
  if (opts.shuffle_seed) engine.set_shuffle_seed(*opts.shuffle_seed);
  try {
    // Global mode precomputes the closure once; local mode fills per-node
    // pools keyed by the component span.
    if (!local) {
      auto closure = closure_over(s, s.all_edges(), k, opts.subedge_cap, clock);
      if (closure.cap_exceeded) {
        out.error = "subedge cap exceeded (" +
                    std::to_string(opts.subedge_cap) + ")";
        return finish(RunStatus::Error);
      }
      for (const auto& sub : closure.items)
        global_subs.push_back({sub.vertices, p.to_original[sub.parent_edge]});
    }
    auto d = engine.run();
    out.nodes_expanded = ctl.expansions;
    if (!d) return finish(RunStatus::No);
    d->kind = DecompKind::GHD;
    out.witness = std::move(*d);
    auto bad = check_ghd(h, *out.witness);
    if (!bad.empty())
      throw std::logic_error("search produced an invalid GHD:\n" +
                             describe(bad));
    if (width(*out.witness) > Rational(k))
      throw std::logic_error("search exceeded the width bound");
    return finish(RunStatus::Yes);
  } catch (const SearchCancelled&) {
    out.nodes_expanded = ctl.expansions;
    return finish(RunStatus::Timeout);
  } catch (const CapExceeded&) {
    out.nodes_expanded = ctl.expansions;
    out.error = "subedge cap exceeded (" + std::to_string(opts.subedge_cap) +
                ")";
    return finish(RunStatus::Error);
  }
}

}  // namespace

RunOutcome decide_ghw_global(const Hypergraph& h, int k,
                             const SearchOptions& opts) {
  return run_ghd_engine(h, k, opts, "global", /*local=*/false);
}

RunOutcome decide_ghw_local(const Hypergraph& h, int k,
                            const SearchOptions& opts) {
  return run_ghd_engine(h, k, opts, "local", /*local=*/true);
}

namespace {

std::vector<VertexSet> components_of_region(
    const Hypergraph& h, const EdgeSet& ordinary,
    std::span<const VertexSet> specials, const VertexSet& region) {
  std::vector<VertexSet> out;
  VertexSet seen(h.vertex_count());
  for (auto seed : region) {
    if (seen.test(seed)) continue;
    VertexSet comp(h.vertex_count());
    comp.set(seed);
    std::vector<std::size_t> queue{seed};
    while (!queue.empty()) {
      auto v = queue.back();
      queue.pop_back();
      for (auto e : h.incident_edges(v)) {
        if (!ordinary.test(e)) continue;
        for (auto w : h.edge(e)) {
          if (!region.test(w) || comp.test(w)) continue;
          comp.set(w);
          queue.push_back(w);
        }
      }
      for (const auto& sp : specials) {
        if (!sp.test(v)) continue;
        for (auto w : sp) {
          if (!region.test(w) || comp.test(w)) continue;
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

}  // namespace

bool is_balanced_separator(const Hypergraph& h, const SubproblemContext& ctx,
                           const EdgeSet& lambda) {
  VertexSet sep_bag(h.vertex_count());
  for (auto e : lambda) sep_bag |= h.edge(e);
  VertexSet region = ctx.vertices - sep_bag;
  auto comps =
      components_of_region(h, ctx.edges, ctx.special_edges, region);
  std::size_t total = ctx.edges.count();
  for (const auto& comp : comps) {
    std::size_t cnt = 0;
    for (auto e : ctx.edges)
      if (h.edge(e).intersects(comp)) ++cnt;
    if (2 * cnt > total) return false;
  }
  return true;
}

namespace {

// Nodes of one balanced-separator subtree; index 0 is the root. Special
// leaves carry the pending bag they stand for and are merged away when the
// level that created them assembles its result.
struct BalNode {
  VertexSet bag;
  std::vector<CoverEntry> cover;  // over the caller's original edges
  bool special = false;
  VertexSet special_set;
  std::vector<std::size_t> kids;
};
using BalTree = std::vector<BalNode>;

struct BalKey {
  EdgeSet ordinary;
  std::vector<VertexSet> specials;
  bool operator==(const BalKey& o) const {
    return ordinary == o.ordinary && specials == o.specials;
  }
};
struct BalKeyHash {
  std::size_t operator()(const BalKey& k) const {
    std::size_t h = k.ordinary.hash();
    for (const auto& s : k.specials) h = h * 1000003u ^ s.hash();
    return h;
  }
};

class BalSepSearch {
 public:
  BalSepSearch(const Hypergraph& hp, std::vector<std::size_t> to_original,
               int k, RunControl& ctl)
      : hp_(hp),
        to_original_(std::move(to_original)),
        k_(k),
        ctl_(ctl),
        max_depth_(static_cast<int>(hp.vertex_count()) + 3) {}

  std::optional<BalTree> run() {
    SubproblemContext ctx;
    ctx.edges = hp_.all_edges();
    ctx.vertices = hp_.all_vertices();
    return find_ghd(ctx);
  }

 private:
  std::optional<BalTree> find_ghd(const SubproblemContext& ctx) {
    ctl_.poll();
    if (ctx.edges.empty() && ctx.special_edges.size() <= 2) {
      BalTree t;
      for (const auto& s : ctx.special_edges) {
        BalNode n;
        n.bag = s;
        n.special = true;
        n.special_set = s;
        if (!t.empty()) t[0].kids.push_back(t.size());
        t.push_back(std::move(n));
      }
      return t;
    }
    // Every recursion level places one node of some contracted reference
    // GHD, which has at most |V|+1 nodes; deeper derivations are redundant,
    // so the cap keeps the search finite without losing completeness.
    if (ctx.depth > max_depth_) {
      ++depth_prunes_;
      return std::nullopt;
    }
    BalKey key{ctx.edges, ctx.special_edges};
    if (fail_.count(key)) return std::nullopt;

    std::uint64_t prunes_before = depth_prunes_;
    auto result = search_separator(ctx);
    // A failure that involved a depth prune is relative to the remaining
    // budget and may not be recorded as absolute.
    if (!result && depth_prunes_ == prunes_before) fail_.insert(std::move(key));
    return result;
  }

  std::optional<BalTree> search_separator(const SubproblemContext& ctx) {
    // Separator candidates: non-special edges inside the subproblem's span.
    std::vector<std::size_t> cands;
    for (std::size_t e = 0; e < hp_.edge_count(); ++e)
      if (hp_.edge(e).is_subset_of(ctx.vertices)) cands.push_back(e);

    std::vector<std::size_t> chosen;
    for (int card = 1; card <= k_ && card <= static_cast<int>(cands.size());
         ++card) {
      auto r = combo(ctx, cands, chosen, VertexSet(hp_.vertex_count()), 0,
                     card);
      if (r) return r;
    }
    return std::nullopt;
  }

  std::optional<BalTree> combo(const SubproblemContext& ctx,
                               const std::vector<std::size_t>& cands,
                               std::vector<std::size_t>& chosen,
                               const VertexSet& bag, std::size_t start,
                               int remaining) {
    if (remaining == 0) return try_separator(ctx, chosen, bag);
    if (cands.size() - start < static_cast<std::size_t>(remaining))
      return std::nullopt;
    for (std::size_t i = start; i + remaining <= cands.size(); ++i) {
      chosen.push_back(cands[i]);
      auto r = combo(ctx, cands, chosen, bag | hp_.edge(cands[i]), i + 1,
                     remaining - 1);
      chosen.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  }

  std::optional<BalTree> try_separator(const SubproblemContext& ctx,
                                       const std::vector<std::size_t>& lambda,
                                       const VertexSet& bag) {
    ctl_.poll();
    for (const auto& s : ctx.special_edges)
      if (s == bag) return std::nullopt;  // B(lambda) must not be in Sp

    VertexSet region = ctx.vertices - bag;
    auto comps =
        components_of_region(hp_, ctx.edges, ctx.special_edges, region);
    std::size_t total = ctx.edges.count();
    for (const auto& comp : comps) {
      std::size_t cnt = 0;
      for (auto e : ctx.edges)
        if (hp_.edge(e).intersects(comp)) ++cnt;
      if (2 * cnt > total) return std::nullopt;  // not balanced
    }

    std::vector<BalTree> subtrees;
    for (const auto& comp : comps) {
      SubproblemContext child;
      child.edges = hp_.edges_meeting(comp);
      child.edges &= ctx.edges;
      child.vertices = hp_.vertices_of(child.edges);
      for (const auto& s : ctx.special_edges)
        if (s.intersects(comp)) {
          child.special_edges.push_back(s);
          child.vertices |= s;
        }
      child.special_edges.push_back(bag);
      child.vertices |= bag;
      child.depth = ctx.depth + 1;
      sort_specials(child.special_edges);
      auto r = find_ghd(child);
      if (!r) return std::nullopt;
      subtrees.push_back(std::move(*r));
    }

    // Assemble: new root u with B_u = B(lambda); each subtree is rerooted at
    // its leaf for B_u, which is then merged into u.
    BalTree out;
    BalNode u;
    u.bag = bag;
    for (auto e : lambda) u.cover.push_back({to_original_[e], Rational(1)});
    std::sort(u.cover.begin(), u.cover.end(),
              [](const CoverEntry& a, const CoverEntry& b) {
                return a.edge < b.edge;
              });
    u.cover.erase(std::unique(u.cover.begin(), u.cover.end(),
                              [](const CoverEntry& a, const CoverEntry& b) {
                                return a.edge == b.edge;
                              }),
                  u.cover.end());
    out.push_back(std::move(u));
    for (auto& t : subtrees) merge_subtree(out, t, bag);
    // Specials fully inside the bag become direct leaf children.
    for (const auto& s : ctx.special_edges) {
      if (!s.intersects(region)) {
        BalNode leaf;
        leaf.bag = s;
        leaf.special = true;
        leaf.special_set = s;
        out[0].kids.push_back(out.size());
        out.push_back(std::move(leaf));
      }
    }
    return out;
  }

  static void sort_specials(std::vector<VertexSet>& sp) {
    std::sort(sp.begin(), sp.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });
    sp.erase(std::unique(sp.begin(), sp.end()), sp.end());
  }

  // Reroots `t` at its special leaf for `bag` and grafts the leaf's
  // neighbours under out[0].
  static void merge_subtree(BalTree& out, const BalTree& t,
                            const VertexSet& bag) {
    std::size_t target = t.size();
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i].special && t[i].special_set == bag) {
        target = i;
        break;
      }
    if (target == t.size())
      throw std::logic_error("missing special leaf in balsep subtree");
    // Undirected adjacency, then re-hang everything from the target.
    std::vector<std::vector<std::size_t>> adj(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      for (auto c : t[i].kids) {
        adj[i].push_back(c);
        adj[c].push_back(i);
      }
    std::vector<std::size_t> remap(t.size(), 0);
    std::vector<bool> seen(t.size(), false);
    seen[target] = true;
    // BFS order keeps the merge deterministic.
    std::vector<std::pair<std::size_t, std::size_t>> queue;  // (node, parent out-index)
    for (auto n : adj[target]) queue.emplace_back(n, 0);
    std::size_t qi = 0;
    while (qi < queue.size()) {
      auto [i, parent_out] = queue[qi++];
      if (seen[i]) continue;
      seen[i] = true;
      remap[i] = out.size();
      BalNode n = t[i];
      n.kids.clear();
      out.push_back(std::move(n));
      out[parent_out].kids.push_back(remap[i]);
      for (auto nb : adj[i])
        if (!seen[nb]) queue.emplace_back(nb, remap[i]);
    }
  }

  const Hypergraph& hp_;
  std::vector<std::size_t> to_original_;
  int k_;
  RunControl& ctl_;
  int max_depth_;
  std::unordered_set<BalKey, BalKeyHash> fail_;
  std::uint64_t depth_prunes_ = 0;
};

}  // namespace

RunOutcome decide_ghw_balsep(const Hypergraph& h, int k,
                             const SearchOptions& opts) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (h.edge_count() == 0) throw std::invalid_argument("empty hypergraph");
  auto start = std::chrono::steady_clock::now();
  RunOutcome out;
  out.method = "balsep";
  auto finish = [&](RunStatus st) {
    out.status = st;
    out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return out;
  };

  Prepared p = prepare(h, opts);
  const Hypergraph& s = *p.s;

  RunControl ctl;
  ctl.deadline = std::chrono::steady_clock::now() + opts.timeout;
  ctl.stop = opts.stop;

  try {
    AugmentedHypergraph aug;
    std::vector<std::size_t> to_original;
    const Hypergraph* hp = nullptr;
    if (opts.plain_balsep) {
      hp = &s;
      to_original = p.to_original;
    } else {
      ClosureClock clock{ctl.deadline, /*enabled=*/true};
      auto closure = closure_over(s, s.all_edges(), k, opts.subedge_cap, clock);
      if (closure.cap_exceeded) {
        out.error = "subedge cap exceeded (" +
                    std::to_string(opts.subedge_cap) + ")";
        return finish(RunStatus::Error);
      }
      aug = augment(s, closure);
      hp = &aug.graph;
      for (auto parent : aug.parent_edge)
        to_original.push_back(p.to_original[parent]);
    }

    BalSepSearch search(*hp, to_original, k, ctl);
    auto tree = search.run();
    out.nodes_expanded = ctl.expansions;
    if (!tree) {
      // Without the augmentation a failed search proves nothing.
      return finish(opts.plain_balsep ? RunStatus::Unknown : RunStatus::No);
    }
    Decomposition d;
    d.kind = DecompKind::GHD;
    for (std::size_t i = 0; i < tree->size(); ++i) {
      if ((*tree)[i].special)
        throw std::logic_error("unconsumed special leaf in balsep result");
      DecompNode n;
      n.id = static_cast<int>(i);
      n.parent = -1;
      n.bag = (*tree)[i].bag;
      n.cover = (*tree)[i].cover;
      d.nodes.push_back(std::move(n));
    }
    for (std::size_t i = 0; i < tree->size(); ++i)
      for (auto c : (*tree)[i].kids)
        d.nodes[c].parent = static_cast<int>(i);
    out.witness = std::move(d);
    auto bad = check_ghd(h, *out.witness);
    if (!bad.empty())
      throw std::logic_error("balsep produced an invalid GHD:\n" +
                             describe(bad));
    if (width(*out.witness) > Rational(k))
      throw std::logic_error("balsep exceeded the width bound");
    return finish(RunStatus::Yes);
  } catch (const SearchCancelled&) {
    out.nodes_expanded = ctl.expansions;
    return finish(RunStatus::Timeout);
  }
}

RunOutcome portfolio_ghw(const Hypergraph& h, int k,
                         const SearchOptions& opts) {
  std::atomic<bool> stop{false};
  std::mutex mtx;
  RunOutcome winner;
  bool have_winner = false;
  std::vector<RunOutcome> losers;

  auto runner = [&](const char* name,
                    RunOutcome (*fn)(const Hypergraph&, int,
                                     const SearchOptions&)) {
    SearchOptions o = opts;
    o.stop = &stop;
    RunOutcome r;
    try {
      r = fn(h, k, o);
    } catch (const std::exception& e) {
      r.status = RunStatus::Error;
      r.error = e.what();
    }
    r.method = name;
    std::lock_guard<std::mutex> lock(mtx);
    if ((r.status == RunStatus::Yes || r.status == RunStatus::No) &&
        !have_winner) {
      winner = std::move(r);
      have_winner = true;
      stop.store(true, std::memory_order_relaxed);
    } else {
      losers.push_back(std::move(r));
    }
  };

  std::thread t1(runner, "global", decide_ghw_global);
  std::thread t2(runner, "local", decide_ghw_local);
  std::thread t3(runner, "balsep", decide_ghw_balsep);
  t1.join();
  t2.join();
  t3.join();

  if (have_winner) return winner;
  // No definite answer: a timeout if anyone timed out, else the first error.
  for (auto& l : losers)
    if (l.status == RunStatus::Timeout) return l;
  if (!losers.empty()) return losers.front();
  RunOutcome none;
  none.status = RunStatus::Timeout;
  return none;
}

}  // namespace hgdec
