#include "hgdec/search.hpp"

#include <stdexcept>

#include "engine.hpp"

namespace hgdec {

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Yes: return "yes";
    case RunStatus::No: return "no";
    case RunStatus::Timeout: return "timeout";
    case RunStatus::Unknown: return "unknown";
    case RunStatus::Error: return "error";
  }
  return "error";
}

namespace {

using detail::Candidate;
using detail::Engine;
using detail::RunControl;
using detail::SearchCancelled;

detail::RunControl make_control(const SearchOptions& opts) {
  RunControl ctl;
  ctl.deadline = std::chrono::steady_clock::now() + opts.timeout;
  ctl.stop = opts.stop;
  return ctl;
}

// Join tree of an acyclic hypergraph as a width-1 HD: one node per edge,
// bag = the full edge. Forest roots beyond the first chain under it.
Decomposition hd_from_gyo(const Hypergraph& h,
                          const std::vector<std::size_t>& parents,
                          const std::vector<std::size_t>& to_original) {
  Decomposition d;
  d.kind = DecompKind::HD;
  int first_root = -1;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    DecompNode n;
    n.id = static_cast<int>(e);
    n.bag = h.edge(e);
    n.cover = {{to_original[e], Rational(1)}};
    if (parents[e] != Bitset::npos) {
      n.parent = static_cast<int>(parents[e]);
    } else if (first_root < 0) {
      first_root = n.id;
      n.parent = -1;
    } else {
      n.parent = first_root;
    }
    d.nodes.push_back(std::move(n));
  }
  return d;
}

}  // namespace

RunOutcome decide_hw(const Hypergraph& h, int k, const SearchOptions& opts) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (h.edge_count() == 0) throw std::invalid_argument("empty hypergraph");
  auto start = std::chrono::steady_clock::now();
  RunOutcome out;
  out.method = "hd";

  SimplifiedHypergraph simp;
  const Hypergraph* s = &h;
  std::vector<std::size_t> to_original(h.edge_count());
  for (std::size_t e = 0; e < h.edge_count(); ++e) to_original[e] = e;
  if (opts.simplify) {
    simp = simplify(h);
    s = &simp.graph;
    to_original = simp.original_edge;
  }

  auto finish = [&](RunStatus st) {
    out.status = st;
    out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return out;
  };

  if (k == 1) {
    auto parents = gyo_parents(*s);
    if (!parents) return finish(RunStatus::No);
    out.witness = hd_from_gyo(*s, *parents, to_original);
    if (!check_hd(h, *out.witness).empty())
      throw std::logic_error("gyo produced an invalid join tree");
    return finish(RunStatus::Yes);
  }

  RunControl ctl = make_control(opts);
  Engine engine(
      *s, k,
      [&, s](const EdgeSet&, const VertexSet& span,
             std::vector<Candidate>& cands) {
        EdgeSet rel = s->edges_meeting(span);
        for (auto e : rel) cands.push_back({s->edge(e), to_original[e]});
      },
      ctl);
  if (opts.shuffle_seed) engine.set_shuffle_seed(*opts.shuffle_seed);

  try {
    auto d = engine.run();
    out.nodes_expanded = ctl.expansions;
    if (!d) return finish(RunStatus::No);
    out.witness = std::move(*d);
    auto bad = check_hd(h, *out.witness);
    if (!bad.empty())
      throw std::logic_error("search produced an invalid HD:\n" +
                             describe(bad));
    if (width(*out.witness) > Rational(k))
      throw std::logic_error("search exceeded the width bound");
    return finish(RunStatus::Yes);
  } catch (const SearchCancelled&) {
    out.nodes_expanded = ctl.expansions;
    return finish(RunStatus::Timeout);
  }
}

WidthBounds compute_hw(const Hypergraph& h, int k_max,
                       const SearchOptions& opts) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  WidthBounds b;
  for (int k = 1; k <= k_max; ++k) {
    auto r = decide_hw(h, k, opts);
    b.per_k.emplace_back(k, r.status);
    if (r.status == RunStatus::Yes) {
      b.upper = k;
      b.witness = std::move(r.witness);
      break;
    }
    if (r.status == RunStatus::No) b.lower = k + 1;
  }
  return b;
}

}  // namespace hgdec
