#include "hgdec/frac.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "engine.hpp"
#include "hgdec/lp.hpp"

namespace hgdec {

namespace {

constexpr double kTol = 1e-6;

std::vector<CoverEntry> snap_entries(const std::vector<std::size_t>& edges,
                                     const std::vector<double>& x) {
  std::vector<CoverEntry> entries;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (x[j] < 1e-9) continue;
    entries.push_back({edges[j], Rational::from_double(std::min(x[j], 1.0))});
  }
  return entries;
}

}  // namespace

FracCover lp_min_cover(const Hypergraph& h, const VertexSet& target,
                       const std::optional<EdgeSet>& support) {
  if (target.empty()) throw std::invalid_argument("empty cover target");
  EdgeSet sup = support ? *support : h.all_edges();
  std::vector<std::size_t> edges;
  for (auto e : sup) edges.push_back(e);

  for (auto v : target) {
    bool coverable = false;
    for (auto e : edges)
      if (h.edge(e).test(v)) {
        coverable = true;
        break;
      }
    if (!coverable)
      throw InfeasibleCover("vertex " + h.vertex_name(v) +
                            " lies in no support edge");
  }

  LinearProgram lp;
  lp.objective.assign(edges.size(), 1.0);
  lp.upper.assign(edges.size(), 1.0);
  for (auto v : target) {
    LpRow row;
    row.coeffs.assign(edges.size(), 0.0);
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (h.edge(edges[j]).test(v)) row.coeffs[j] = 1.0;
    row.sense = '>';
    row.rhs = 1.0;
    lp.rows.push_back(std::move(row));
  }
  auto sol = lp_solve(lp);
  if (sol.status != LpSolution::Status::Optimal)
    throw InfeasibleCover("covering program unexpectedly infeasible");

  FracCover out;
  out.optimal = true;
  auto entries = snap_entries(edges, sol.x);
  out.cover = make_cover(h, entries);
  if (!target.is_subset_of(out.cover.covered)) {
    // Snap noise pushed some vertex below 1; re-snap on the 1e-6 grid,
    // rounding up.
    for (auto& ce : out.cover.entries) ce.weight = Rational(0);
    entries.clear();
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (sol.x[j] < 1e-9) continue;
      auto up = static_cast<std::int64_t>(std::ceil(sol.x[j] * 1e6 - 1e-9));
      entries.push_back({edges[j], Rational(std::min<std::int64_t>(up, 1000000), 1000000)});
    }
    out.cover = make_cover(h, entries);
    if (!target.is_subset_of(out.cover.covered))
      throw std::logic_error("cover snapping lost feasibility");
  }
  return out;
}

Decomposition simple_improve(const Hypergraph& h, const Decomposition& d) {
  std::vector<Violation> bad;
  switch (d.kind) {
    case DecompKind::HD: bad = check_hd(h, d); break;
    case DecompKind::GHD: bad = check_ghd(h, d); break;
    case DecompKind::FHD:
      throw std::invalid_argument("simple_improve expects an HD or GHD");
  }
  if (!bad.empty())
    throw std::invalid_argument("invalid decomposition:\n" + describe(bad));

  Decomposition out = d;
  out.kind = DecompKind::FHD;
  for (auto& n : out.nodes) {
    if (n.bag.empty()) {
      n.cover.clear();
      continue;
    }
    n.cover = lp_min_cover(h, n.bag).cover.entries;
  }
  auto check = check_fhd(h, out);
  if (!check.empty())
    throw std::logic_error("fractional improvement broke validity:\n" +
                           describe(check));
  return out;
}

RunOutcome frac_improve_search(const Hypergraph& h, int k, double k_prime,
                               const SearchOptions& opts) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k_prime <= 0 || k_prime >= k)
    throw std::invalid_argument("need 0 < k' < k");
  if (h.edge_count() == 0) throw std::invalid_argument("empty hypergraph");
  auto start = std::chrono::steady_clock::now();
  RunOutcome out;
  out.method = "fracimprove";
  auto finish = [&](RunStatus st) {
    out.status = st;
    out.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return out;
  };

  SimplifiedHypergraph simp;
  const Hypergraph* s = &h;
  std::vector<std::size_t> to_original(h.edge_count());
  for (std::size_t e = 0; e < h.edge_count(); ++e) to_original[e] = e;
  if (opts.simplify) {
    simp = simplify(h);
    s = &simp.graph;
    to_original = simp.original_edge;
  }

  struct BagCover {
    double weight;
    std::vector<CoverEntry> entries;  // over the simplified edge space
  };
  std::unordered_map<VertexSet, BagCover> lp_memo;
  auto bag_cover = [&](const VertexSet& bag) -> const BagCover& {
    auto it = lp_memo.find(bag);
    if (it != lp_memo.end()) return it->second;
    BagCover bc;
    if (bag.empty()) {
      bc.weight = 0;
    } else {
      auto fc = lp_min_cover(*s, bag);
      bc.weight = fc.cover.total.to_double();
      bc.entries = fc.cover.entries;
    }
    return lp_memo.emplace(bag, std::move(bc)).first->second;
  };

  detail::RunControl ctl;
  ctl.deadline = std::chrono::steady_clock::now() + opts.timeout;
  ctl.stop = opts.stop;
  detail::Engine engine(
      *s, k,
      [&, s](const EdgeSet&, const VertexSet& span,
             std::vector<detail::Candidate>& cands) {
        EdgeSet rel = s->edges_meeting(span);
        for (auto e : rel) cands.push_back({s->edge(e), to_original[e]});
      },
      ctl);
  engine.set_bag_filter([&](const VertexSet& bag) {
    return bag_cover(bag).weight <= k_prime + kTol;
  });
  if (opts.shuffle_seed) engine.set_shuffle_seed(*opts.shuffle_seed);

  try {
    auto d = engine.run();
    out.nodes_expanded = ctl.expansions;
    if (!d) return finish(RunStatus::No);
    // Replace the integral covers by the fractional bag covers.
    Decomposition fhd = std::move(*d);
    fhd.kind = DecompKind::FHD;
    for (auto& n : fhd.nodes) {
      const auto& bc = bag_cover(n.bag);
      n.cover.clear();
      for (const auto& [e, w] : bc.entries)
        n.cover.push_back({to_original[e], w});
      std::sort(n.cover.begin(), n.cover.end(),
                [](const CoverEntry& a, const CoverEntry& b) {
                  return a.edge < b.edge;
                });
    }
    auto bad = check_fhd(h, fhd);
    if (!bad.empty())
      throw std::logic_error("improved FHD is invalid:\n" + describe(bad));
    if (width(fhd).to_double() > k_prime + 2 * kTol)
      throw std::logic_error("improved FHD exceeds k'");
    out.witness = std::move(fhd);
    return finish(RunStatus::Yes);
  } catch (const detail::SearchCancelled&) {
    out.nodes_expanded = ctl.expansions;
    return finish(RunStatus::Timeout);
  }
}

std::string to_string(ImproveBucket b) {
  switch (b) {
    case ImproveBucket::AtLeastOne: return ">=1";
    case ImproveBucket::HalfToOne: return "[0.5,1)";
    case ImproveBucket::TenthToHalf: return "[0.1,0.5)";
    case ImproveBucket::None: return "no";
  }
  return "no";
}

BucketOutcome improvement_bucket(const Hypergraph& h, int k,
                                 const SearchOptions& opts) {
  BucketOutcome out;
  const double deltas[] = {1.0, 0.5, 0.1};
  const ImproveBucket buckets[] = {ImproveBucket::AtLeastOne,
                                   ImproveBucket::HalfToOne,
                                   ImproveBucket::TenthToHalf};
  for (int i = 0; i < 3; ++i) {
    double k_prime = k - deltas[i];
    if (k_prime <= 0) {
      out.thresholds.emplace_back(k_prime, RunStatus::No);
      continue;
    }
    auto r = frac_improve_search(h, k, k_prime, opts);
    out.thresholds.emplace_back(k_prime, r.status);
    if (r.status == RunStatus::Yes) {
      out.bucket = buckets[i];
      return out;
    }
    if (r.status == RunStatus::Timeout) out.timed_out = true;
  }
  out.bucket = ImproveBucket::None;
  return out;
}

}  // namespace hgdec
