#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "hgdec/ghd.hpp"
#include "support/oracles.hpp"
#include "support/random_hg.hpp"

using namespace hgdec;

namespace {

Hypergraph make(const std::string& text) { return parse_hypergraph(text); }

VertexSet verts(const Hypergraph& h, std::initializer_list<const char*> names) {
  VertexSet s(h.vertex_count());
  for (auto n : names) s.set(*h.vertex_index(n));
  return s;
}

const char* kTriangle = "ab(a,b), bc(b,c), ca(c,a).";
const char* kFourCycle = "ab(a,b), bc(b,c), cd(c,d), da(d,a).";

bool contains_set(const SubedgeSet& s, const VertexSet& v) {
  return std::any_of(s.items.begin(), s.items.end(),
                     [&](const Subedge& e) { return e.vertices == v; });
}

}  // namespace

TEST_CASE("subedge closure: spec example one") {
  auto h = make("abc(a,b,c), cd(c,d), be(b,e).");
  auto s = subedge_closure_global(h, 1, 100000);
  CHECK_FALSE(s.cap_exceeded);
  REQUIRE(s.items.size() == 2);
  CHECK(contains_set(s, verts(h, {"b"})));
  CHECK(contains_set(s, verts(h, {"c"})));
  for (const auto& it : s.items) CHECK(it.parent_edge == 0);  // lowest parent
}

TEST_CASE("subedge closure: disjoint edges give nothing") {
  auto h = make("e1(a,b), e2(c,d), e3(e,f).");
  for (int k = 1; k <= 3; ++k)
    CHECK(subedge_closure_global(h, k, 100000).items.empty());
}

TEST_CASE("subedge closure: power set of a two-vertex intersection") {
  auto h = make("e1(a,b,X), e2(a,c,X).");
  auto s = subedge_closure_global(h, 1, 100000);
  REQUIRE(s.items.size() == 3);
  CHECK(contains_set(s, verts(h, {"a"})));
  CHECK(contains_set(s, verts(h, {"X"})));
  CHECK(contains_set(s, verts(h, {"a", "X"})));
}

TEST_CASE("subedge closure: members never duplicate existing edges") {
  for (std::uint32_t seed = 0; seed < 30; ++seed) {
    auto h = testing::random_hypergraph(seed);
    auto s = subedge_closure_global(h, 2, 100000);
    for (const auto& it : s.items) {
      CHECK_FALSE(it.vertices.empty());
      CHECK(it.vertices.is_subset_of(h.edge(it.parent_edge)));
      CHECK(it.vertices != h.edge(it.parent_edge));
      for (std::size_t e = 0; e < h.edge_count(); ++e)
        CHECK(it.vertices != h.edge(e));
    }
  }
}

TEST_CASE("subedge cap is reported") {
  // eight 8-vertex edges sharing 7 vertices: unions blow past a small cap
  std::string text;
  for (int e = 0; e < 8; ++e) {
    text += "e" + std::to_string(e) + "(s1,s2,s3,s4,s5,s6,s7,x" +
            std::to_string(e) + "),";
  }
  text.back() = '.';
  auto h = make(text);
  auto s = subedge_closure_global(h, 3, 20);
  CHECK(s.cap_exceeded);
  SearchOptions opts;
  opts.subedge_cap = 20;
  auto r = decide_ghw_global(h, 3, opts);
  CHECK(r.status == RunStatus::Error);
  CHECK(r.error.find("cap") != std::string::npos);
}

TEST_CASE("ghw deciders on the triangle") {
  auto tri = make(kTriangle);
  for (auto* fn : {decide_ghw_global, decide_ghw_local, decide_ghw_balsep}) {
    auto yes = fn(tri, 2, {});
    REQUIRE(yes.status == RunStatus::Yes);
    CHECK(check_ghd(tri, *yes.witness).empty());
    CHECK(width(*yes.witness) <= Rational(2));
    CHECK(fn(tri, 1, {}).status == RunStatus::No);
  }
}

TEST_CASE("hw yes means ghw yes without subedges") {
  for (std::uint32_t seed = 40; seed < 60; ++seed) {
    auto h = testing::random_hypergraph(seed);
    for (int k = 1; k <= 3; ++k) {
      if (decide_hw(h, k).status == RunStatus::Yes) {
        CHECK(decide_ghw_global(h, k).status == RunStatus::Yes);
        break;
      }
    }
  }
}

TEST_CASE("is_balanced_separator spec cases") {
  auto h = make(kFourCycle);
  SubproblemContext ctx;
  ctx.edges = h.all_edges();
  ctx.vertices = h.all_vertices();

  EdgeSet lam1(h.edge_count());
  lam1.set(*h.edge_index("ab"));
  CHECK_FALSE(is_balanced_separator(h, ctx, lam1));  // one component, 3 > 2

  EdgeSet lam2 = lam1;
  lam2.set(*h.edge_index("cd"));
  CHECK(is_balanced_separator(h, ctx, lam2));  // no components at all

  auto p = make("ab(a,b), bc(b,c), cd(c,d), de(d,e).");
  SubproblemContext pctx;
  pctx.edges = p.all_edges();
  pctx.vertices = p.all_vertices();
  EdgeSet lam3(p.edge_count());
  lam3.set(*p.edge_index("bc"));
  CHECK(is_balanced_separator(p, pctx, lam3));  // components {a} and {d,e}
}

TEST_CASE("balsep on the four-cycle") {
  auto cyc = make(kFourCycle);
  CHECK(decide_ghw_balsep(cyc, 1).status == RunStatus::No);
  auto yes = decide_ghw_balsep(cyc, 2);
  REQUIRE(yes.status == RunStatus::Yes);
  CHECK(check_ghd(cyc, *yes.witness).empty());
  CHECK(width(*yes.witness) <= Rational(2));
}

TEST_CASE("plain balsep downgrades no-answers to unknown") {
  auto cyc = make(kFourCycle);
  SearchOptions opts;
  opts.plain_balsep = true;
  CHECK(decide_ghw_balsep(cyc, 1, opts).status == RunStatus::Unknown);
  CHECK(decide_ghw_balsep(cyc, 2, opts).status == RunStatus::Yes);
}

TEST_CASE("three deciders match the ghw oracle") {
  for (std::uint32_t seed = 0; seed < 40; ++seed) {
    auto h = testing::random_hypergraph(seed);
    int truth = testing::brute_force_ghw(h);
    for (int k = 1; k <= 3; ++k) {
      bool expect = k >= truth;
      INFO("seed ", seed, " k ", k, " truth ", truth, " hg ",
           serialize_hypergraph(h));
      auto g = decide_ghw_global(h, k);
      auto l = decide_ghw_local(h, k);
      auto b = decide_ghw_balsep(h, k);
      REQUIRE(g.status != RunStatus::Error);
      CHECK((g.status == RunStatus::Yes) == expect);
      CHECK((l.status == RunStatus::Yes) == expect);
      CHECK((b.status == RunStatus::Yes) == expect);
      for (auto* r : {&g, &l, &b})
        if (r->status == RunStatus::Yes) {
          CHECK(check_ghd(h, *r->witness).empty());
          CHECK(width(*r->witness) <= Rational(k));
        }
    }
  }
}

TEST_CASE("balanced separator exists whenever ghw <= k (proposition)") {
  for (std::uint32_t seed = 60; seed < 90; ++seed) {
    auto h = testing::random_hypergraph(seed);
    int truth = testing::brute_force_ghw(h);
    auto aug = augment(h, subedge_closure_global(h, truth, 100000));
    SubproblemContext ctx;
    ctx.edges = aug.graph.all_edges();
    ctx.vertices = aug.graph.all_vertices();
    bool found = false;
    std::vector<std::size_t> idx;
    std::function<void(std::size_t, int, EdgeSet)> rec =
        [&](std::size_t start, int remaining, EdgeSet lam) {
          if (found) return;
          if (remaining == 0) {
            found = is_balanced_separator(aug.graph, ctx, lam);
            return;
          }
          for (std::size_t e = start;
               e + remaining <= aug.graph.edge_count() && !found; ++e) {
            EdgeSet next = lam;
            next.set(e);
            rec(e + 1, remaining - 1, next);
          }
        };
    for (int card = 1; card <= truth && !found; ++card)
      rec(0, card, EdgeSet(aug.graph.edge_count()));
    CHECK(found);
  }
}

TEST_CASE("projection keeps covers inside the original edge set") {
  for (std::uint32_t seed = 90; seed < 110; ++seed) {
    auto h = testing::random_hypergraph(seed);
    int truth = testing::brute_force_ghw(h);
    auto r = decide_ghw_global(h, truth);
    REQUIRE(r.status == RunStatus::Yes);
    for (const auto& n : r.witness->nodes) {
      CHECK(n.cover.size() <= static_cast<std::size_t>(truth));
      for (const auto& [e, w] : n.cover) {
        CHECK(e < h.edge_count());
        CHECK(w == Rational(1));
      }
    }
  }
}

TEST_CASE("portfolio returns a validated answer and its winner") {
  auto tri = make(kTriangle);
  auto r = portfolio_ghw(tri, 2);
  REQUIRE(r.status == RunStatus::Yes);
  CHECK((r.method == "global" || r.method == "local" || r.method == "balsep"));
  CHECK(check_ghd(tri, *r.witness).empty());
  auto no = portfolio_ghw(tri, 1);
  CHECK(no.status == RunStatus::No);
  // all three time out -> timeout
  std::string text;
  for (int i = 0; i < 28; ++i) {
    int j = (i + 1) % 28, l = (i + 9) % 28;
    text += "e" + std::to_string(i) + "(v" + std::to_string(i) + ",v" +
            std::to_string(j) + ",v" + std::to_string(l) + "),";
  }
  text.back() = '.';
  auto big = make(text);
  SearchOptions opts;
  opts.timeout = std::chrono::milliseconds(30);
  auto t = portfolio_ghw(big, 3, opts);
  CHECK(t.status == RunStatus::Timeout);
}
