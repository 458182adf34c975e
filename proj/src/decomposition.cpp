#include "hgdec/decomposition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hgdec {

EdgeCover make_cover(const Hypergraph& h, std::vector<CoverEntry> entries) {
  EdgeCover c;
  c.entries = std::move(entries);
  c.total = Rational(0);
  c.covered = VertexSet(h.vertex_count());
  std::vector<Rational> load(h.vertex_count(), Rational(0));
  for (const auto& [e, w] : c.entries) {
    if (e >= h.edge_count()) throw std::out_of_range("cover edge index");
    c.total += w;
    for (auto v : h.edge(e)) load[v] += w;
  }
  for (std::size_t v = 0; v < load.size(); ++v)
    if (load[v] >= Rational(1)) c.covered.set(v);
  return c;
}

Rational width(const Decomposition& d) {
  if (d.nodes.empty())
    throw std::invalid_argument("width of empty decomposition");
  Rational w(0);
  for (const auto& n : d.nodes) {
    Rational t(0);
    for (const auto& ce : n.cover) t += ce.weight;
    if (w < t) w = t;
  }
  return w;
}

std::string describe(const std::vector<Violation>& vs) {
  std::string out;
  for (const auto& v : vs) {
    out += "condition (" + std::to_string(v.condition) + ")";
    if (v.node >= 0) out += " at node " + std::to_string(v.node);
    out += ": " + v.detail + "\n";
  }
  return out;
}

namespace {

struct TreeIndex {
  std::unordered_map<int, std::size_t> by_id;
  std::vector<std::vector<std::size_t>> children;  // by position
  std::size_t root = 0;
};

TreeIndex index_tree(const Decomposition& d) {
  TreeIndex t;
  if (d.nodes.empty()) throw std::invalid_argument("empty decomposition");
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    if (!t.by_id.emplace(d.nodes[i].id, i).second)
      throw std::invalid_argument("duplicate node id " +
                                  std::to_string(d.nodes[i].id));
  }
  t.children.resize(d.nodes.size());
  int roots = 0;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    int p = d.nodes[i].parent;
    if (p < 0) {
      ++roots;
      t.root = i;
      continue;
    }
    auto it = t.by_id.find(p);
    if (it == t.by_id.end())
      throw std::invalid_argument("dangling parent id " + std::to_string(p));
    t.children[it->second].push_back(i);
  }
  if (roots != 1)
    throw std::invalid_argument("decomposition must have exactly one root");
  // Reachability from the root rules out parent cycles.
  std::vector<bool> seen(d.nodes.size(), false);
  std::vector<std::size_t> stack{t.root};
  std::size_t reached = 0;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    if (seen[i]) continue;
    seen[i] = true;
    ++reached;
    for (auto c : t.children[i]) stack.push_back(c);
  }
  if (reached != d.nodes.size())
    throw std::invalid_argument("decomposition tree is not connected");
  return t;
}

void check_weights(const Decomposition& d, bool integral) {
  for (const auto& n : d.nodes) {
    for (const auto& [e, w] : n.cover) {
      if (integral && w != Rational(1))
        throw std::invalid_argument("cover weight " + w.to_string() +
                                    " not 1 at node " + std::to_string(n.id));
      if (!integral && (w < Rational(0) || w > Rational(1)))
        throw std::invalid_argument("cover weight " + w.to_string() +
                                    " outside [0,1] at node " +
                                    std::to_string(n.id));
    }
  }
}

// Conditions (1), (2) and (3)/(3'); shared by all three checkers.
std::vector<Violation> check_base(const Hypergraph& h, const Decomposition& d,
                                  const TreeIndex& t) {
  std::vector<Violation> out;
  // (1) every edge inside some bag
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    bool covered = false;
    for (const auto& n : d.nodes)
      if (h.edge(e).is_subset_of(n.bag)) {
        covered = true;
        break;
      }
    if (!covered)
      out.push_back({1, -1, "edge " + h.edge_name(e) + " in no bag"});
  }
  // (2) nodes holding a vertex form a connected subtree
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    std::size_t holders = 0, top = Bitset::npos;
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
      if (d.nodes[i].bag.test(v)) ++holders;
    if (holders == 0) continue;
    // Count nodes whose parent also holds v; a connected occurrence set has
    // exactly one holder without a holding parent.
    std::size_t components = 0;
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
      if (!d.nodes[i].bag.test(v)) continue;
      int p = d.nodes[i].parent;
      bool parent_holds = false;
      if (p >= 0) {
        auto pi = t.by_id.at(p);
        parent_holds = d.nodes[pi].bag.test(v);
      }
      if (!parent_holds) {
        ++components;
        top = i;
      }
    }
    (void)top;
    if (components > 1)
      out.push_back({2, -1, "vertex " + h.vertex_name(v) + " occurs in " +
                                std::to_string(components) +
                                " disconnected regions"});
  }
  // (3)/(3') bag covered by the node's edge weights
  for (const auto& n : d.nodes) {
    EdgeCover c = make_cover(h, n.cover);
    if (!n.bag.is_subset_of(c.covered)) {
      VertexSet missing = n.bag - c.covered;
      std::string names;
      for (auto v : missing) {
        if (!names.empty()) names += ",";
        names += h.vertex_name(v);
      }
      out.push_back({3, n.id, "bag vertices {" + names + "} not covered"});
    }
  }
  return out;
}

}  // namespace

std::vector<Violation> check_ghd(const Hypergraph& h, const Decomposition& d) {
  auto t = index_tree(d);
  check_weights(d, /*integral=*/true);
  return check_base(h, d, t);
}

std::vector<Violation> check_hd(const Hypergraph& h, const Decomposition& d) {
  auto t = index_tree(d);
  check_weights(d, /*integral=*/true);
  auto out = check_base(h, d, t);
  // (4) V(T_u) ∩ B(λ_u) ⊆ B_u, bottom-up over subtree bag unions
  std::vector<VertexSet> subtree(d.nodes.size());
  // Children before parents: process in reverse topological order via DFS.
  std::vector<std::size_t> order;
  std::vector<std::size_t> stack{t.root};
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    order.push_back(i);
    for (auto c : t.children[i]) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto i = *it;
    subtree[i] = d.nodes[i].bag;
    for (auto c : t.children[i]) subtree[i] |= subtree[c];
  }
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    EdgeCover c = make_cover(h, d.nodes[i].cover);
    VertexSet bad = c.covered & subtree[i];
    bad -= d.nodes[i].bag;
    if (bad.any()) {
      std::string names;
      for (auto v : bad) {
        if (!names.empty()) names += ",";
        names += h.vertex_name(v);
      }
      out.push_back({4, d.nodes[i].id,
                     "label vertices {" + names +
                         "} occur in the subtree but not in the bag"});
    }
  }
  return out;
}

std::vector<Violation> check_fhd(const Hypergraph& h, const Decomposition& d) {
  auto t = index_tree(d);
  check_weights(d, /*integral=*/false);
  return check_base(h, d, t);
}

Decomposition parse_decomposition(std::string_view text, const Hypergraph& h) {
  Decomposition d;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool fractional = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed;
    for (char c : line) {
      if (c == '%') break;
      trimmed += c;
    }
    std::istringstream ls(trimmed);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw != "node")
      throw ParseError("expected 'node'", lineno, 1);
    DecompNode n;
    if (!(ls >> n.id)) throw ParseError("expected node id", lineno, 1);
    std::string rest;
    std::getline(ls, rest);
    auto field = [&](const std::string& key) -> std::string {
      auto p = rest.find(key + "=");
      if (p == std::string::npos)
        throw ParseError("missing '" + key + "='", lineno, 1);
      p += key.size() + 1;
      if (p < rest.size() && rest[p] == '{') {
        auto q = rest.find('}', p);
        if (q == std::string::npos)
          throw ParseError("unterminated '{'", lineno, 1);
        return rest.substr(p + 1, q - p - 1);
      }
      auto q = rest.find_first_of(" \t", p);
      return rest.substr(p, q == std::string::npos ? q : q - p);
    };
    std::string parent = field("parent");
    n.parent = parent == "-" ? -1 : std::stoi(parent);
    n.bag = VertexSet(h.vertex_count());
    auto split = [](const std::string& s) {
      std::vector<std::string> out;
      std::string cur;
      for (char c : s) {
        if (c == ',') {
          if (!cur.empty()) out.push_back(cur);
          cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
          cur += c;
        }
      }
      if (!cur.empty()) out.push_back(cur);
      return out;
    };
    for (const auto& vn : split(field("bag"))) {
      auto v = h.vertex_index(vn);
      if (!v) throw ParseError("unknown vertex '" + vn + "'", lineno, 1);
      n.bag.set(*v);
    }
    for (const auto& item : split(field("cover"))) {
      std::string ename = item;
      Rational w(1);
      auto eq = item.find('=');
      if (eq != std::string::npos) {
        ename = item.substr(0, eq);
        w = Rational::from_double(std::stod(item.substr(eq + 1)));
      }
      auto e = h.edge_index(ename);
      if (!e) throw ParseError("unknown edge '" + ename + "'", lineno, 1);
      if (w != Rational(1)) fractional = true;
      n.cover.push_back({*e, w});
    }
    d.nodes.push_back(std::move(n));
  }
  d.kind = fractional ? DecompKind::FHD : DecompKind::GHD;
  index_tree(d);  // structural validation
  return d;
}

std::string serialize_decomposition(const Decomposition& d,
                                    const Hypergraph& h) {
  std::string out;
  auto nodes = d.nodes;
  std::sort(nodes.begin(), nodes.end(),
            [](const DecompNode& a, const DecompNode& b) { return a.id < b.id; });
  for (const auto& n : nodes) {
    out += "node " + std::to_string(n.id) + " parent=";
    out += n.parent < 0 ? "-" : std::to_string(n.parent);
    out += " bag={";
    bool first = true;
    for (auto v : n.bag) {
      if (!first) out += ",";
      out += h.vertex_name(v);
      first = false;
    }
    out += "} cover={";
    auto cover = n.cover;
    std::sort(cover.begin(), cover.end(),
              [](const CoverEntry& a, const CoverEntry& b) {
                return a.edge < b.edge;
              });
    first = true;
    for (const auto& [e, w] : cover) {
      if (!first) out += ",";
      out += h.edge_name(e);
      if (w != Rational(1)) out += "=" + w.to_decimal(6);
      first = false;
    }
    out += "}\n";
  }
  return out;
}

Decomposition rerooted(const Decomposition& d, int new_root_id) {
  auto t = index_tree(d);
  auto it = t.by_id.find(new_root_id);
  if (it == t.by_id.end())
    throw std::invalid_argument("unknown node id " +
                                std::to_string(new_root_id));
  Decomposition out = d;
  // Flip parent links along the path from the new root up to the old root.
  std::size_t cur = it->second;
  int prev_id = -1;
  while (true) {
    int old_parent = d.nodes[cur].parent;
    out.nodes[cur].parent = prev_id;
    if (old_parent < 0) break;
    prev_id = d.nodes[cur].id;
    cur = t.by_id.at(old_parent);
  }
  return out;
}

}  // namespace hgdec
