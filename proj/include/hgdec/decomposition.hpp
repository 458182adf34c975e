#pragma once

#include <string>
#include <vector>

#include "hgdec/bitset.hpp"
#include "hgdec/hypergraph.hpp"
#include "hgdec/rational.hpp"

namespace hgdec {

enum class DecompKind { HD, GHD, FHD };

struct CoverEntry {
  std::size_t edge;
  Rational weight;
};

// Weighted edge selection at one node, with the vertex set it covers
// (coordinates where the weight sum reaches 1) and the total weight.
struct EdgeCover {
  std::vector<CoverEntry> entries;
  VertexSet covered;
  Rational total;
};

EdgeCover make_cover(const Hypergraph& h, std::vector<CoverEntry> entries);

struct DecompNode {
  int id = 0;
  int parent = -1;  // -1 marks the root
  VertexSet bag;
  std::vector<CoverEntry> cover;
};

// Rooted decomposition tree over a hypergraph's edge/vertex index space.
// For HD/GHD kinds all cover weights are exactly 1.
struct Decomposition {
  DecompKind kind = DecompKind::GHD;
  std::vector<DecompNode> nodes;
};

// Maximum cover weight over all nodes; throws on an empty decomposition.
Rational width(const Decomposition& d);

struct Violation {
  int condition;  // 1, 2, 3 (also 3'), 4
  int node;       // offending node id, -1 if global
  std::string detail;
};

std::string describe(const std::vector<Violation>& v);

// Validators for the three decomposition classes. Violations are collected
// exhaustively. Structural defects (no tree, bad edge index, weight outside
// the kind's range) throw instead.
std::vector<Violation> check_ghd(const Hypergraph& h, const Decomposition& d);
std::vector<Violation> check_hd(const Hypergraph& h, const Decomposition& d);
std::vector<Violation> check_fhd(const Hypergraph& h, const Decomposition& d);

// One node per line: `node <id> parent=<id|-> bag={v,...} cover={e=w,...}`.
// Weight omitted means 1; weights print with at most six decimals, exactly
// for integral covers. Line order is free on input, canonical on output.
Decomposition parse_decomposition(std::string_view text, const Hypergraph& h);
std::string serialize_decomposition(const Decomposition& d,
                                    const Hypergraph& h);

// Same nodes with parent links flipped so new_root_id becomes the root.
Decomposition rerooted(const Decomposition& d, int new_root_id);

}  // namespace hgdec
