#pragma once

#include <cstdint>

#include "riverput/ballots.hpp"
#include "riverput/graph.hpp"

namespace riverput {

// River diagram: a rooted tree over all alternatives, stored as ids into the
// margin graph's edge list in insertion order. Every edge points away from
// the root; the root is the unique vertex without an incoming edge.
struct RiverDiagram {
  int n = 0;
  int root = -1;
  std::vector<EdgeId> edges;
};

// Canonical default ordering: stable sort by (-margin, source id, target id).
DescendingOrdering lex_ordering(const MarginGraph& g);

// Canonical ordering with each tied-margin group shuffled by a seeded RNG.
// The descending invariant is preserved.
DescendingOrdering shuffled_ordering(const MarginGraph& g, std::uint64_t seed);

// Reference construction: walk o once, adding (x, y) unless y already has an
// incoming edge or y reaches x in the diagram built so far (checked by BFS).
// Throws std::invalid_argument when o does not cover E(g) exactly once or
// violates the descending invariant, or when g is malformed.
RiverDiagram river_naive(const MarginGraph& g, const DescendingOrdering& o);

// Same result as river_naive. The branching test is an in-edge flag per
// vertex; the cycle test is a same-component query on a disjoint-set forest
// over the subtrees built so far, valid because a vertex without an incoming
// edge is the root of its subtree. The forest is rebuilt per call.
RiverDiagram river_fast(const MarginGraph& g, const DescendingOrdering& o);

// river_fast over the canonical lex ordering.
RiverDiagram river_fast(const MarginGraph& g);

int river_winner(const RiverDiagram& d);

// Asserts the rooted-tree shape: n - 1 edges, in-degree <= 1 everywhere,
// exactly one vertex of in-degree 0, acyclic, spanning. Throws
// std::invalid_argument otherwise.
void validate_river_diagram(const MarginGraph& g, const RiverDiagram& d);

}  // namespace riverput
