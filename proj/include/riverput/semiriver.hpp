#pragma once

#include "riverput/ballots.hpp"
#include "riverput/graph.hpp"

namespace riverput {

// Union of every River diagram reachable through some descending ordering,
// or a superset of it. Backed by a WeightedDigraph whose weights are the
// margins; the digraph keeps the transpose, which the condition checks need.
class SemiRiverDiagram {
 public:
  explicit SemiRiverDiagram(int n) : g_(n) {}

  static SemiRiverDiagram from_edges(int n,
                                     const std::vector<MarginEdge>& edges);

  void add_edge(const MarginEdge& e) { g_.add_edge(e.from, e.to, e.margin); }

  int num_vertices() const { return g_.num_vertices(); }
  int num_edges() const { return g_.num_edges(); }
  const WeightedDigraph& digraph() const { return g_; }

 private:
  WeightedDigraph g_;
};

// Branching condition for e = (x, y) against the accepted edges of strictly
// higher margin: some in-edge e' = (z, y) of d admits no path from y back to
// z using only edges of margin >= m(e'). Pre: d holds exactly the accepted
// edges with margin > m(e).
bool cond_branching(const MarginEdge& e, const SemiRiverDiagram& d);

// Cycle condition for e = (x, y): the ancestors of x up to y in d induce a
// DAG whose only source is y. False when y is not among those ancestors.
bool cond_cycle(const MarginEdge& e, const SemiRiverDiagram& d);

// Processes margin groups in strictly descending order; within a group every
// edge is tested against the same accepted-so-far diagram, so the order
// inside a group cannot matter. O(n^5) overall.
SemiRiverDiagram semi_river(const MarginGraph& g);

}  // namespace riverput
