#include "riverput/semiriver.hpp"

#include <algorithm>
#include <deque>

namespace riverput {

SemiRiverDiagram SemiRiverDiagram::from_edges(
    int n, const std::vector<MarginEdge>& edges) {
  SemiRiverDiagram d(n);
  for (const MarginEdge& e : edges) d.add_edge(e);
  return d;
}

namespace {

// BFS from `source` over edges of weight >= threshold; true iff it reaches
// `target`. This is reachability inside the sub-diagram d_{>= threshold}.
bool reaches_at_least(const WeightedDigraph& g, int source, int target,
                      long long threshold) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::deque<int> queue;
  seen[source] = 1;
  queue.push_back(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == target) return true;
    for (EdgeId id : g.out_edges(v)) {
      const DigraphEdge& e = g.edge(id);
      if (e.weight >= threshold && !seen[e.to]) {
        seen[e.to] = 1;
        queue.push_back(e.to);
      }
    }
  }
  return false;
}

}  // namespace

bool cond_branching(const MarginEdge& e, const SemiRiverDiagram& d) {
  const WeightedDigraph& g = d.digraph();
  for (EdgeId id : g.in_edges(e.to)) {
    const DigraphEdge& prior = g.edge(id);  // (z, y), margin > m(e)
    if (!reaches_at_least(g, e.to, prior.from, prior.weight)) return true;
  }
  return false;
}

bool cond_cycle(const MarginEdge& e, const SemiRiverDiagram& d) {
  std::vector<int> anc = ancestors_up_to(d.digraph(), e.from, e.to);
  return is_dag_unique_source(d.digraph(), anc, e.to);
}

SemiRiverDiagram semi_river(const MarginGraph& g) {
  validate_margin_graph(g);

  std::vector<EdgeId> ids(g.edges.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<EdgeId>(i);
  std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
    if (g.edges[a].margin != g.edges[b].margin)
      return g.edges[a].margin > g.edges[b].margin;
    return a < b;
  });

  SemiRiverDiagram d(g.n);
  std::size_t start = 0;
  while (start < ids.size()) {
    std::size_t stop = start + 1;
    while (stop < ids.size() &&
           g.edges[ids[stop]].margin == g.edges[ids[start]].margin)
      ++stop;
    // The whole group is judged against the strictly-higher diagram before
    // any member lands, which is what makes in-group order irrelevant.
    std::vector<EdgeId> survivors;
    for (std::size_t i = start; i < stop; ++i) {
      const MarginEdge& e = g.edges[ids[i]];
      if (!cond_branching(e, d) && !cond_cycle(e, d))
        survivors.push_back(ids[i]);
    }
    for (EdgeId id : survivors) d.add_edge(g.edges[id]);
    start = stop;
  }
  return d;
}

}  // namespace riverput
