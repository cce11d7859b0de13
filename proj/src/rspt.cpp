#include "riverput/rspt.hpp"

#include <queue>

namespace riverput {

namespace {

struct QueueEntry {
  long long weight;
  int from;
  int to;
  EdgeId id;
};

// Max-weight first; among equal weights the policy picks which (from, to)
// pair wins. std::priority_queue pops the largest under this "less than".
struct EntryLess {
  PrimTieBreak tie;

  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.weight != b.weight) return a.weight < b.weight;
    auto ka = std::make_pair(a.from, a.to);
    auto kb = std::make_pair(b.from, b.to);
    return tie == PrimTieBreak::lowest_ids ? ka > kb : ka < kb;
  }
};

}  // namespace

RsptTree directed_prim(const WeightedDigraph& g, int root, PrimTieBreak tie) {
  if (root < 0 || root >= g.num_vertices())
    throw std::invalid_argument("prim root out of range");

  std::priority_queue<QueueEntry, std::vector<QueueEntry>, EntryLess> queue(
      EntryLess{tie});
  std::vector<char> explored(g.num_vertices(), 0);

  RsptTree t;
  t.root = root;
  t.explored_order.push_back(root);
  explored[root] = 1;

  auto push_out_edges = [&](int v) {
    for (EdgeId id : g.out_edges(v)) {
      const DigraphEdge& e = g.edge(id);
      if (!explored[e.to]) queue.push({e.weight, e.from, e.to, id});
    }
  };
  push_out_edges(root);

  while (!queue.empty()) {
    QueueEntry top = queue.top();
    queue.pop();
    if (explored[top.to]) continue;  // stale entry, lazy deletion
    explored[top.to] = 1;
    t.edges.push_back(top.id);
    t.explored_order.push_back(top.to);
    push_out_edges(top.to);
  }
  return t;
}

}  // namespace riverput
