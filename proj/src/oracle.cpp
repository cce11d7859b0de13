#include "riverput/oracle.hpp"

#include <algorithm>

#include "riverput/river.hpp"

namespace riverput {

OracleReport put_winners_bruteforce(const MarginGraph& g, std::uint64_t cap,
                                    bool stop_when_complete) {
  validate_margin_graph(g);
  DescendingOrderingEnumerator stream(as_digraph(g), cap);

  OracleReport report;
  report.ordering_count = stream.count();
  std::vector<char> is_winner(g.n, 0);
  std::vector<char> in_union(g.edges.size(), 0);
  int distinct_winners = 0;

  while (std::optional<DescendingOrdering> o = stream.next()) {
    RiverDiagram d = river_naive(g, *o);
    report.per_ordering_winners.push_back(d.root);
    if (!is_winner[d.root]) {
      is_winner[d.root] = 1;
      ++distinct_winners;
    }
    for (EdgeId id : d.edges) in_union[id] = 1;
    if (stop_when_complete && distinct_winners == g.n) break;
  }

  for (int v = 0; v < g.n; ++v)
    if (is_winner[v]) report.winners.push_back(v);
  for (std::size_t i = 0; i < in_union.size(); ++i)
    if (in_union[i]) report.union_edges.push_back(static_cast<EdgeId>(i));
  return report;
}

}  // namespace riverput
