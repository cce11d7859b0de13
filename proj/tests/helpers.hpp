#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "riverput/ballots.hpp"
#include "riverput/graph.hpp"
#include "riverput/river.hpp"
#include "riverput/semiriver.hpp"

namespace testutil {

inline constexpr const char* kElection11 = R"(alternatives: Alice, Bob, Charlie
4: Alice > Bob > Charlie
3: Bob > Charlie > Alice
2: Bob > Alice > Charlie
2: Charlie > Alice > Bob
)";

inline constexpr const char* kElection13 = R"(alternatives: Alice, Bob, Charlie
4: Alice > Bob > Charlie
3: Bob > Charlie > Alice
2: Bob > Alice > Charlie
4: Charlie > Alice > Bob
)";

// Strongest path strength by exhaustive DFS over simple paths. Independent
// of the closure in the library; only for tiny graphs.
inline std::optional<long long> brute_strongest_path(
    const riverput::WeightedDigraph& g, int u, int v) {
  std::optional<long long> best;
  std::vector<char> visited(g.num_vertices(), 0);
  visited[u] = 1;

  auto dfs = [&](auto&& self, int at, long long strength) -> void {
    if (at == v) {
      if (!best || *best < strength) best = strength;
      return;
    }
    for (riverput::EdgeId id : g.out_edges(at)) {
      const riverput::DigraphEdge& e = g.edge(id);
      if (visited[e.to]) continue;
      visited[e.to] = 1;
      self(self, e.to, std::min(strength, e.weight));
      visited[e.to] = 0;
    }
  };
  for (riverput::EdgeId id : g.out_edges(u)) {
    const riverput::DigraphEdge& e = g.edge(id);
    if (e.to == v) {
      if (!best || *best < e.weight) best = e.weight;
      continue;
    }
    visited[e.to] = 1;
    dfs(dfs, e.to, e.weight);
    visited[e.to] = 0;
  }
  return best;
}

// Reference for ancestors_up_to: drop every incoming edge of y, then collect
// plain reverse reachability of x (plus x itself).
inline std::vector<int> ancestors_reference(const riverput::WeightedDigraph& g,
                                            int x, int y) {
  riverput::WeightedDigraph stripped(g.num_vertices());
  for (const riverput::DigraphEdge& e : g.edges())
    if (e.to != y) stripped.add_edge(e.from, e.to, e.weight);
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> stack{x};
  seen[x] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (riverput::EdgeId id : stripped.in_edges(v)) {
      int u = stripped.edge(id).from;
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

inline riverput::PreferenceProfile random_profile(std::mt19937_64& rng, int n,
                                                  int voters) {
  std::vector<riverput::Alternative> alts;
  for (int i = 0; i < n; ++i)
    alts.push_back({i, std::string(1, static_cast<char>('A' + i))});
  std::vector<riverput::Ballot> ballots;
  std::vector<int> ranking(n);
  for (int v = 0; v < voters; ++v) {
    for (int i = 0; i < n; ++i) ranking[i] = i;
    std::shuffle(ranking.begin(), ranking.end(), rng);
    ballots.push_back({ranking, 1});
  }
  return riverput::PreferenceProfile(std::move(alts), std::move(ballots));
}

// Weighted digraph with edge probability p and weights in [0, max_weight].
inline riverput::WeightedDigraph random_digraph(std::mt19937_64& rng, int n,
                                                double p, int max_weight) {
  riverput::WeightedDigraph g(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(0, max_weight);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng) < p) g.add_edge(u, v, weight(rng));
  return g;
}

// Synthetic margin graph: every pair gets a direction and a margin drawn
// from `margins` (0 yields the double zero edge). Not tied to any profile.
inline riverput::MarginGraph random_margin_graph(
    std::mt19937_64& rng, int n, const std::vector<long long>& margins) {
  riverput::MarginGraph g;
  g.n = n;
  std::uniform_int_distribution<std::size_t> pick(0, margins.size() - 1);
  std::uniform_int_distribution<int> flip(0, 1);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      long long m = margins[pick(rng)];
      if (m == 0) {
        g.edges.push_back({x, y, 0});
        g.edges.push_back({y, x, 0});
      } else if (flip(rng)) {
        g.edges.push_back({x, y, m});
      } else {
        g.edges.push_back({y, x, m});
      }
    }
  return g;
}

using PairSet = std::set<std::pair<int, int>>;

inline PairSet pair_set(const riverput::MarginGraph& g,
                        const std::vector<riverput::EdgeId>& ids) {
  PairSet s;
  for (riverput::EdgeId id : ids)
    s.insert({g.edges[id].from, g.edges[id].to});
  return s;
}

inline PairSet pair_set(const riverput::SemiRiverDiagram& d) {
  PairSet s;
  for (const riverput::DigraphEdge& e : d.digraph().edges())
    s.insert({e.from, e.to});
  return s;
}

inline std::vector<riverput::EdgeId> sorted_ids(
    std::vector<riverput::EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace testutil
