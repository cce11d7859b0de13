#include "riverput/river.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <random>

namespace riverput {

namespace {

void validate_ordering(const MarginGraph& g, const DescendingOrdering& o) {
  if (o.size() != g.edges.size())
    throw std::invalid_argument("ordering does not cover the edge set");
  std::vector<char> seen(g.edges.size(), 0);
  long long prev = 0;
  bool first = true;
  for (EdgeId id : o) {
    if (id < 0 || id >= static_cast<EdgeId>(g.edges.size()))
      throw std::invalid_argument("ordering references an unknown edge");
    if (seen[id]) throw std::invalid_argument("ordering repeats an edge");
    seen[id] = 1;
    long long m = g.edges[id].margin;
    if (!first && m > prev)
      throw std::invalid_argument("ordering violates the descending invariant");
    prev = m;
    first = false;
  }
}

int extract_root(const MarginGraph& g, const std::vector<int>& indeg,
                 std::size_t edge_count) {
  if (edge_count + 1 != static_cast<std::size_t>(g.n))
    throw std::logic_error("river diagram is not spanning");
  int root = -1;
  for (int v = 0; v < g.n; ++v) {
    if (indeg[v] == 0) {
      if (root != -1) throw std::logic_error("river diagram has two roots");
      root = v;
    }
  }
  if (root == -1) throw std::logic_error("river diagram has no root");
  return root;
}

}  // namespace

DescendingOrdering lex_ordering(const MarginGraph& g) {
  DescendingOrdering o(g.edges.size());
  std::iota(o.begin(), o.end(), 0);
  std::stable_sort(o.begin(), o.end(), [&](EdgeId a, EdgeId b) {
    const MarginEdge& ea = g.edges[a];
    const MarginEdge& eb = g.edges[b];
    if (ea.margin != eb.margin) return ea.margin > eb.margin;
    if (ea.from != eb.from) return ea.from < eb.from;
    return ea.to < eb.to;
  });
  return o;
}

DescendingOrdering shuffled_ordering(const MarginGraph& g,
                                     std::uint64_t seed) {
  DescendingOrdering o = lex_ordering(g);
  std::mt19937_64 rng(seed);
  std::size_t start = 0;
  while (start < o.size()) {
    std::size_t stop = start + 1;
    while (stop < o.size() &&
           g.edges[o[stop]].margin == g.edges[o[start]].margin)
      ++stop;
    std::shuffle(o.begin() + start, o.begin() + stop, rng);
    start = stop;
  }
  return o;
}

RiverDiagram river_naive(const MarginGraph& g, const DescendingOrdering& o) {
  validate_margin_graph(g);
  validate_ordering(g, o);

  std::vector<std::vector<int>> out(g.n);
  std::vector<int> indeg(g.n, 0);
  RiverDiagram d;
  d.n = g.n;

  std::vector<char> seen(g.n, 0);
  std::deque<int> queue;
  auto reaches = [&](int from, int to) {
    std::fill(seen.begin(), seen.end(), 0);
    queue.clear();
    seen[from] = 1;
    queue.push_back(from);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (v == to) return true;
      for (int u : out[v])
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
    }
    return false;
  };

  for (EdgeId id : o) {
    const MarginEdge& e = g.edges[id];
    if (indeg[e.to] > 0) continue;       // (i) target already claimed
    if (reaches(e.to, e.from)) continue; // (ii) would close a cycle
    out[e.from].push_back(e.to);
    ++indeg[e.to];
    d.edges.push_back(id);
    assert(indeg[e.to] == 1);
  }

  d.root = extract_root(g, indeg, d.edges.size());
  return d;
}

RiverDiagram river_fast(const MarginGraph& g, const DescendingOrdering& o) {
  validate_margin_graph(g);
  validate_ordering(g, o);

  // Disjoint-set forest over river subtrees, rebuilt per call. A vertex
  // without an incoming edge is the root of its subtree, so the cycle test
  // (ii) collapses to a same-component query.
  std::vector<int> parent(g.n), rank(g.n, 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };

  std::vector<char> has_in_edge(g.n, 0);
  std::vector<int> indeg(g.n, 0);
  RiverDiagram d;
  d.n = g.n;

  for (EdgeId id : o) {
    const MarginEdge& e = g.edges[id];
    if (has_in_edge[e.to]) continue;  // (i)
    int rx = find(e.from);
    int ry = find(e.to);
    if (rx == ry) continue;           // (ii) same subtree, y would reach x
    has_in_edge[e.to] = 1;
    ++indeg[e.to];
    if (rank[rx] < rank[ry]) std::swap(rx, ry);
    parent[ry] = rx;
    if (rank[rx] == rank[ry]) ++rank[rx];
    d.edges.push_back(id);
  }

  d.root = extract_root(g, indeg, d.edges.size());
  return d;
}

RiverDiagram river_fast(const MarginGraph& g) {
  return river_fast(g, lex_ordering(g));
}

int river_winner(const RiverDiagram& d) {
  if (d.root < 0) throw std::invalid_argument("diagram has no root");
  return d.root;
}

void validate_river_diagram(const MarginGraph& g, const RiverDiagram& d) {
  if (d.n != g.n) throw std::invalid_argument("vertex count mismatch");
  if (d.edges.size() + 1 != static_cast<std::size_t>(g.n))
    throw std::invalid_argument("diagram must have n - 1 edges");
  std::vector<int> indeg(g.n, 0);
  std::vector<std::vector<int>> out(g.n);
  std::vector<char> used(g.edges.size(), 0);
  for (EdgeId id : d.edges) {
    if (id < 0 || id >= static_cast<EdgeId>(g.edges.size()))
      throw std::invalid_argument("diagram references an unknown edge");
    if (used[id]) throw std::invalid_argument("diagram repeats an edge");
    used[id] = 1;
    const MarginEdge& e = g.edges[id];
    if (++indeg[e.to] > 1)
      throw std::invalid_argument("vertex with two incoming edges");
    out[e.from].push_back(e.to);
  }
  int roots = 0;
  for (int v = 0; v < g.n; ++v)
    if (indeg[v] == 0) ++roots;
  if (roots != 1) throw std::invalid_argument("diagram must have one root");
  if (d.root < 0 || d.root >= g.n || indeg[d.root] != 0)
    throw std::invalid_argument("stored root is not the in-degree-0 vertex");

  // n - 1 edges, in-degree <= 1, one root: reachability from the root now
  // certifies both acyclicity and spanning.
  std::vector<char> seen(g.n, 0);
  std::deque<int> queue{d.root};
  seen[d.root] = 1;
  int visited = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    ++visited;
    for (int u : out[v])
      if (!seen[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
  }
  if (visited != g.n)
    throw std::invalid_argument("diagram does not span all alternatives");
}

}  // namespace riverput
