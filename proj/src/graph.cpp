#include "riverput/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace riverput {

WeightedDigraph::WeightedDigraph(int n) : out_(n), in_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

EdgeId WeightedDigraph::add_edge(int from, int to, long long weight) {
  const int n = num_vertices();
  if (from < 0 || from >= n || to < 0 || to >= n)
    throw std::invalid_argument("edge endpoint out of range");
  if (weight < 0) throw std::invalid_argument("negative edge weight");
  assert(!has_edge(from, to) && "parallel edge");
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({from, to, weight});
  out_[from].push_back(id);
  in_[to].push_back(id);
  return id;
}

bool WeightedDigraph::has_edge(int from, int to) const {
  for (EdgeId id : out_[from])
    if (edges_[id].to == to) return true;
  return false;
}

WeightedDigraph as_digraph(const MarginGraph& g) {
  WeightedDigraph d(g.n);
  for (const MarginEdge& e : g.edges) d.add_edge(e.from, e.to, e.margin);
  return d;
}

long long path_strength(const WeightedDigraph& g, const Path& p) {
  if (p.size() < 2)
    throw std::invalid_argument("path needs at least two vertices");
  std::vector<char> seen(g.num_vertices(), 0);
  long long strength = -1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    int v = p[i];
    if (v < 0 || v >= g.num_vertices())
      throw std::invalid_argument("path vertex out of range");
    if (seen[v]) throw std::invalid_argument("path repeats a vertex");
    seen[v] = 1;
    if (i == 0) continue;
    bool found = false;
    for (EdgeId id : g.out_edges(p[i - 1])) {
      if (g.edge(id).to == v) {
        long long w = g.edge(id).weight;
        strength = strength < 0 ? w : std::min(strength, w);
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("path skips a missing edge");
  }
  return strength;
}

std::vector<std::vector<std::optional<long long>>> strongest_path_matrix(
    const WeightedDigraph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<std::optional<long long>>> s(
      n, std::vector<std::optional<long long>>(n));
  for (const DigraphEdge& e : g.edges())
    if (e.from != e.to)
      s[e.from][e.to] = s[e.from][e.to] ? std::max(*s[e.from][e.to], e.weight)
                                        : e.weight;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (i == k || !s[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k || !s[k][j]) continue;
        long long via = std::min(*s[i][k], *s[k][j]);
        if (!s[i][j] || *s[i][j] < via) s[i][j] = via;
      }
    }
  for (int v = 0; v < n; ++v) s[v][v].reset();
  return s;
}

std::optional<long long> strongest_path_weight(const WeightedDigraph& g, int u,
                                               int v) {
  const int n = g.num_vertices();
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("endpoints must differ");
  return strongest_path_matrix(g)[u][v];
}

std::vector<int> ancestors_up_to(const WeightedDigraph& g, int x, int y) {
  const int n = g.num_vertices();
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw std::invalid_argument("vertex out of range");
  std::vector<char> seen(n, 0);
  std::deque<int> queue;
  seen[x] = 1;
  queue.push_back(x);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == y) continue;  // never step across y's incoming edges
    for (EdgeId id : g.in_edges(v)) {
      int u = g.edge(id).from;
      if (!seen[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

bool is_dag_unique_source(const WeightedDigraph& g,
                          const std::vector<int>& vertices, int y) {
  const int n = g.num_vertices();
  std::vector<char> member(n, 0);
  for (int v : vertices) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    member[v] = 1;
  }
  if (y < 0 || y >= n || !member[y]) return false;

  std::vector<int> indeg(n, 0);
  for (int v : vertices)
    for (EdgeId id : g.out_edges(v))
      if (member[g.edge(id).to]) ++indeg[g.edge(id).to];

  // Kahn's algorithm; a unique source means exactly one zero in-degree seed.
  std::deque<int> queue;
  int sources = 0;
  for (int v : vertices)
    if (indeg[v] == 0) {
      ++sources;
      if (v != y) return false;
      queue.push_back(v);
    }
  if (sources != 1) return false;

  std::size_t emitted = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    ++emitted;
    for (EdgeId id : g.out_edges(v)) {
      int u = g.edge(id).to;
      if (member[u] && --indeg[u] == 0) queue.push_back(u);
    }
  }
  return emitted == vertices.size();  // anything left sits on a cycle
}

bool is_descending_ordering(const WeightedDigraph& g,
                            const DescendingOrdering& o) {
  if (o.size() != g.edges().size()) return false;
  std::vector<char> seen(g.edges().size(), 0);
  long long prev = -1;
  bool first = true;
  for (EdgeId id : o) {
    if (id < 0 || id >= g.num_edges() || seen[id]) return false;
    seen[id] = 1;
    long long w = g.edge(id).weight;
    if (!first && w > prev) return false;
    prev = w;
    first = false;
  }
  return true;
}

namespace {

std::vector<std::vector<EdgeId>> weight_groups(const WeightedDigraph& g) {
  std::vector<EdgeId> ids(g.num_edges());
  for (int i = 0; i < g.num_edges(); ++i) ids[i] = i;
  std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
    if (g.edge(a).weight != g.edge(b).weight)
      return g.edge(a).weight > g.edge(b).weight;
    return a < b;
  });
  std::vector<std::vector<EdgeId>> groups;
  for (EdgeId id : ids) {
    if (groups.empty() ||
        g.edge(groups.back().back()).weight != g.edge(id).weight)
      groups.emplace_back();
    groups.back().push_back(id);
  }
  return groups;
}

}  // namespace

std::optional<std::uint64_t> count_descending_orderings(
    const WeightedDigraph& g, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (const std::vector<EdgeId>& group : weight_groups(g)) {
    for (std::uint64_t k = 2; k <= group.size(); ++k) {
      if (count > cap / k) return std::nullopt;
      count *= k;
    }
  }
  return count <= cap ? std::optional<std::uint64_t>(count) : std::nullopt;
}

DescendingOrderingEnumerator::DescendingOrderingEnumerator(
    const WeightedDigraph& g, std::uint64_t cap)
    : groups_(weight_groups(g)) {
  std::optional<std::uint64_t> count = count_descending_orderings(g, cap);
  if (!count) throw TooManyOrderingsError(cap);
  count_ = *count;
}

std::optional<DescendingOrdering> DescendingOrderingEnumerator::next() {
  if (exhausted_) return std::nullopt;
  DescendingOrdering o;
  for (const std::vector<EdgeId>& group : groups_)
    o.insert(o.end(), group.begin(), group.end());

  // Advance: next_permutation on the last group that still has one, resetting
  // the groups after it. Mirrors a mixed-radix counter in lexicographic order.
  exhausted_ = true;
  for (auto it = groups_.rbegin(); it != groups_.rend(); ++it) {
    if (std::next_permutation(it->begin(), it->end())) {
      exhausted_ = false;
      break;
    }
    // wrapped around to the sorted order; carry on to the previous group
  }
  return o;
}

}  // namespace riverput
