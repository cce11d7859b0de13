#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "riverput/ballots.hpp"

namespace riverput {

using EdgeId = int;

struct DigraphEdge {
  int from = -1;
  int to = -1;
  long long weight = 0;
};

// Directed graph with non-negative integer weights. Edges get dense ids in
// insertion order; the transpose (in_edges) is maintained alongside.
// Parallel edges with identical endpoints are a contract violation.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;
  explicit WeightedDigraph(int n);

  int num_vertices() const { return static_cast<int>(out_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  EdgeId add_edge(int from, int to, long long weight);

  const std::vector<DigraphEdge>& edges() const { return edges_; }
  const DigraphEdge& edge(EdgeId id) const { return edges_[id]; }
  const std::vector<EdgeId>& out_edges(int v) const { return out_[v]; }
  const std::vector<EdgeId>& in_edges(int v) const { return in_[v]; }
  bool has_edge(int from, int to) const;

 private:
  std::vector<DigraphEdge> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
};

// View of a margin graph as a weighted digraph. Edge ids coincide with
// indices into g.edges, so orderings transfer between the two unchanged.
WeightedDigraph as_digraph(const MarginGraph& g);

// A path is a sequence of >= 2 distinct vertices joined by edges of g.
using Path = std::vector<int>;

// Minimum edge weight along p. Throws std::invalid_argument when p repeats a
// vertex, is too short, or skips a missing edge.
long long path_strength(const WeightedDigraph& g, const Path& p);

// Strength of the strongest path from u to v: max over paths of the minimum
// edge weight. nullopt when v is unreachable from u (the minus-infinity
// case is a sentinel, never a numeric minimum). Requires u != v.
std::optional<long long> strongest_path_weight(const WeightedDigraph& g, int u,
                                               int v);

// All-pairs variant; entry [u][v] matches strongest_path_weight(g, u, v).
// Diagonal entries are nullopt.
std::vector<std::vector<std::optional<long long>>> strongest_path_matrix(
    const WeightedDigraph& g);

// Vertices with a path to x that uses no incoming edge of y. Contains x via
// the empty path, and y itself exactly when y reaches x that way. Sorted.
std::vector<int> ancestors_up_to(const WeightedDigraph& g, int x, int y);

// True iff the subgraph induced by `vertices` is acyclic and its only vertex
// of induced in-degree 0 is y. False whenever y is not in `vertices`.
bool is_dag_unique_source(const WeightedDigraph& g,
                          const std::vector<int>& vertices, int y);

// Sequence of edge ids covering all of E(g) with non-increasing weights.
using DescendingOrdering = std::vector<EdgeId>;

bool is_descending_ordering(const WeightedDigraph& g,
                            const DescendingOrdering& o);

class TooManyOrderingsError : public std::runtime_error {
 public:
  explicit TooManyOrderingsError(std::uint64_t cap)
      : std::runtime_error(
            "number of descending orderings exceeds the cap of " +
            std::to_string(cap)),
        cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

// Product of factorials of tied-weight group sizes, i.e. the number of
// distinct descending orderings. nullopt when the product exceeds cap
// (the multiplication aborts early, so no overflow).
std::optional<std::uint64_t> count_descending_orderings(
    const WeightedDigraph& g, std::uint64_t cap);

// Streams every descending ordering of E(g) without materialising the whole
// set. Tied-weight groups are permuted in lexicographic edge-id order, so
// enumeration order is reproducible. Construction throws
// TooManyOrderingsError when the count exceeds cap.
class DescendingOrderingEnumerator {
 public:
  DescendingOrderingEnumerator(const WeightedDigraph& g, std::uint64_t cap);

  std::uint64_t count() const { return count_; }

  // Next ordering, or nullopt once exhausted.
  std::optional<DescendingOrdering> next();

 private:
  std::vector<std::vector<EdgeId>> groups_;  // descending weight
  std::uint64_t count_ = 0;
  bool exhausted_ = false;
};

}  // namespace riverput
