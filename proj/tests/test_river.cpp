#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "riverput/oracle.hpp"
#include "riverput/river.hpp"

using namespace riverput;

namespace {

// Rebuild the diagram state just before position i of o: exactly the final
// diagram's edges that appear earlier in o, since accepted edges never leave.
struct Prefix {
  std::vector<int> indeg;
  std::vector<std::vector<int>> out;
};

Prefix prefix_before(const MarginGraph& g, const RiverDiagram& d,
                     const DescendingOrdering& o, std::size_t i) {
  std::vector<char> in_diagram(g.edges.size(), 0);
  for (EdgeId id : d.edges) in_diagram[id] = 1;
  Prefix p{std::vector<int>(g.n, 0), std::vector<std::vector<int>>(g.n)};
  for (std::size_t k = 0; k < i; ++k) {
    if (!in_diagram[o[k]]) continue;
    const MarginEdge& e = g.edges[o[k]];
    ++p.indeg[e.to];
    p.out[e.from].push_back(e.to);
  }
  return p;
}

bool prefix_reaches(const Prefix& p, int from, int to) {
  std::vector<char> seen(p.out.size(), 0);
  std::vector<int> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (int u : p.out[v])
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
  }
  return false;
}

}  // namespace

TEST_CASE("lex ordering is the canonical stable sort") {
  MarginGraph g = margin_graph(parse_profile(testutil::kElection13));
  CHECK(lex_ordering(g) == DescendingOrdering{2, 0, 1});

  MarginGraph g11 = margin_graph(parse_profile(testutil::kElection11));
  CHECK(lex_ordering(g11) == DescendingOrdering{2, 0, 1});
}

TEST_CASE("river on the thirteen-voter cycle") {
  MarginGraph g = margin_graph(parse_profile(testutil::kElection13));
  DescendingOrdering o = lex_ordering(g);

  RiverDiagram naive = river_naive(g, o);
  CHECK(naive.root == 0);  // Alice
  // (Bob, Charlie, 5) lands, (Alice, Bob, 3) lands, (Charlie, Alice, 1)
  // would close the cycle.
  CHECK(naive.edges == std::vector<EdgeId>{2, 0});
  CHECK_NOTHROW(validate_river_diagram(g, naive));

  RiverDiagram fast = river_fast(g, o);
  CHECK(fast.root == naive.root);
  CHECK(fast.edges == naive.edges);
  CHECK(river_winner(fast) == 0);

  CHECK(river_fast(g).edges == fast.edges);
}

TEST_CASE("river on the eleven-voter fixture under both orderings") {
  MarginGraph g = margin_graph(parse_profile(testutil::kElection11));
  DescendingOrderingEnumerator stream(as_digraph(g), 10);
  int count = 0;
  while (auto o = stream.next()) {
    RiverDiagram d = river_naive(g, *o);
    CHECK(d.root == 0);  // the Condorcet winner roots every universe
    CHECK(testutil::pair_set(g, d.edges) ==
          testutil::PairSet{{0, 1}, {1, 2}});
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("branching condition: second edge into a vertex is skipped") {
  // (0,2,9) claims vertex 2 first; (1,2,7) must be skipped even though no
  // cycle threatens, leaving (0,1) to finish the tree.
  MarginGraph g{3, {{0, 2, 9}, {1, 2, 7}, {0, 1, 3}}};
  RiverDiagram d = river_naive(g, {0, 1, 2});
  CHECK(d.root == 0);
  CHECK(d.edges == std::vector<EdgeId>{0, 2});
}

TEST_CASE("zero-margin edges participate like any others") {
  MarginGraph g{2, {{0, 1, 0}, {1, 0, 0}}};
  RiverDiagram d = river_naive(g, {0, 1});
  CHECK(d.root == 0);
  CHECK(d.edges == std::vector<EdgeId>{0});
  RiverDiagram d2 = river_naive(g, {1, 0});
  CHECK(d2.root == 1);
}

TEST_CASE("ordering validation fails loudly") {
  MarginGraph g = margin_graph(parse_profile(testutil::kElection13));
  CHECK_THROWS_AS(river_naive(g, {2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(river_naive(g, {2, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(river_naive(g, {1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(river_naive(g, {2, 0, 7}), std::invalid_argument);
  CHECK_THROWS_AS(river_fast(g, {1, 0, 2}), std::invalid_argument);

  SUBCASE("malformed margin graphs are rejected up front") {
    MarginGraph bad{3, {{0, 1, 2}, {1, 2, 2}}};  // pair (0,2) missing
    CHECK_THROWS_AS(river_naive(bad, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(river_fast(bad, {0, 1}), std::invalid_argument);
  }
}

TEST_CASE("fast and naive construction agree edge for edge") {
  std::mt19937_64 rng(31337);
  int instances = 0;
  while (instances < 120) {
    int n = 3 + static_cast<int>(rng() % 3);
    int voters = 1 + static_cast<int>(rng() % 7);
    MarginGraph g = margin_graph(testutil::random_profile(rng, n, voters));
    WeightedDigraph dg = as_digraph(g);
    if (!count_descending_orderings(dg, 2000)) continue;
    ++instances;
    DescendingOrderingEnumerator stream(dg, 2000);
    while (auto o = stream.next()) {
      RiverDiagram naive = river_naive(g, *o);
      RiverDiagram fast = river_fast(g, *o);
      CHECK(naive.edges == fast.edges);
      CHECK(naive.root == fast.root);
      CHECK_NOTHROW(validate_river_diagram(g, fast));
    }
  }
}

TEST_CASE("fast and naive also agree on synthetic tie-heavy graphs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);
    MarginGraph g = testutil::random_margin_graph(rng, n, {0, 1, 1, 3, 3, 5});
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      DescendingOrdering o = shuffled_ordering(g, rng());
      RiverDiagram naive = river_naive(g, o);
      RiverDiagram fast = river_fast(g, o);
      CHECK(naive.edges == fast.edges);
      CHECK(naive.root == fast.root);
    }
  }
}

TEST_CASE("every skip is justified by a branching or cycle block") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 3 + static_cast<int>(rng() % 3);
    MarginGraph g = testutil::random_margin_graph(rng, n, {0, 1, 3, 5, 7});
    DescendingOrdering o = shuffled_ordering(g, rng());
    RiverDiagram d = river_naive(g, o);
    std::vector<char> in_diagram(g.edges.size(), 0);
    for (EdgeId id : d.edges) in_diagram[id] = 1;

    for (std::size_t i = 0; i < o.size(); ++i) {
      if (in_diagram[o[i]]) continue;
      const MarginEdge& e = g.edges[o[i]];
      Prefix p = prefix_before(g, d, o, i);
      bool branch_blocked = p.indeg[e.to] > 0;
      bool cycle_blocked = prefix_reaches(p, e.to, e.from);
      CHECK((branch_blocked || cycle_blocked));
      if (branch_blocked) {
        // the blocking in-edge was processed earlier, so its margin is >= ours
        bool found = false;
        for (std::size_t k = 0; k < i && !found; ++k)
          if (in_diagram[o[k]] && g.edges[o[k]].to == e.to) {
            CHECK(g.edges[o[k]].margin >= e.margin);
            found = true;
          }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("a Condorcet winner roots every universe") {
  std::mt19937_64 rng(4242);
  int with_winner = 0;
  while (with_winner < 40) {
    int n = 3 + static_cast<int>(rng() % 3);
    MarginGraph g = margin_graph(
        testutil::random_profile(rng, n, 1 + static_cast<int>(rng() % 7)));
    std::optional<int> c = condorcet_winner(g);
    if (!c) continue;
    WeightedDigraph dg = as_digraph(g);
    if (!count_descending_orderings(dg, 1000)) continue;
    ++with_winner;
    DescendingOrderingEnumerator stream(dg, 1000);
    while (auto o = stream.next()) CHECK(river_naive(g, *o).root == *c);
  }
}

TEST_CASE("shuffled orderings keep the descending invariant") {
  MarginGraph g = margin_graph(parse_profile("alternatives: A, B, C, D\n"
                                             "1: A > B > C > D\n"
                                             "1: D > C > B > A\n"
                                             "1: A > C > B > D\n"));
  WeightedDigraph dg = as_digraph(g);
  DescendingOrdering base = shuffled_ordering(g, 1);
  CHECK(is_descending_ordering(dg, base));
  CHECK(shuffled_ordering(g, 1) == base);  // same seed, same stream

  bool any_difference = false;
  for (std::uint64_t seed = 2; seed < 12; ++seed) {
    DescendingOrdering o = shuffled_ordering(g, seed);
    CHECK(is_descending_ordering(dg, o));
    if (o != base) any_difference = true;
  }
  CHECK(any_difference);
}

TEST_CASE("validate_river_diagram rejects tampered diagrams") {
  MarginGraph g = margin_graph(parse_profile(testutil::kElection13));
  RiverDiagram d = river_fast(g);

  RiverDiagram missing = d;
  missing.edges.pop_back();
  CHECK_THROWS_AS(validate_river_diagram(g, missing), std::invalid_argument);

  RiverDiagram wrong_root = d;
  wrong_root.root = 1;
  CHECK_THROWS_AS(validate_river_diagram(g, wrong_root), std::invalid_argument);

  // (Bob,Charlie) + (Charlie,Alice) chain: fine rooted at Bob, not at Alice
  CHECK_NOTHROW(validate_river_diagram(g, {3, 1, {2, 1}}));
  CHECK_THROWS_AS(validate_river_diagram(g, {3, 0, {2, 1}}),
                  std::invalid_argument);
}
