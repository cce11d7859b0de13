#include "riverput/putcheck.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <thread>

#include "riverput/semiriver.hpp"

namespace riverput {

DescendingOrdering set_ordering(const MarginGraph& g,
                                const std::vector<EdgeId>& selected) {
  std::vector<char> member(g.edges.size(), 0);
  for (EdgeId id : selected) {
    if (id < 0 || id >= static_cast<EdgeId>(g.edges.size()))
      throw std::invalid_argument("selected edge is not in the edge set");
    member[id] = 1;
  }

  DescendingOrdering o = lex_ordering(g);
  std::stable_partition(o.begin(), o.end(),
                        [&](EdgeId id) { return member[id] != 0; });
  std::stable_sort(o.begin(), o.end(), [&](EdgeId a, EdgeId b) {
    return g.edges[a].margin > g.edges[b].margin;
  });
  return o;
}

namespace {

// Margin graphs carry at most one edge per ordered pair, so (from, to)
// uniquely recovers the margin edge id.
std::vector<EdgeId> pair_index(const MarginGraph& g) {
  std::vector<EdgeId> index(static_cast<std::size_t>(g.n) * g.n, -1);
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    index[static_cast<std::size_t>(g.edges[i].from) * g.n + g.edges[i].to] =
        static_cast<EdgeId>(i);
  return index;
}

PutCertificate check_against(const MarginGraph& g,
                             const SemiRiverDiagram& semi,
                             const std::vector<EdgeId>& index, int w,
                             PrimTieBreak tie) {
  PutCertificate cert;
  cert.alternative = w;

  RsptTree t = directed_prim(semi.digraph(), w, tie);
  cert.tree_edges.reserve(t.edges.size());
  for (EdgeId id : t.edges) {
    const DigraphEdge& e = semi.digraph().edge(id);
    EdgeId margin_id = index[static_cast<std::size_t>(e.from) * g.n + e.to];
    assert(margin_id >= 0 && "semi-river edge missing from margin graph");
    cert.tree_edges.push_back(margin_id);
  }

  cert.ordering = set_ordering(g, cert.tree_edges);
  cert.diagram = river_fast(g, cert.ordering);
  cert.verdict = cert.diagram.root == w;

#ifndef NDEBUG
  if (cert.verdict) {
    std::vector<EdgeId> a = cert.diagram.edges;
    std::vector<EdgeId> b = cert.tree_edges;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    assert(a == b && "winning diagram must coincide with the Prim tree");
  }
#endif
  return cert;
}

}  // namespace

PutCertificate constructive_check(const MarginGraph& g, int w,
                                  PrimTieBreak tie) {
  if (w < 0 || w >= g.n)
    throw std::invalid_argument("alternative out of range");
  SemiRiverDiagram semi = semi_river(g);
  return check_against(g, semi, pair_index(g), w, tie);
}

PutResult river_put_winners(const MarginGraph& g, bool condorcet_shortcut,
                            PrimTieBreak tie) {
  validate_margin_graph(g);
  PutResult result;

  if (condorcet_shortcut) {
    if (std::optional<int> c = condorcet_winner(g)) {
      // A Condorcet winner roots every River diagram, so one lex run is a
      // full certificate; the diagram stands in for the Prim tree.
      PutCertificate cert;
      cert.alternative = *c;
      cert.ordering = lex_ordering(g);
      cert.diagram = river_fast(g, cert.ordering);
      cert.tree_edges = cert.diagram.edges;
      cert.verdict = cert.diagram.root == *c;
      assert(cert.verdict);
      result.winners.push_back(*c);
      result.certificates.push_back(std::move(cert));
      result.condorcet_shortcut_used = true;
      return result;
    }
  }

  const SemiRiverDiagram semi = semi_river(g);
  const std::vector<EdgeId> index = pair_index(g);
  std::vector<PutCertificate> checks(g.n);

  unsigned int workers = std::min<unsigned int>(
      {static_cast<unsigned int>(g.n),
       std::max(1u, std::thread::hardware_concurrency()), 8u});
  if (workers <= 1) {
    for (int w = 0; w < g.n; ++w)
      checks[w] = check_against(g, semi, index, w, tie);
  } else {
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int w = next.fetch_add(1); w < g.n; w = next.fetch_add(1))
            checks[w] = check_against(g, semi, index, w, tie);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& err : errors)
      if (err) std::rethrow_exception(err);
  }

  for (int w = 0; w < g.n; ++w) {
    if (checks[w].verdict) {
      result.winners.push_back(w);
      result.certificates.push_back(std::move(checks[w]));
    }
  }
  assert(!result.winners.empty() && "winner set can never be empty");
  return result;
}

}  // namespace riverput
