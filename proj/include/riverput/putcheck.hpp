#pragma once

#include <vector>

#include "riverput/ballots.hpp"
#include "riverput/graph.hpp"
#include "riverput/river.hpp"
#include "riverput/rspt.hpp"

namespace riverput {

// Descending ordering of all margin edges that places, within each tied
// group, the selected edges before the rest. The edge list is canonicalised
// to (-margin, source, target) order first, then stably partitioned by
// membership and stably re-sorted by margin, so output is reproducible
// byte for byte. Throws when `selected` is not a subset of g's edge ids.
DescendingOrdering set_ordering(const MarginGraph& g,
                                const std::vector<EdgeId>& selected);

// Evidence from one constructive check. When verdict holds, the diagram is
// rooted at `alternative` and its edge set equals tree_edges.
struct PutCertificate {
  int alternative = -1;
  bool verdict = false;
  DescendingOrdering ordering;      // margin edge ids, the order river ran on
  RiverDiagram diagram;
  std::vector<EdgeId> tree_edges;   // margin edge ids of the Prim tree
};

// Decides whether w wins under some descending ordering, in polynomial time:
// semi-river diagram, directed Prim from w on it, set_ordering favouring the
// tree edges, one fast river run, verdict = (root == w). A partial Prim tree
// still flows through the remaining steps and simply fails the verdict.
PutCertificate constructive_check(const MarginGraph& g, int w,
                                  PrimTieBreak tie = PrimTieBreak::lowest_ids);

struct PutResult {
  std::vector<int> winners;                  // ascending alternative ids
  std::vector<PutCertificate> certificates;  // aligned with winners
  bool condorcet_shortcut_used = false;
};

// Winner set under parallel-universe tie-breaking; never empty. Runs one
// constructive check per alternative over a shared immutable margin graph
// and semi-river diagram, possibly concurrently, merged by alternative id.
// With condorcet_shortcut set and a Condorcet winner c present, the per-
// alternative checks are skipped: winners = {c} and the certificate comes
// from a plain lex-ordered river run, whose diagram doubles as the tree.
PutResult river_put_winners(const MarginGraph& g,
                            bool condorcet_shortcut = false,
                            PrimTieBreak tie = PrimTieBreak::lowest_ids);

}  // namespace riverput
