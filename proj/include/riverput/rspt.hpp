#pragma once

#include <vector>

#include "riverput/graph.hpp"

namespace riverput {

// Tie policy for equal-weight crossing edges. The correctness argument is
// indifferent to the choice; lowest (source, target) is the pinned default.
enum class PrimTieBreak { lowest_ids, highest_ids };

// Tree grown from the root by repeatedly taking a maximum-weight edge that
// crosses from explored to unexplored. Every root-to-vertex path, and every
// contiguous subpath of one, is a strongest path in g. Covers exactly the
// vertices reachable from the root, so it may be partial.
struct RsptTree {
  int root = -1;
  std::vector<EdgeId> edges;           // ids into the input digraph
  std::vector<int> explored_order;     // root first
};

// Priority-queue construction with lazy deletion: stale entries whose target
// is already explored are skipped on pop. O(|E| + |V| log |V|) up to the
// queue's log factor. Throws std::invalid_argument when root is out of range.
RsptTree directed_prim(const WeightedDigraph& g, int root,
                       PrimTieBreak tie = PrimTieBreak::lowest_ids);

}  // namespace riverput
