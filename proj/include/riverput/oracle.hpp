#pragma once

#include <cstdint>

#include "riverput/ballots.hpp"
#include "riverput/graph.hpp"

namespace riverput {

inline constexpr std::uint64_t kDefaultOrderingCap = 1'000'000;

struct OracleReport {
  std::vector<int> winners;               // union of roots, ascending
  std::vector<int> per_ordering_winners;  // one root per enumerated ordering
  std::vector<EdgeId> union_edges;        // edges of any diagram, ascending
  std::uint64_t ordering_count = 0;       // product of tied-group factorials
};

// Ground truth by exhaustion: every descending ordering through river_naive.
// Deliberately avoids river_fast so the two implementations stay independent
// cross-checks. Throws TooManyOrderingsError when |orderings| > cap.
// With stop_when_complete, enumeration ends early once every alternative has
// won; the per-ordering log and union_edges then cover only the enumerated
// prefix, while ordering_count stays the full product.
OracleReport put_winners_bruteforce(const MarginGraph& g,
                                    std::uint64_t cap = kDefaultOrderingCap,
                                    bool stop_when_complete = false);

}  // namespace riverput
