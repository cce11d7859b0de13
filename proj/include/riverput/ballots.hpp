#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riverput {

// Alternatives carry dense ids [0, n) assigned at parse time, in header order.
struct Alternative {
  int id = -1;
  std::string label;
};

// One ballot line: a strict complete ranking (best first) with a positive
// integer weight. Duplicate ranking lines are kept as written, not merged.
struct Ballot {
  std::vector<int> ranking;
  long long weight = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class PreferenceProfile {
 public:
  // Validates: n >= 2, unique non-empty labels, at least one ballot, every
  // ranking a permutation of all alternatives, weights >= 1.
  PreferenceProfile(std::vector<Alternative> alternatives,
                    std::vector<Ballot> ballots);

  int num_alternatives() const { return static_cast<int>(alternatives_.size()); }
  long long num_voters() const { return num_voters_; }

  const std::vector<Alternative>& alternatives() const { return alternatives_; }
  const std::vector<Ballot>& ballots() const { return ballots_; }

  const std::string& label(int id) const;
  std::vector<std::string> labels() const;
  std::optional<int> index_of(std::string_view label) const;

 private:
  std::vector<Alternative> alternatives_;
  std::vector<Ballot> ballots_;
  long long num_voters_ = 0;
};

// Ballot file format:
//   # comment
//   alternatives: Alice, Bob, Charlie
//   4: Alice > Bob > Charlie
// The header must be the first non-comment, non-blank line. Every ranking
// must mention every alternative exactly once. Errors carry line numbers.
PreferenceProfile parse_profile(std::string_view text);

// Pairwise margin m(x, y): weighted count preferring x over y minus the
// weighted count preferring y over x. Antisymmetric by construction.
long long margin(const PreferenceProfile& profile, int x, int y);

struct MarginEdge {
  int from = -1;
  int to = -1;
  long long margin = 0;
};

// Margin graph: every edge (x, y) with m(x, y) >= 0. A decisive pair yields
// one edge; a zero-margin pair yields both directed edges with margin 0.
struct MarginGraph {
  int n = 0;
  std::vector<MarginEdge> edges;
};

MarginGraph margin_graph(const PreferenceProfile& profile);

// Throws std::invalid_argument unless g has no self loops, margins >= 0, and
// each unordered pair carries either one positive edge or two zero edges.
void validate_margin_graph(const MarginGraph& g);

// The unique alternative with no incoming margin edge, if any. A zero-margin
// tie against anyone disqualifies.
std::optional<int> condorcet_winner(const MarginGraph& g);

// Weighted first-place counts, indexed by alternative id.
std::vector<long long> plurality_scores(const PreferenceProfile& profile);

// Rank i of n earns n - i + 1 points per unit of ballot weight.
std::vector<long long> borda_scores(const PreferenceProfile& profile);

}  // namespace riverput
