#include "riverput/ballots.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>
#include <unordered_set>

namespace riverput {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

PreferenceProfile::PreferenceProfile(std::vector<Alternative> alternatives,
                                     std::vector<Ballot> ballots)
    : alternatives_(std::move(alternatives)), ballots_(std::move(ballots)) {
  const int n = static_cast<int>(alternatives_.size());
  if (n < 2) throw std::invalid_argument("profile needs at least 2 alternatives");
  std::unordered_set<std::string> seen;
  for (int i = 0; i < n; ++i) {
    if (alternatives_[i].id != i)
      throw std::invalid_argument("alternative ids must be dense and ordered");
    if (alternatives_[i].label.empty())
      throw std::invalid_argument("empty alternative label");
    if (!seen.insert(alternatives_[i].label).second)
      throw std::invalid_argument("duplicate alternative label: " +
                                  alternatives_[i].label);
  }
  if (ballots_.empty()) throw std::invalid_argument("profile has no ballots");
  std::vector<char> hit(n);
  for (const Ballot& b : ballots_) {
    if (b.weight < 1) throw std::invalid_argument("ballot weight must be >= 1");
    if (static_cast<int>(b.ranking.size()) != n)
      throw std::invalid_argument("ballot ranking must cover all alternatives");
    std::fill(hit.begin(), hit.end(), 0);
    for (int id : b.ranking) {
      if (id < 0 || id >= n || hit[id])
        throw std::invalid_argument("ballot ranking is not a permutation");
      hit[id] = 1;
    }
    num_voters_ += b.weight;
  }
}

const std::string& PreferenceProfile::label(int id) const {
  return alternatives_.at(id).label;
}

std::vector<std::string> PreferenceProfile::labels() const {
  std::vector<std::string> out;
  out.reserve(alternatives_.size());
  for (const Alternative& a : alternatives_) out.push_back(a.label);
  return out;
}

std::optional<int> PreferenceProfile::index_of(std::string_view label) const {
  for (const Alternative& a : alternatives_)
    if (a.label == label) return a.id;
  return std::nullopt;
}

PreferenceProfile parse_profile(std::string_view text) {
  std::vector<Alternative> alternatives;
  std::unordered_map<std::string_view, int> index;
  std::vector<Ballot> ballots;
  bool header_seen = false;

  int lineno = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!header_seen) {
      constexpr std::string_view kHeader = "alternatives:";
      if (line.substr(0, kHeader.size()) != kHeader)
        throw ParseError(lineno, "expected 'alternatives:' header");
      for (std::string_view part : split(line.substr(kHeader.size()), ',')) {
        std::string_view label = trim(part);
        if (label.empty()) throw ParseError(lineno, "empty alternative label");
        int id = static_cast<int>(alternatives.size());
        if (!index.emplace(label, id).second)
          throw ParseError(lineno, "duplicate alternative label: " +
                                       std::string(label));
        alternatives.push_back({id, std::string(label)});
      }
      if (alternatives.size() < 2)
        throw ParseError(lineno, "need at least 2 alternatives");
      header_seen = true;
      continue;
    }

    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos)
      throw ParseError(lineno, "expected 'COUNT: ranking' line");
    std::string_view count_part = trim(line.substr(0, colon));
    long long weight = 0;
    auto [ptr, ec] = std::from_chars(
        count_part.data(), count_part.data() + count_part.size(), weight);
    if (ec != std::errc() || ptr != count_part.data() + count_part.size())
      throw ParseError(lineno, "ballot count is not an integer: " +
                                   std::string(count_part));
    if (weight < 1) throw ParseError(lineno, "ballot count must be >= 1");

    Ballot ballot;
    ballot.weight = weight;
    std::vector<char> hit(alternatives.size());
    for (std::string_view part : split(line.substr(colon + 1), '>')) {
      std::string_view label = trim(part);
      auto it = index.find(label);
      if (it == index.end())
        throw ParseError(lineno,
                         "unknown alternative: " + std::string(label));
      if (hit[it->second])
        throw ParseError(lineno, "alternative ranked twice: " +
                                     std::string(label));
      hit[it->second] = 1;
      ballot.ranking.push_back(it->second);
    }
    if (ballot.ranking.size() != alternatives.size())
      throw ParseError(lineno, "ranking does not cover all alternatives");
    ballots.push_back(std::move(ballot));
  }

  if (!header_seen) throw ParseError(lineno, "missing 'alternatives:' header");
  if (ballots.empty()) throw ParseError(lineno, "no ballots");
  return PreferenceProfile(std::move(alternatives), std::move(ballots));
}

namespace {

// pos[b][a] = rank position of alternative a on ballot b (0 = top).
std::vector<std::vector<int>> positions(const PreferenceProfile& profile) {
  std::vector<std::vector<int>> pos(profile.ballots().size(),
                                    std::vector<int>(profile.num_alternatives()));
  for (std::size_t b = 0; b < profile.ballots().size(); ++b) {
    const std::vector<int>& r = profile.ballots()[b].ranking;
    for (int i = 0; i < static_cast<int>(r.size()); ++i) pos[b][r[i]] = i;
  }
  return pos;
}

}  // namespace

long long margin(const PreferenceProfile& profile, int x, int y) {
  const int n = profile.num_alternatives();
  if (x < 0 || x >= n || y < 0 || y >= n || x == y)
    throw std::invalid_argument("margin requires two distinct alternatives");
  long long m = 0;
  for (const Ballot& b : profile.ballots()) {
    for (int id : b.ranking) {
      if (id == x) {
        m += b.weight;
        break;
      }
      if (id == y) {
        m -= b.weight;
        break;
      }
    }
  }
  return m;
}

MarginGraph margin_graph(const PreferenceProfile& profile) {
  const int n = profile.num_alternatives();
  const auto pos = positions(profile);
  MarginGraph g;
  g.n = n;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      long long m = 0;
      for (std::size_t b = 0; b < pos.size(); ++b)
        m += pos[b][x] < pos[b][y] ? profile.ballots()[b].weight
                                   : -profile.ballots()[b].weight;
      if (m > 0) {
        g.edges.push_back({x, y, m});
      } else if (m < 0) {
        g.edges.push_back({y, x, -m});
      } else {
        g.edges.push_back({x, y, 0});
        g.edges.push_back({y, x, 0});
      }
    }
  }
  return g;
}

void validate_margin_graph(const MarginGraph& g) {
  if (g.n < 2) throw std::invalid_argument("margin graph needs n >= 2");
  // pair_state: 0 unseen, 1 one positive edge, 2 one zero edge, 3 both zero.
  std::vector<char> pair_state(static_cast<std::size_t>(g.n) * g.n, 0);
  auto key = [&](int a, int b) {
    return static_cast<std::size_t>(std::min(a, b)) * g.n + std::max(a, b);
  };
  for (const MarginEdge& e : g.edges) {
    if (e.from < 0 || e.from >= g.n || e.to < 0 || e.to >= g.n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.from == e.to) throw std::invalid_argument("self loop in margin graph");
    if (e.margin < 0) throw std::invalid_argument("negative margin");
    char& state = pair_state[key(e.from, e.to)];
    if (e.margin > 0) {
      if (state != 0)
        throw std::invalid_argument("conflicting edges for one pair");
      state = 1;
    } else {
      if (state == 1 || state == 3)
        throw std::invalid_argument("conflicting edges for one pair");
      state = state == 2 ? 3 : 2;
    }
  }
  for (int x = 0; x < g.n; ++x)
    for (int y = x + 1; y < g.n; ++y) {
      char state = pair_state[key(x, y)];
      if (state == 0) throw std::invalid_argument("pair without any edge");
      if (state == 2)
        throw std::invalid_argument("zero-margin pair missing reverse edge");
    }
}

std::optional<int> condorcet_winner(const MarginGraph& g) {
  std::vector<int> indeg(g.n, 0);
  for (const MarginEdge& e : g.edges) ++indeg[e.to];
  std::optional<int> winner;
  for (int v = 0; v < g.n; ++v) {
    if (indeg[v] == 0) {
      if (winner) return std::nullopt;  // malformed input; stay defensive
      winner = v;
    }
  }
  return winner;
}

std::vector<long long> plurality_scores(const PreferenceProfile& profile) {
  std::vector<long long> scores(profile.num_alternatives(), 0);
  for (const Ballot& b : profile.ballots()) scores[b.ranking[0]] += b.weight;
  return scores;
}

std::vector<long long> borda_scores(const PreferenceProfile& profile) {
  const int n = profile.num_alternatives();
  std::vector<long long> scores(n, 0);
  for (const Ballot& b : profile.ballots())
    for (int i = 0; i < n; ++i)
      scores[b.ranking[i]] += b.weight * (n - i);
  return scores;
}

}  // namespace riverput
