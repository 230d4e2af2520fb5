#pragma once

// Core data model for party-based elections: candidate rosters, ballot
// profiles, party partitions, nominations, and the weighted majority graph
// induced by a profile of total orders.
//
// Candidates are identified by name at the interface; all computation uses
// dense roster indices.  The roster order is the canonical order everywhere
// a "set of candidates written as a sequence" is needed.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace president {

// An election: a candidate roster plus a profile of ballots.  Each ballot is
// a total order over the full roster, stored as candidate indices from most
// preferred to least preferred.
struct Election {
  std::vector<std::string> candidates;
  std::vector<std::vector<int>> votes;

  int candidate_count() const { return static_cast<int>(candidates.size()); }
  int voter_count() const { return static_cast<int>(votes.size()); }

  std::optional<int> find_candidate(std::string_view name) const {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (candidates[i] == name) return static_cast<int>(i);
    return std::nullopt;
  }

  int require_candidate(std::string_view name) const {
    if (auto i = find_candidate(name)) return *i;
    throw std::invalid_argument("unknown candidate: " + std::string(name));
  }

  // Throws std::invalid_argument if the roster contains duplicate names or
  // any ballot fails to rank the full roster exactly once.
  void validate() const {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (candidates[i] == candidates[j])
          throw std::invalid_argument("duplicate candidate: " + candidates[i]);
    const int n = candidate_count();
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (std::size_t v = 0; v < votes.size(); ++v) {
      if (static_cast<int>(votes[v].size()) != n)
        throw std::invalid_argument("vote " + std::to_string(v + 1) +
                                    " does not rank the full roster");
      std::fill(seen.begin(), seen.end(), 0);
      for (int c : votes[v]) {
        if (c < 0 || c >= n)
          throw std::invalid_argument("vote " + std::to_string(v + 1) +
                                      " ranks an unknown candidate");
        if (seen[static_cast<std::size_t>(c)])
          throw std::invalid_argument("vote " + std::to_string(v + 1) +
                                      " ranks " + candidates[c] + " twice");
        seen[static_cast<std::size_t>(c)] = 1;
      }
    }
  }
};

// An election whose roster is partitioned into parties, one of which is
// distinguished.  Party member lists are kept in roster order.
struct PartyElection {
  Election election;
  std::vector<std::vector<int>> parties;
  int distinguished = 0;

  int party_count() const { return static_cast<int>(parties.size()); }

  // Index of the party containing candidate c.
  int party_of(int c) const {
    for (std::size_t i = 0; i < parties.size(); ++i)
      for (int member : parties[i])
        if (member == c) return static_cast<int>(i);
    throw std::invalid_argument("candidate not assigned to any party");
  }

  // Throws std::invalid_argument unless the parties are nonempty, sorted by
  // roster index, pairwise disjoint, and cover the roster, and the
  // distinguished index is in range.
  void validate() const {
    election.validate();
    const int n = election.candidate_count();
    std::vector<char> assigned(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < parties.size(); ++i) {
      if (parties[i].empty())
        throw std::invalid_argument("party " + std::to_string(i + 1) +
                                    " is empty");
      int prev = -1;
      for (int c : parties[i]) {
        if (c < 0 || c >= n)
          throw std::invalid_argument("party " + std::to_string(i + 1) +
                                      " lists an unknown candidate");
        if (c <= prev)
          throw std::invalid_argument("party " + std::to_string(i + 1) +
                                      " members must be in roster order");
        if (assigned[static_cast<std::size_t>(c)])
          throw std::invalid_argument("candidate " + election.candidates[c] +
                                      " assigned to two parties");
        assigned[static_cast<std::size_t>(c)] = 1;
        prev = c;
      }
    }
    for (int c = 0; c < n; ++c)
      if (!assigned[static_cast<std::size_t>(c)])
        throw std::invalid_argument("candidate " + election.candidates[c] +
                                    " belongs to no party");
    if (distinguished < 0 || distinguished >= party_count())
      throw std::invalid_argument("distinguished party index out of range");
  }
};

// One nominee per party: by_party[i] is the roster index of party i's pick.
struct Nomination {
  std::vector<int> by_party;

  // The nominee set in ascending roster order.
  std::vector<int> sorted_candidates() const {
    std::vector<int> out = by_party;
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Weighted majority graph of an election.  An arc (a, b) of weight w > 0
// records that w more ballots prefer a to b than prefer b to a; pairwise
// ties appear as the absence of an arc, so at most one of (a, b), (b, a) is
// ever present and all stored weights are positive.
struct WeightedMajorityGraph {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> weight;  // weight[a][b] > 0 iff arc (a, b)

  int vertex_count() const { return static_cast<int>(vertices.size()); }

  bool has_arc(int a, int b) const { return weight[a][b] > 0; }
  int weight_of(int a, int b) const { return weight[a][b]; }

  // All arcs as (tail, head, weight) triples in row-major order.
  std::vector<std::tuple<int, int, int>> arcs() const {
    std::vector<std::tuple<int, int, int>> out;
    const int n = vertex_count();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (weight[a][b] > 0) out.emplace_back(a, b, weight[a][b]);
    return out;
  }

  int max_weight() const {
    int best = 0;
    for (const auto& row : weight)
      for (int w : row) best = std::max(best, w);
    return best;
  }
};

// Builds the weighted majority graph of an election.  Every arc weight has
// the same parity as the number of ballots and is at most that number.
inline WeightedMajorityGraph weighted_majority_graph(const Election& e) {
  const int n = e.candidate_count();
  WeightedMajorityGraph g;
  g.vertices = e.candidates;
  g.weight.assign(static_cast<std::size_t>(n), std::vector<int>(n, 0));
  if (n == 0) return g;
  std::vector<int> pos(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> prefer(static_cast<std::size_t>(n),
                                       std::vector<int>(n, 0));
  for (const auto& vote : e.votes) {
    for (int r = 0; r < n; ++r) pos[static_cast<std::size_t>(vote[r])] = r;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)])
          ++prefer[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        else
          ++prefer[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
      }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const int margin = prefer[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] -
                         prefer[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
      if (margin > 0)
        g.weight[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = margin;
      else if (margin < 0)
        g.weight[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -margin;
    }
  return g;
}

// Subgraph keeping exactly the arcs of weight k (k >= 1), on all vertices.
inline WeightedMajorityGraph threshold_subgraph(const WeightedMajorityGraph& g,
                                                int k) {
  if (k < 1) throw std::invalid_argument("threshold must be positive");
  WeightedMajorityGraph out;
  out.vertices = g.vertices;
  const int n = g.vertex_count();
  out.weight.assign(static_cast<std::size_t>(n), std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.weight[a][b] == k) out.weight[a][b] = k;
  return out;
}

// Restriction of an election to a candidate subset.  The reduced roster
// preserves original roster order and each ballot is restricted in place,
// so the reduced majority graph equals the restriction of the original one.
inline Election reduce(const Election& e, const std::vector<int>& nominees) {
  const int n = e.candidate_count();
  std::vector<char> keep(static_cast<std::size_t>(n), 0);
  for (int c : nominees) {
    if (c < 0 || c >= n) throw std::invalid_argument("nominee not in roster");
    if (keep[static_cast<std::size_t>(c)])
      throw std::invalid_argument("duplicate nominee: " + e.candidates[c]);
    keep[static_cast<std::size_t>(c)] = 1;
  }
  Election out;
  std::vector<int> remap(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < n; ++c)
    if (keep[static_cast<std::size_t>(c)]) {
      remap[static_cast<std::size_t>(c)] = static_cast<int>(out.candidates.size());
      out.candidates.push_back(e.candidates[c]);
    }
  out.votes.reserve(e.votes.size());
  for (const auto& vote : e.votes) {
    std::vector<int> restricted;
    restricted.reserve(out.candidates.size());
    for (int c : vote)
      if (keep[static_cast<std::size_t>(c)])
        restricted.push_back(remap[static_cast<std::size_t>(c)]);
    out.votes.push_back(std::move(restricted));
  }
  return out;
}

inline Election reduce(const Election& e, const Nomination& n) {
  return reduce(e, n.by_party);
}

// Appends `pairs` pairs of mutually reversed full-roster ballots (roster
// order and its reverse).  Every pairwise margin, and hence the majority
// graph, is unchanged.
inline Election pad_reversed_pairs(const Election& e, int pairs) {
  if (pairs < 0) throw std::invalid_argument("pair count must be nonnegative");
  Election out = e;
  std::vector<int> forward(static_cast<std::size_t>(e.candidate_count()));
  std::iota(forward.begin(), forward.end(), 0);
  std::vector<int> backward(forward.rbegin(), forward.rend());
  for (int i = 0; i < pairs; ++i) {
    out.votes.push_back(forward);
    out.votes.push_back(backward);
  }
  return out;
}

// Streams every nomination exactly once, in lexicographic order of the tuple
// (party 0's nominee, party 1's nominee, ...) with each party's members in
// roster order.  Holds a pointer to the party election, which must outlive
// the enumerator.
class NominationEnumerator {
 public:
  explicit NominationEnumerator(const PartyElection& pe) : pe_(&pe) {
    for (const auto& party : pe.parties)
      if (party.empty()) throw std::invalid_argument("empty party");
    digits_.assign(pe.parties.size(), 0);
  }

  // Next nomination, or nullopt once every nomination has been produced.
  std::optional<Nomination> next() {
    if (exhausted_) return std::nullopt;
    Nomination n;
    n.by_party.resize(digits_.size());
    for (std::size_t i = 0; i < digits_.size(); ++i)
      n.by_party[i] = pe_->parties[i][static_cast<std::size_t>(digits_[i])];
    advance();
    return n;
  }

 private:
  void advance() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < static_cast<int>(pe_->parties[i].size())) return;
      digits_[i] = 0;
    }
    exhausted_ = true;
  }

  const PartyElection* pe_;
  std::vector<int> digits_;
  bool exhausted_ = false;
};

inline std::vector<Nomination> enumerate_nominations(const PartyElection& pe) {
  std::vector<Nomination> all;
  NominationEnumerator it(pe);
  while (auto nomination = it.next()) all.push_back(std::move(*nomination));
  return all;
}

// Number of distinct nominations, saturating at the uint64 maximum.
inline std::uint64_t nomination_count(const PartyElection& pe) {
  std::uint64_t total = 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (const auto& party : pe.parties) {
    const auto size = static_cast<std::uint64_t>(party.size());
    if (size == 0) return 0;
    if (total > kMax / size) return kMax;
    total *= size;
  }
  return total;
}

}  // namespace president
