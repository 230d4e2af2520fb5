#pragma once

// Exact solvers for the Possible President and Necessary President problems:
// once every party nominates a single candidate, can (resp. must) the
// distinguished party's nominee be a Schulze winner of the reduced election?
//
// Four procedures are provided: specialized linear-time solvers for
// two-ballot elections, a brute-force nomination scan, and a
// fixed-parameter-tractable tree search for Possible President on
// three-ballot elections.  `solve` dispatches between them.

#include <bit>
#include <chrono>
#include <cstdint>
#include <span>
#include <utility>

#include "president/core.hpp"
#include "president/schulze.hpp"

namespace president {

enum class Problem { possible, necessary };
enum class Algorithm { automatic, brute, two_voter, fpt3 };

inline constexpr std::uint64_t kDefaultNominationBudget = 100'000'000;

// Thrown when a solver would exceed its enumeration budget.  Distinct from
// std::invalid_argument so callers can tell resource refusal from bad input.
class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(const std::string& what)
      : std::runtime_error(what) {}
};

struct SolveStats {
  std::uint64_t nominations_examined = 0;
  std::uint64_t trees_examined = 0;
  double elapsed_seconds = 0.0;
};

// Solver result.  For Possible with answer=yes, `witness` is a nomination
// under which the distinguished nominee wins.  For Necessary with
// answer=yes, `necessary_candidate` is a distinguished-party candidate that
// wins every nomination naming them; with answer=no, `counterexamples`
// holds, for each distinguished-party candidate, one nomination that
// candidate loses.
struct Verdict {
  bool answer = false;
  std::optional<Nomination> witness;
  std::optional<int> necessary_candidate;
  std::vector<std::pair<int, Nomination>> counterexamples;
  std::string algorithm;
  SolveStats stats;
};

inline std::string_view problem_name(Problem p) {
  return p == Problem::possible ? "possible" : "necessary";
}

inline std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::automatic: return "auto";
    case Algorithm::brute: return "brute";
    case Algorithm::two_voter: return "two-voter";
    case Algorithm::fpt3: return "fpt3";
  }
  return "";
}

inline Problem parse_problem(std::string_view name) {
  if (name == "possible") return Problem::possible;
  if (name == "necessary") return Problem::necessary;
  throw std::invalid_argument("unknown problem: " + std::string(name));
}

inline Algorithm parse_algorithm(std::string_view name) {
  if (name == "auto") return Algorithm::automatic;
  if (name == "brute") return Algorithm::brute;
  if (name == "two-voter") return Algorithm::two_voter;
  if (name == "fpt3") return Algorithm::fpt3;
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

namespace detail {

inline void set_bit(std::uint64_t* mask, int i) {
  mask[i >> 6] |= std::uint64_t{1} << (i & 63);
}
inline void clear_bit(std::uint64_t* mask, int i) {
  mask[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}
inline bool test_bit(const std::uint64_t* mask, int i) {
  return (mask[i >> 6] >> (i & 63)) & 1;
}

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace detail

// Fast test of whether a candidate is a Schulze winner of the election
// restricted to a candidate subset, without rebuilding the reduced election.
// It exploits the threshold view of beatpath strengths: str(a, b) >= w
// exactly when b is reachable from a using arcs of weight >= w, so p wins
// the restriction M iff, for every distinct arc weight w, every member of M
// that reaches p through weight->=w arcs inside M is also reachable from p
// that way.  One backward and one (early-exiting) forward traversal per
// threshold; restrictions are bitmasks over roster indices.
class RestrictionWinnerCheck {
 public:
  explicit RestrictionWinnerCheck(const WeightedMajorityGraph& g)
      : n_(g.vertex_count()), words_((n_ + 63) / 64) {
    std::vector<int> weights;
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (g.weight[a][b] > 0) weights.push_back(g.weight[a][b]);
    std::sort(weights.begin(), weights.end(), std::greater<int>());
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
    levels_ = std::move(weights);
    const std::size_t stride = static_cast<std::size_t>(n_) * words_;
    in_.assign(levels_.size() * stride, 0);
    out_.assign(levels_.size() * stride, 0);
    for (std::size_t l = 0; l < levels_.size(); ++l)
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
          if (g.weight[a][b] >= levels_[l]) {
            detail::set_bit(&out_[l * stride + static_cast<std::size_t>(a) * words_], b);
            detail::set_bit(&in_[l * stride + static_cast<std::size_t>(b) * words_], a);
          }
  }

  int vertex_count() const { return n_; }
  std::size_t words() const { return words_; }

  // True iff p is a Schulze winner of the election restricted to `mask`
  // (a roster-indexed bitset of words() words that must contain p).
  bool wins(std::span<const std::uint64_t> mask, int p) const {
    if (p < 0 || p >= n_ || !detail::test_bit(mask.data(), p))
      throw std::invalid_argument("candidate not in restriction");
    return words_ == 1 ? wins_single(mask[0], p) : wins_multi(mask.data(), p);
  }

  // Convenience overload building the bitmask from a candidate list.
  bool wins(const std::vector<int>& restriction, int p) const {
    std::vector<std::uint64_t> mask(words_, 0);
    for (int c : restriction) {
      if (c < 0 || c >= n_)
        throw std::invalid_argument("restriction member out of range");
      detail::set_bit(mask.data(), c);
    }
    return wins(std::span<const std::uint64_t>(mask), p);
  }

 private:
  bool wins_single(std::uint64_t mask, int p) const {
    const std::uint64_t pbit = std::uint64_t{1} << p;
    const std::size_t stride = static_cast<std::size_t>(n_);
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      const std::uint64_t* in = &in_[l * stride];
      // Backward closure: everyone in the restriction with a beatpath of
      // this strength (or more) into p.
      std::uint64_t rin = pbit, frontier = pbit;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint64_t add = in[v] & mask & ~rin;
        rin |= add;
        frontier |= add;
      }
      if (rin == pbit) continue;
      // Forward closure from p; stop as soon as it covers the attackers.
      const std::uint64_t* out = &out_[l * stride];
      std::uint64_t rout = pbit;
      frontier = pbit;
      while (frontier && (rin & ~rout) != 0) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint64_t add = out[v] & mask & ~rout;
        rout |= add;
        frontier |= add;
      }
      if ((rin & ~rout) != 0) return false;
    }
    return true;
  }

  bool covers(const std::uint64_t* big, const std::uint64_t* small) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (small[w] & ~big[w]) return false;
    return true;
  }

  // Closure of {p} in the level-l graph (rows = in- or out-neighbourhoods),
  // intersected with mask, written into reach.
  void close(const std::uint64_t* rows, const std::uint64_t* mask, int p,
             std::vector<std::uint64_t>& reach,
             std::vector<int>& queue) const {
    std::fill(reach.begin(), reach.end(), 0);
    detail::set_bit(reach.data(), p);
    queue.clear();
    queue.push_back(p);
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      const std::uint64_t* row = rows + static_cast<std::size_t>(v) * words_;
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t add = row[w] & mask[w] & ~reach[w];
        reach[w] |= add;
        while (add) {
          queue.push_back(static_cast<int>(w * 64) + std::countr_zero(add));
          add &= add - 1;
        }
      }
    }
  }

  bool wins_multi(const std::uint64_t* mask, int p) const {
    const std::size_t stride = static_cast<std::size_t>(n_) * words_;
    std::vector<std::uint64_t> rin(words_), rout(words_), only_p(words_, 0);
    std::vector<int> queue;
    detail::set_bit(only_p.data(), p);
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      close(&in_[l * stride], mask, p, rin, queue);
      if (std::equal(rin.begin(), rin.end(), only_p.begin())) continue;
      close(&out_[l * stride], mask, p, rout, queue);
      if (!covers(rout.data(), rin.data())) return false;
    }
    return true;
  }

  int n_;
  std::size_t words_;
  std::vector<int> levels_;  // distinct arc weights, descending
  std::vector<std::uint64_t> in_;
  std::vector<std::uint64_t> out_;
};

// ---------------------------------------------------------------------------
// Two-voter solvers.
//
// With exactly two ballots the majority graph is transitive (an arc (a, b)
// means both voters rank a above b), so a candidate wins an election iff
// they have no in-arc at all.  Both problems then decompose per party.
// ---------------------------------------------------------------------------

namespace detail {

inline void require_voters(const PartyElection& pe, int expected,
                           const char* algorithm) {
  if (pe.election.voter_count() != expected)
    throw std::invalid_argument(std::string(algorithm) + " requires exactly " +
                                std::to_string(expected) + " ballots");
}

}  // namespace detail

// Possible President with two ballots.  For each distinguished candidate p:
// delete every in-neighbor of p; p can win iff every party retains a
// candidate.  The witness nominates, per party, the first survivor in
// roster order (and p itself for the distinguished party).
inline Verdict solve_pp_two_voters(const PartyElection& pe) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_voters(pe, 2, "two-voter algorithm");
  const WeightedMajorityGraph g = weighted_majority_graph(pe.election);
  const int k = pe.party_count();
  Verdict verdict;
  verdict.algorithm = "two-voter";
  for (int p : pe.parties[static_cast<std::size_t>(pe.distinguished)]) {
    Nomination witness;
    witness.by_party.assign(static_cast<std::size_t>(k), -1);
    bool feasible = true;
    for (int i = 0; i < k && feasible; ++i) {
      if (i == pe.distinguished) {
        witness.by_party[static_cast<std::size_t>(i)] = p;
        continue;
      }
      feasible = false;
      for (int c : pe.parties[static_cast<std::size_t>(i)])
        if (!g.has_arc(c, p)) {
          witness.by_party[static_cast<std::size_t>(i)] = c;
          feasible = true;
          break;
        }
    }
    if (feasible) {
      verdict.answer = true;
      verdict.witness = std::move(witness);
      break;
    }
  }
  verdict.stats.elapsed_seconds = detail::seconds_since(start);
  return verdict;
}

// Necessary President with two ballots.  A distinguished candidate p wins
// every nomination naming them iff p has no in-neighbor outside their own
// party (fellow party members are never nominated alongside p).  If all
// distinguished candidates fail, each counterexample nominates one outside
// in-neighbor of p plus the first member of every remaining party.
inline Verdict solve_np_two_voters(const PartyElection& pe) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_voters(pe, 2, "two-voter algorithm");
  const WeightedMajorityGraph g = weighted_majority_graph(pe.election);
  const int k = pe.party_count();
  const int n = pe.election.candidate_count();
  std::vector<int> party_of(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < k; ++i)
    for (int c : pe.parties[static_cast<std::size_t>(i)])
      party_of[static_cast<std::size_t>(c)] = i;
  Verdict verdict;
  verdict.algorithm = "two-voter";
  for (int p : pe.parties[static_cast<std::size_t>(pe.distinguished)]) {
    int attacker = -1;
    for (int c = 0; c < n && attacker < 0; ++c)
      if (party_of[static_cast<std::size_t>(c)] != pe.distinguished &&
          g.has_arc(c, p))
        attacker = c;
    if (attacker < 0) {
      verdict.answer = true;
      verdict.necessary_candidate = p;
      verdict.counterexamples.clear();
      break;
    }
    Nomination counter;
    counter.by_party.assign(static_cast<std::size_t>(k), -1);
    counter.by_party[static_cast<std::size_t>(pe.distinguished)] = p;
    counter.by_party[static_cast<std::size_t>(
        party_of[static_cast<std::size_t>(attacker)])] = attacker;
    for (int i = 0; i < k; ++i)
      if (counter.by_party[static_cast<std::size_t>(i)] < 0)
        counter.by_party[static_cast<std::size_t>(i)] =
            pe.parties[static_cast<std::size_t>(i)][0];
    verdict.counterexamples.emplace_back(p, std::move(counter));
  }
  verdict.stats.elapsed_seconds = detail::seconds_since(start);
  return verdict;
}

// ---------------------------------------------------------------------------
// Brute-force solvers: scan nominations in lexicographic order.
// ---------------------------------------------------------------------------

namespace detail {

inline void require_budget(const PartyElection& pe, std::uint64_t budget) {
  const std::uint64_t total = nomination_count(pe);
  if (total > budget)
    throw budget_exceeded("budget exceeded: instance has " +
                          std::to_string(total) + " nominations, budget is " +
                          std::to_string(budget));
}

}  // namespace detail

// Possible President by exhaustive scan.  Returns the lexicographically
// first witness nomination (party-major order, members in roster order), or
// examines all prod |P_i| nominations before answering no.
inline Verdict solve_pp_brute(const PartyElection& pe,
                              std::uint64_t budget = kDefaultNominationBudget) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_budget(pe, budget);
  const WeightedMajorityGraph g = weighted_majority_graph(pe.election);
  const RestrictionWinnerCheck checker(g);
  const int k = pe.party_count();
  std::vector<std::uint64_t> mask(checker.words(), 0);
  std::vector<int> digit(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    detail::set_bit(mask.data(), pe.parties[static_cast<std::size_t>(i)][0]);
  Verdict verdict;
  verdict.algorithm = "brute";
  while (true) {
    ++verdict.stats.nominations_examined;
    const int p = pe.parties[static_cast<std::size_t>(pe.distinguished)]
                            [static_cast<std::size_t>(
                                digit[static_cast<std::size_t>(pe.distinguished)])];
    if (checker.wins(std::span<const std::uint64_t>(mask), p)) {
      verdict.answer = true;
      Nomination witness;
      witness.by_party.resize(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        witness.by_party[static_cast<std::size_t>(i)] =
            pe.parties[static_cast<std::size_t>(i)]
                      [static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])];
      verdict.witness = std::move(witness);
      break;
    }
    int i = k - 1;
    for (; i >= 0; --i) {
      const auto& party = pe.parties[static_cast<std::size_t>(i)];
      detail::clear_bit(mask.data(),
                        party[static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])]);
      if (++digit[static_cast<std::size_t>(i)] <
          static_cast<int>(party.size())) {
        detail::set_bit(mask.data(),
                        party[static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])]);
        break;
      }
      digit[static_cast<std::size_t>(i)] = 0;
      detail::set_bit(mask.data(), party[0]);
    }
    if (i < 0) break;  // odometer wrapped: every nomination examined
  }
  verdict.stats.elapsed_seconds = detail::seconds_since(start);
  return verdict;
}

// Necessary President by exhaustive scan.  For each distinguished candidate
// p (in roster order), enumerates all nominations of the other parties with
// p fixed; p succeeds iff they win all of them.  Answers yes at the first
// succeeding p; otherwise collects, per distinguished candidate, the
// lexicographically first losing nomination.
inline Verdict solve_np_brute(const PartyElection& pe,
                              std::uint64_t budget = kDefaultNominationBudget) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_budget(pe, budget);
  const WeightedMajorityGraph g = weighted_majority_graph(pe.election);
  const RestrictionWinnerCheck checker(g);
  const int k = pe.party_count();
  Verdict verdict;
  verdict.algorithm = "brute";
  for (int p : pe.parties[static_cast<std::size_t>(pe.distinguished)]) {
    std::vector<std::uint64_t> mask(checker.words(), 0);
    std::vector<int> digit(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
      detail::set_bit(mask.data(), i == pe.distinguished
                                       ? p
                                       : pe.parties[static_cast<std::size_t>(i)][0]);
    bool survives = true;
    while (true) {
      ++verdict.stats.nominations_examined;
      if (!checker.wins(std::span<const std::uint64_t>(mask), p)) {
        survives = false;
        Nomination counter;
        counter.by_party.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
          counter.by_party[static_cast<std::size_t>(i)] =
              i == pe.distinguished
                  ? p
                  : pe.parties[static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])];
        verdict.counterexamples.emplace_back(p, std::move(counter));
        break;
      }
      int i = k - 1;
      for (; i >= 0; --i) {
        if (i == pe.distinguished) continue;  // p stays fixed
        const auto& party = pe.parties[static_cast<std::size_t>(i)];
        detail::clear_bit(mask.data(),
                          party[static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])]);
        if (++digit[static_cast<std::size_t>(i)] <
            static_cast<int>(party.size())) {
          detail::set_bit(mask.data(),
                          party[static_cast<std::size_t>(digit[static_cast<std::size_t>(i)])]);
          break;
        }
        digit[static_cast<std::size_t>(i)] = 0;
        detail::set_bit(mask.data(), party[0]);
      }
      if (i < 0) break;  // p won every nomination of the other parties
    }
    if (survives) {
      verdict.answer = true;
      verdict.necessary_candidate = p;
      verdict.counterexamples.clear();
      break;
    }
  }
  verdict.stats.elapsed_seconds = detail::seconds_since(start);
  return verdict;
}

// ---------------------------------------------------------------------------
// Party trees and the three-voter FPT algorithm for Possible President.
// ---------------------------------------------------------------------------

// Rooted out-tree on party indices (root = distinguished party).
struct PartyTree {
  int root = 0;
  std::vector<int> parent;  // parent[root] == -1

  std::vector<std::vector<int>> children() const {
    std::vector<std::vector<int>> ch(parent.size());
    for (std::size_t v = 0; v < parent.size(); ++v)
      if (parent[v] >= 0) ch[static_cast<std::size_t>(parent[v])].push_back(static_cast<int>(v));
    return ch;
  }
};

// Number of labeled trees on k nodes (Cayley: k^(k-2)), saturating.
inline std::uint64_t labeled_tree_count(int k) {
  if (k <= 2) return 1;
  std::uint64_t total = 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (int i = 0; i < k - 2; ++i) {
    if (total > kMax / static_cast<std::uint64_t>(k)) return kMax;
    total *= static_cast<std::uint64_t>(k);
  }
  return total;
}

// Streams every labeled tree on k nodes exactly once, oriented away from
// `root`, by decoding all k^(k-2) Pruefer sequences.
class PartyTreeEnumerator {
 public:
  PartyTreeEnumerator(int k, int root) : k_(k), root_(root) {
    if (k < 1) throw std::invalid_argument("party count must be positive");
    if (root < 0 || root >= k)
      throw std::invalid_argument("root party index out of range");
    if (k_ > 2) seq_.assign(static_cast<std::size_t>(k_ - 2), 0);
  }

  std::optional<PartyTree> next() {
    if (exhausted_) return std::nullopt;
    PartyTree t = decode();
    advance();
    return t;
  }

 private:
  PartyTree decode() const {
    PartyTree t;
    t.root = root_;
    t.parent.assign(static_cast<std::size_t>(k_), -1);
    if (k_ == 1) return t;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(k_ - 1));
    if (k_ == 2) {
      edges.emplace_back(0, 1);
    } else {
      std::vector<int> deg(static_cast<std::size_t>(k_), 1);
      for (int s : seq_) ++deg[static_cast<std::size_t>(s)];
      int ptr = 0;
      while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
      int leaf = ptr;
      for (int s : seq_) {
        edges.emplace_back(leaf, s);
        if (--deg[static_cast<std::size_t>(s)] == 1 && s < ptr) {
          leaf = s;
        } else {
          ++ptr;
          while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
          leaf = ptr;
        }
      }
      edges.emplace_back(leaf, k_ - 1);
    }
    // Orient away from the root.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k_));
    for (auto [a, b] : edges) {
      adj[static_cast<std::size_t>(a)].push_back(b);
      adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> stack{root_};
    std::vector<char> seen(static_cast<std::size_t>(k_), 0);
    seen[static_cast<std::size_t>(root_)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          t.parent[static_cast<std::size_t>(u)] = v;
          stack.push_back(u);
        }
    }
    return t;
  }

  void advance() {
    for (std::size_t i = seq_.size(); i-- > 0;) {
      if (++seq_[i] < k_) return;
      seq_[i] = 0;
    }
    exhausted_ = true;
  }

  int k_;
  int root_;
  std::vector<int> seq_;
  bool exhausted_ = false;
};

inline std::vector<PartyTree> enumerate_party_trees(int k, int root) {
  std::vector<PartyTree> all;
  PartyTreeEnumerator it(k, root);
  while (auto tree = it.next()) all.push_back(std::move(*tree));
  return all;
}

// comp[i]: the members of party i compatible with the tree under scrutiny,
// in roster order.
struct CompatibilityTable {
  std::vector<std::vector<int>> comp;
};

namespace detail {

// Bottom-up compatibility over arbitrary party member lists (the FPT solver
// passes pruned lists).  q is compatible with an internal node iff for every
// child party some compatible child candidate is beaten by q directly.
inline CompatibilityTable compatible_sets_impl(
    const std::vector<std::vector<int>>& parties,
    const WeightedMajorityGraph& g, const PartyTree& t) {
  const int k = static_cast<int>(parties.size());
  const auto children = t.children();
  CompatibilityTable table;
  table.comp.assign(static_cast<std::size_t>(k), {});
  // Iterative post-order over the tree.
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(k));
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : children[static_cast<std::size_t>(v)]) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int q_party = *it;
    const auto& kids = children[static_cast<std::size_t>(q_party)];
    if (kids.empty()) {
      table.comp[static_cast<std::size_t>(q_party)] =
          parties[static_cast<std::size_t>(q_party)];
      continue;
    }
    for (int q : parties[static_cast<std::size_t>(q_party)]) {
      bool compatible = true;
      for (int child : kids) {
        bool found = false;
        for (int s : table.comp[static_cast<std::size_t>(child)])
          if (g.has_arc(q, s)) {
            found = true;
            break;
          }
        if (!found) {
          compatible = false;
          break;
        }
      }
      if (compatible)
        table.comp[static_cast<std::size_t>(q_party)].push_back(q);
    }
  }
  return table;
}

}  // namespace detail

// Compatibility table of a party tree against a majority graph (intended for
// three-ballot elections after weight-3 pruning; see
// solve_pp_three_voters_fpt).
inline CompatibilityTable compatible_sets(const PartyElection& pe,
                                          const WeightedMajorityGraph& g,
                                          const PartyTree& t) {
  if (static_cast<int>(pe.parties.size()) != static_cast<int>(t.parent.size()))
    throw std::invalid_argument("tree size does not match party count");
  return detail::compatible_sets_impl(pe.parties, g, t);
}

// Possible President with three ballots, fixed-parameter tractable in the
// party count k.  Per distinguished candidate p: remove every candidate with
// a weight-3 arc into p (they can never be nominated in a winning
// nomination); afterwards all beatpaths into p have strength at most 1 and
// the majority graph is a tournament, so p wins a nomination iff p reaches
// every nominee.  Such a reachability pattern exists iff some rooted party
// tree admits a compatible nomination, found by scanning all k^(k-2)
// labeled trees with a bottom-up table and reconstructing the witness
// top-down.  The budget caps distinguished candidates x trees.
inline Verdict solve_pp_three_voters_fpt(
    const PartyElection& pe, std::uint64_t budget = kDefaultNominationBudget) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_voters(pe, 3, "fpt3 algorithm");
  const int k = pe.party_count();
  const auto& distinguished = pe.parties[static_cast<std::size_t>(pe.distinguished)];
  {
    const std::uint64_t trees = labeled_tree_count(k);
    const std::uint64_t members = static_cast<std::uint64_t>(distinguished.size());
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t total =
        trees > kMax / members ? kMax : trees * members;
    if (total > budget)
      throw budget_exceeded("budget exceeded: up to " + std::to_string(total) +
                            " party trees, budget is " +
                            std::to_string(budget));
  }
  const WeightedMajorityGraph g = weighted_majority_graph(pe.election);
  Verdict verdict;
  verdict.algorithm = "fpt3";
  for (int p : distinguished) {
    // Weight-3 pruning: no nomination containing such a candidate can make
    // p a winner, since the weight-3 in-arc forces str(c, p) = 3 while
    // transitivity of the weight-3 subgraph caps str(p, c) at 1.
    std::vector<std::vector<int>> pruned(static_cast<std::size_t>(k));
    bool emptied = false;
    for (int i = 0; i < k && !emptied; ++i) {
      if (i == pe.distinguished) {
        pruned[static_cast<std::size_t>(i)] = {p};
        continue;
      }
      for (int c : pe.parties[static_cast<std::size_t>(i)])
        if (g.weight[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)] != 3)
          pruned[static_cast<std::size_t>(i)].push_back(c);
      emptied = pruned[static_cast<std::size_t>(i)].empty();
    }
    if (emptied) continue;
    PartyTreeEnumerator trees(k, pe.distinguished);
    while (auto t = trees.next()) {
      ++verdict.stats.trees_examined;
      const CompatibilityTable table =
          detail::compatible_sets_impl(pruned, g, *t);
      const auto& root_comp =
          table.comp[static_cast<std::size_t>(pe.distinguished)];
      if (std::find(root_comp.begin(), root_comp.end(), p) == root_comp.end())
        continue;
      // Witness: walk the tree top-down, nominating for each child party the
      // first compatible candidate the parent nominee beats.
      Nomination witness;
      witness.by_party.assign(static_cast<std::size_t>(k), -1);
      witness.by_party[static_cast<std::size_t>(pe.distinguished)] = p;
      const auto children = t->children();
      std::vector<int> stack{pe.distinguished};
      while (!stack.empty()) {
        const int party = stack.back();
        stack.pop_back();
        const int nominee = witness.by_party[static_cast<std::size_t>(party)];
        for (int child : children[static_cast<std::size_t>(party)]) {
          for (int s : table.comp[static_cast<std::size_t>(child)])
            if (g.has_arc(nominee, s)) {
              witness.by_party[static_cast<std::size_t>(child)] = s;
              break;
            }
          stack.push_back(child);
        }
      }
      verdict.answer = true;
      verdict.witness = std::move(witness);
      break;
    }
    if (verdict.answer) break;
  }
  verdict.stats.elapsed_seconds = detail::seconds_since(start);
  return verdict;
}

// Dispatch.  `automatic` picks two-voter for |V|=2, fpt3 for |V|=3 Possible,
// and brute force otherwise; explicitly requested algorithms must be
// applicable (voter count, problem) or std::invalid_argument is thrown.
inline Verdict solve(const PartyElection& pe, Problem problem,
                     Algorithm algorithm = Algorithm::automatic,
                     std::uint64_t budget = kDefaultNominationBudget) {
  const int voters = pe.election.voter_count();
  if (algorithm == Algorithm::automatic) {
    if (voters == 2)
      algorithm = Algorithm::two_voter;
    else if (voters == 3 && problem == Problem::possible)
      algorithm = Algorithm::fpt3;
    else
      algorithm = Algorithm::brute;
  }
  switch (algorithm) {
    case Algorithm::two_voter:
      detail::require_voters(pe, 2, "two-voter algorithm");
      return problem == Problem::possible ? solve_pp_two_voters(pe)
                                          : solve_np_two_voters(pe);
    case Algorithm::fpt3:
      detail::require_voters(pe, 3, "fpt3 algorithm");
      if (problem != Problem::necessary)
        return solve_pp_three_voters_fpt(pe, budget);
      throw std::invalid_argument(
          "fpt3 algorithm solves Possible President only");
    case Algorithm::brute:
      return problem == Problem::possible ? solve_pp_brute(pe, budget)
                                          : solve_np_brute(pe, budget);
    case Algorithm::automatic:
      break;
  }
  throw std::logic_error("unreachable algorithm dispatch");
}

}  // namespace president
