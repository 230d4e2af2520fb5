#pragma once

// Schulze method: beatpath strengths via the widest-path closure of the
// weighted majority graph, and winner determination under the nonunique
// winner model (a candidate wins iff no other candidate has a strictly
// stronger beatpath against them).

#include "president/core.hpp"

namespace president {

// strength[a][b] is the strength of the strongest beatpath from a to b: the
// maximum over directed a→b paths of the minimum arc weight on the path, and
// 0 when b is unreachable from a.  The diagonal is meaningless; it is never
// written by the closure and must never be read.
struct StrengthMatrix {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> strength;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int str(int a, int b) const { return strength[a][b]; }
};

// Widest-path closure (cubic max-min dynamic program over intermediates).
inline StrengthMatrix beatpath_strengths(const WeightedMajorityGraph& g) {
  StrengthMatrix m;
  m.vertices = g.vertices;
  m.strength = g.weight;
  const int n = g.vertex_count();
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a) {
      if (a == k) continue;
      const int ak = m.strength[a][k];
      if (ak == 0) continue;
      const auto& row_k = m.strength[k];
      auto& row_a = m.strength[a];
      for (int b = 0; b < n; ++b) {
        if (b == a || b == k) continue;
        const int via = ak < row_k[b] ? ak : row_k[b];
        if (via > row_a[b]) row_a[b] = via;
      }
    }
  return m;
}

// Roster indices of all Schulze winners: candidates c with
// str(c, d) >= str(d, c) for every other candidate d.  Never empty when the
// election has at least one candidate.
inline std::vector<int> schulze_winner_indices(const Election& e) {
  const StrengthMatrix m = beatpath_strengths(weighted_majority_graph(e));
  const int n = m.vertex_count();
  std::vector<int> winners;
  for (int c = 0; c < n; ++c) {
    bool wins = true;
    for (int d = 0; d < n && wins; ++d)
      if (d != c && m.strength[c][d] < m.strength[d][c]) wins = false;
    if (wins) winners.push_back(c);
  }
  return winners;
}

inline std::vector<std::string> schulze_winners(const Election& e) {
  std::vector<std::string> names;
  for (int c : schulze_winner_indices(e)) names.push_back(e.candidates[c]);
  return names;
}

inline bool is_schulze_winner(const Election& e, int candidate) {
  if (candidate < 0 || candidate >= e.candidate_count())
    throw std::invalid_argument("unknown candidate index");
  const StrengthMatrix m = beatpath_strengths(weighted_majority_graph(e));
  for (int d = 0; d < m.vertex_count(); ++d)
    if (d != candidate && m.strength[candidate][d] < m.strength[d][candidate])
      return false;
  return true;
}

inline bool is_schulze_winner(const Election& e, std::string_view name) {
  return is_schulze_winner(e, e.require_candidate(name));
}

}  // namespace president
