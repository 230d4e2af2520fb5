#pragma once

// Structured instance generators: six families of party elections encoding
// 2-balanced 3-SAT or multicolored clique, the path-tournament/alternative-
// path gadget machinery they build on, certificate decoders mapping
// nominations back to assignments or cliques, and small exhaustive oracles
// for the source problems.

#include <array>
#include <cstdint>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "president/core.hpp"

namespace president {

// ---------------------------------------------------------------------------
// 2-balanced 3-CNF formulas.
// ---------------------------------------------------------------------------

struct Literal {
  int var = 0;  // 0-based variable index
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

// A 3-CNF formula in which every variable occurs exactly twice positively
// and exactly twice negatively (hence 3m = 4n).  Duplicate literals within
// a clause are permitted.
struct BalancedCnf {
  int n = 0;  // variable count
  std::vector<std::array<Literal, 3>> clauses;

  int m() const { return static_cast<int>(clauses.size()); }

  // Throws std::invalid_argument listing every variable whose occurrence
  // counts are not exactly 2 positive / 2 negative.
  void validate() const {
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    std::vector<int> neg(static_cast<std::size_t>(n), 0);
    for (const auto& clause : clauses)
      for (const Literal& lit : clause) {
        if (lit.var < 0 || lit.var >= n)
          throw std::invalid_argument("literal references unknown variable");
        ++(lit.negated ? neg : pos)[static_cast<std::size_t>(lit.var)];
      }
    std::string offenders;
    for (int i = 0; i < n; ++i)
      if (pos[static_cast<std::size_t>(i)] != 2 ||
          neg[static_cast<std::size_t>(i)] != 2) {
        if (!offenders.empty()) offenders += ", ";
        offenders += "x" + std::to_string(i + 1) + " (" +
                     std::to_string(pos[static_cast<std::size_t>(i)]) + "+/" +
                     std::to_string(neg[static_cast<std::size_t>(i)]) + "-)";
      }
    if (!offenders.empty())
      throw std::invalid_argument(
          "formula is not 2-balanced; offending variables: " + offenders);
  }
};

inline bool evaluate(const BalancedCnf& f, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != f.n)
    throw std::invalid_argument("assignment size does not match variable count");
  for (const auto& clause : f.clauses) {
    bool satisfied = false;
    for (const Literal& lit : clause)
      if (assignment[static_cast<std::size_t>(lit.var)] != lit.negated) {
        satisfied = true;
        break;
      }
    if (!satisfied) return false;
  }
  return true;
}

struct SatResult {
  bool satisfiable = false;
  std::vector<bool> assignment;  // least witness (x1 varies slowest) if any
};

// Exhaustive satisfiability scan; refuses formulas with more than `limit`
// variables.  Returns the lexicographically least satisfying assignment
// (all-false counted first).
inline SatResult oracle_sat(const BalancedCnf& f, int limit = 24) {
  if (f.n > limit)
    throw std::invalid_argument("formula too large for exhaustive oracle (" +
                                std::to_string(f.n) + " > " +
                                std::to_string(limit) + " variables)");
  SatResult result;
  std::vector<bool> assignment(static_cast<std::size_t>(f.n), false);
  const std::uint64_t total = std::uint64_t{1} << f.n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (int i = 0; i < f.n; ++i)
      assignment[static_cast<std::size_t>(i)] = (bits >> (f.n - 1 - i)) & 1;
    if (evaluate(f, assignment)) {
      result.satisfiable = true;
      result.assignment = assignment;
      return result;
    }
  }
  return result;
}

// DIMACS CNF (p cnf <n> <m>; clauses are 1-based signed variables ending in
// 0; 'c' lines are comments).  Every clause must have exactly three
// literals; balance is checked separately via BalancedCnf::validate.
inline BalancedCnf parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  BalancedCnf f;
  int declared_clauses = -1;
  bool header_seen = false;
  std::vector<int> pending;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c" || first[0] == 'c') continue;
    if (first == "p") {
      std::string fmt;
      if (header_seen)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": duplicate DIMACS header");
      if (!(ls >> fmt >> f.n >> declared_clauses) || fmt != "cnf" || f.n < 0)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": malformed DIMACS header");
      header_seen = true;
      continue;
    }
    if (!header_seen)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": clause before DIMACS header");
    ls.clear();
    ls.str(line);
    int value;
    while (ls >> value) {
      if (value == 0) {
        if (pending.size() != 3)
          throw std::invalid_argument("line " + std::to_string(line_no) +
                                      ": clause does not have exactly 3 literals");
        std::array<Literal, 3> clause;
        for (int i = 0; i < 3; ++i) {
          const int v = pending[static_cast<std::size_t>(i)];
          const int var = std::abs(v) - 1;
          if (var >= f.n)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": literal exceeds variable count");
          clause[static_cast<std::size_t>(i)] = Literal{var, v < 0};
        }
        f.clauses.push_back(clause);
        pending.clear();
      } else {
        pending.push_back(value);
      }
    }
  }
  if (!header_seen) throw std::invalid_argument("missing DIMACS header");
  if (!pending.empty())
    throw std::invalid_argument("unterminated clause at end of input");
  if (declared_clauses >= 0 && declared_clauses != f.m())
    throw std::invalid_argument("header declares " +
                                std::to_string(declared_clauses) +
                                " clauses, found " + std::to_string(f.m()));
  return f;
}

inline std::string serialize_dimacs(const BalancedCnf& f) {
  std::ostringstream out;
  out << "p cnf " << f.n << ' ' << f.m() << '\n';
  for (const auto& clause : f.clauses) {
    for (const Literal& lit : clause)
      out << (lit.negated ? -(lit.var + 1) : lit.var + 1) << ' ';
    out << "0\n";
  }
  return out.str();
}

// Random 2-balanced formula: the 4n occurrence slots (two positive and two
// negative per variable) are shuffled and dealt into m = 4n/3 clauses.
inline BalancedCnf random_balanced_cnf(std::mt19937& rng, int n) {
  if (n <= 0 || n % 3 != 0)
    throw std::invalid_argument(
        "variable count must be a positive multiple of 3");
  std::vector<Literal> slots;
  slots.reserve(static_cast<std::size_t>(4 * n));
  for (int i = 0; i < n; ++i)
    for (int rep = 0; rep < 2; ++rep) {
      slots.push_back(Literal{i, false});
      slots.push_back(Literal{i, true});
    }
  std::shuffle(slots.begin(), slots.end(), rng);
  BalancedCnf f;
  f.n = n;
  for (std::size_t at = 0; at < slots.size(); at += 3)
    f.clauses.push_back({slots[at], slots[at + 1], slots[at + 2]});
  return f;
}

// ---------------------------------------------------------------------------
// Multicolored clique instances.
// ---------------------------------------------------------------------------

// A q-partite graph with uniform color-class size x and uniform inter-class
// edge-set size y (|F_{i,j}| = y for every pair i < j).
struct ColoredGraph {
  std::vector<std::vector<std::string>> classes;           // color -> vertices
  std::vector<std::pair<std::string, std::string>> edges;  // as given

  int color_count() const { return static_cast<int>(classes.size()); }
  int class_size() const {
    return classes.empty() ? 0 : static_cast<int>(classes[0].size());
  }

  std::optional<int> find_color(std::string_view vertex) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (const auto& name : classes[i])
        if (name == vertex) return static_cast<int>(i);
    return std::nullopt;
  }

  bool has_edge(std::string_view u, std::string_view v) const {
    for (const auto& [a, b] : edges)
      if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
  }

  // Throws std::invalid_argument unless all classes have the same nonzero
  // size, vertex names are globally distinct, and the edge list is a
  // duplicate-free set of inter-class edges with a uniform count per class
  // pair.
  void validate() const {
    if (classes.empty()) throw std::invalid_argument("no color classes");
    std::unordered_map<std::string, int> color_of;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].empty())
        throw std::invalid_argument("color class " + std::to_string(i + 1) +
                                    " is empty");
      if (classes[i].size() != classes[0].size())
        throw std::invalid_argument("color classes differ in size");
      for (const auto& name : classes[i])
        if (!color_of.emplace(name, static_cast<int>(i)).second)
          throw std::invalid_argument("duplicate vertex name: " + name);
    }
    const int q = color_count();
    std::vector<std::vector<int>> pair_count(
        static_cast<std::size_t>(q), std::vector<int>(static_cast<std::size_t>(q), 0));
    std::unordered_set<std::string> seen_edges;
    for (const auto& [u, v] : edges) {
      const auto cu = color_of.find(u);
      const auto cv = color_of.find(v);
      if (cu == color_of.end())
        throw std::invalid_argument("edge references unknown vertex: " + u);
      if (cv == color_of.end())
        throw std::invalid_argument("edge references unknown vertex: " + v);
      if (cu->second == cv->second)
        throw std::invalid_argument("edge within a color class: " + u + " -- " + v);
      const std::string key = u < v ? u + "\x1f" + v : v + "\x1f" + u;
      if (!seen_edges.insert(key).second)
        throw std::invalid_argument("duplicate edge: " + u + " -- " + v);
      ++pair_count[static_cast<std::size_t>(std::min(cu->second, cv->second))]
                  [static_cast<std::size_t>(std::max(cu->second, cv->second))];
    }
    int y = -1;
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j) {
        const int count = pair_count[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (y < 0) y = count;
        if (count != y)
          throw std::invalid_argument(
              "edge sets between class pairs differ in size");
      }
  }

  // Uniform |F_{i,j}| (validate enforces); 0 when q < 2.
  int pair_edge_count() const {
    if (color_count() < 2) return 0;
    int count = 0;
    for (const auto& [u, v] : edges) {
      const int cu = *find_color(u);
      const int cv = *find_color(v);
      if ((cu == 0 && cv == 1) || (cu == 1 && cv == 0)) ++count;
    }
    return count;
  }
};

// Text format: one "color <i>: v1 v2 ..." line per class (i = 1..q in
// order), then "edge: u v" lines; '#' starts a comment.
inline ColoredGraph parse_colored_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  ColoredGraph h;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "color") {
      int index;
      std::string colon;
      if (!(ls >> index >> colon) || colon != ":")
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected 'color <i>: names...'");
      if (index != h.color_count() + 1)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": color classes must appear in order 1..q");
      std::vector<std::string> names;
      std::string name;
      while (ls >> name) names.push_back(name);
      if (names.empty())
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": empty color class");
      h.classes.push_back(std::move(names));
    } else if (head == "edge:") {
      std::string u, v, extra;
      if (!(ls >> u >> v) || (ls >> extra))
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected 'edge: u v'");
      h.edges.emplace_back(std::move(u), std::move(v));
    } else if (head == "edge") {
      std::string colon, u, v, extra;
      if (!(ls >> colon >> u >> v) || colon != ":" || (ls >> extra))
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected 'edge: u v'");
      h.edges.emplace_back(std::move(u), std::move(v));
    } else {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": unknown directive '" + head + "'");
    }
  }
  h.validate();
  return h;
}

inline std::string serialize_colored_graph(const ColoredGraph& h) {
  std::ostringstream out;
  for (std::size_t i = 0; i < h.classes.size(); ++i) {
    out << "color " << i + 1 << ':';
    for (const auto& name : h.classes[i]) out << ' ' << name;
    out << '\n';
  }
  for (const auto& [u, v] : h.edges) out << "edge: " << u << ' ' << v << '\n';
  return out.str();
}

struct CliqueResult {
  bool found = false;
  std::vector<std::string> vertices;  // one per color class, class order
};

// True iff `vertices` picks exactly one vertex of every class and all pairs
// are adjacent.
inline bool is_multicolored_clique(const ColoredGraph& h,
                                   const std::vector<std::string>& vertices) {
  if (static_cast<int>(vertices.size()) != h.color_count()) return false;
  std::vector<char> used(static_cast<std::size_t>(h.color_count()), 0);
  for (const auto& v : vertices) {
    const auto color = h.find_color(v);
    if (!color || used[static_cast<std::size_t>(*color)]) return false;
    used[static_cast<std::size_t>(*color)] = 1;
  }
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!h.has_edge(vertices[i], vertices[j])) return false;
  return true;
}

// Exhaustive transversal scan (x^q candidates); refuses instances above
// `limit`.  Returns the first clique in lexicographic class-position order.
inline CliqueResult oracle_multicolored_clique(const ColoredGraph& h,
                                               std::uint64_t limit = std::uint64_t{1}
                                                                     << 24) {
  h.validate();
  const int q = h.color_count();
  std::uint64_t total = 1;
  for (const auto& cls : h.classes) {
    if (total > limit / std::max<std::size_t>(cls.size(), 1)) {
      total = limit + 1;
      break;
    }
    total *= cls.size();
  }
  if (total > limit)
    throw std::invalid_argument("graph too large for exhaustive clique oracle");
  CliqueResult result;
  std::vector<int> pick(static_cast<std::size_t>(q), 0);
  while (true) {
    bool clique = true;
    for (int i = 0; i < q && clique; ++i)
      for (int j = i + 1; j < q && clique; ++j)
        if (!h.has_edge(h.classes[static_cast<std::size_t>(i)]
                                 [static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])],
                        h.classes[static_cast<std::size_t>(j)]
                                 [static_cast<std::size_t>(pick[static_cast<std::size_t>(j)])]))
          clique = false;
    if (clique) {
      result.found = true;
      for (int i = 0; i < q; ++i)
        result.vertices.push_back(
            h.classes[static_cast<std::size_t>(i)]
                     [static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])]);
      return result;
    }
    int i = q - 1;
    for (; i >= 0; --i) {
      if (++pick[static_cast<std::size_t>(i)] <
          static_cast<int>(h.classes[static_cast<std::size_t>(i)].size()))
        break;
      pick[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) return result;
  }
}

// Random instance: q classes of x fresh vertices; per class pair, y edges
// sampled uniformly without replacement (requires y <= x*x).
inline ColoredGraph random_colored_graph(std::mt19937& rng, int q, int x,
                                         int y) {
  if (q < 2 || x < 1 || y < 1 || y > x * x)
    throw std::invalid_argument("need q >= 2, x >= 1, 1 <= y <= x^2");
  ColoredGraph h;
  for (int i = 0; i < q; ++i) {
    std::vector<std::string> cls;
    for (int l = 0; l < x; ++l)
      cls.push_back("u" + std::to_string(i + 1) + "_" + std::to_string(l + 1));
    h.classes.push_back(std::move(cls));
  }
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      std::vector<int> slots(static_cast<std::size_t>(x * x));
      std::iota(slots.begin(), slots.end(), 0);
      std::shuffle(slots.begin(), slots.end(), rng);
      for (int e = 0; e < y; ++e) {
        const int slot = slots[static_cast<std::size_t>(e)];
        h.edges.emplace_back(h.classes[static_cast<std::size_t>(i)]
                                      [static_cast<std::size_t>(slot / x)],
                             h.classes[static_cast<std::size_t>(j)]
                                      [static_cast<std::size_t>(slot % x)]);
      }
    }
  return h;
}

// ---------------------------------------------------------------------------
// Gadget profiles: path tournaments and alternative paths.
// ---------------------------------------------------------------------------

// A three-ballot profile under construction, with ballots as name sequences
// and the underlying path retained so gadgets can address positions on it.
// Gadget insertions add candidates to the ballots but never to the path.
struct Profile {
  std::vector<std::string> candidates;          // creation order
  std::vector<std::vector<std::string>> votes;  // most to least preferred
  std::vector<std::string> path;                // q_1 ... q_t

  // Throws std::invalid_argument unless every vote permutes the candidates.
  void validate() const { to_election().validate(); }

  Election to_election() const {
    Election e;
    e.candidates = candidates;
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      index.emplace(candidates[i], static_cast<int>(i));
    for (const auto& vote : votes) {
      std::vector<int> ballot;
      ballot.reserve(vote.size());
      for (const auto& name : vote) {
        const auto it = index.find(name);
        if (it == index.end())
          throw std::invalid_argument("vote ranks unknown candidate: " + name);
        ballot.push_back(it->second);
      }
      e.votes.push_back(std::move(ballot));
    }
    return e;
  }
};

namespace detail {

// The three path-tournament ballots over an odd-length path: the forward
// order, and two zig-zag orders that put q_i above q_j for every non-path
// pair i > j + 1 while keeping each path arc (q_i, q_{i+1}) at weight 1.
inline Profile path_profile_from_names(const std::vector<std::string>& path) {
  const int t = static_cast<int>(path.size());
  if (t % 2 == 0)
    throw std::logic_error("path profile requires an odd candidate count");
  Profile p;
  p.candidates = path;
  p.path = path;
  std::vector<std::string> v1, v2, v3;
  v1.push_back(path[static_cast<std::size_t>(t - 1)]);  // q_t
  for (int j = (t - 1) / 2; j >= 1; --j) {
    v1.push_back(path[static_cast<std::size_t>(2 * j - 2)]);  // q_{2j-1}
    v1.push_back(path[static_cast<std::size_t>(2 * j - 1)]);  // q_{2j}
  }
  v2 = path;
  for (int j = (t - 1) / 2; j >= 1; --j) {
    v3.push_back(path[static_cast<std::size_t>(2 * j - 1)]);  // q_{2j}
    v3.push_back(path[static_cast<std::size_t>(2 * j)]);      // q_{2j+1}
  }
  v3.push_back(path[0]);  // q_1
  p.votes = {std::move(v1), std::move(v2), std::move(v3)};
  return p;
}

inline void erase_name(std::vector<std::string>& vote, const std::string& name) {
  vote.erase(std::find(vote.begin(), vote.end(), name));
}

inline std::size_t position_of(const std::vector<std::string>& vote,
                               const std::string& name) {
  const auto it = std::find(vote.begin(), vote.end(), name);
  if (it == vote.end())
    throw std::logic_error("candidate missing from ballot: " + name);
  return static_cast<std::size_t>(it - vote.begin());
}

inline void require_fresh(const Profile& p, const std::string& name) {
  if (std::find(p.candidates.begin(), p.candidates.end(), name) !=
      p.candidates.end())
    throw std::invalid_argument("candidate already exists: " + name);
}

// Alternative path of length three around consecutive path candidates a, b:
// fresh candidates ap, bp are spliced so the majority graph gains the arcs
// (prev, ap), (ap, bp), (bp, next) without connecting the primed and
// unprimed middles.  In the two zig-zag ballots, if a immediately precedes b
// the pair is replaced by "ap bp a b"; otherwise ap goes right after a and
// bp right after b.  The forward ballot always has a b adjacent and becomes
// "a b ap bp".
inline void attach_alt_path3_named(Profile& p, const std::string& a,
                                   const std::string& b, const std::string& ap,
                                   const std::string& bp) {
  if (p.votes.size() != 3)
    throw std::invalid_argument("gadget requires a three-ballot profile");
  require_fresh(p, ap);
  require_fresh(p, bp);
  for (int v : {0, 2}) {
    auto& vote = p.votes[static_cast<std::size_t>(v)];
    const std::size_t pa = position_of(vote, a);
    const std::size_t pb = position_of(vote, b);
    if (pb == pa + 1) {
      vote[pa] = ap;
      vote[pb] = bp;
      vote.insert(vote.begin() + static_cast<std::ptrdiff_t>(pb) + 1, {a, b});
    } else {
      vote.insert(vote.begin() + static_cast<std::ptrdiff_t>(pa) + 1, ap);
      const std::size_t pb2 = position_of(vote, b);
      vote.insert(vote.begin() + static_cast<std::ptrdiff_t>(pb2) + 1, bp);
    }
  }
  auto& forward = p.votes[1];
  const std::size_t pa = position_of(forward, a);
  if (pa + 1 >= forward.size() || forward[pa + 1] != b)
    throw std::logic_error("path candidates not adjacent in forward ballot");
  forward.insert(forward.begin() + static_cast<std::ptrdiff_t>(pa) + 2,
                 {ap, bp});
  p.candidates.push_back(ap);
  p.candidates.push_back(bp);
}

// Two alternative paths of length two around path candidate mid: fresh
// candidates mid2, mid3 are inserted immediately after mid in all three
// ballots, so {mid, mid2, mid3} become pairwise tied at weight 3 and each
// inherits mid's neighbourhood.
inline void attach_two_alt_paths2_named(Profile& p, const std::string& mid,
                                        const std::string& mid2,
                                        const std::string& mid3) {
  if (p.votes.size() != 3)
    throw std::invalid_argument("gadget requires a three-ballot profile");
  require_fresh(p, mid2);
  require_fresh(p, mid3);
  for (auto& vote : p.votes) {
    const std::size_t pm = position_of(vote, mid);
    vote.insert(vote.begin() + static_cast<std::ptrdiff_t>(pm) + 1,
                {mid2, mid3});
  }
  p.candidates.push_back(mid2);
  p.candidates.push_back(mid3);
}

inline std::string primed(const std::string& name, int primes) {
  if (name.empty()) throw std::invalid_argument("empty candidate name");
  return name.substr(0, 1) + std::string(static_cast<std::size_t>(primes), '\'') +
         name.substr(1);
}

inline Election election_from_name_votes(
    std::vector<std::string> roster,
    const std::vector<std::vector<std::string>>& name_votes) {
  Election e;
  e.candidates = std::move(roster);
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < e.candidates.size(); ++i)
    index.emplace(e.candidates[i], static_cast<int>(i));
  for (const auto& vote : name_votes) {
    std::vector<int> ballot;
    ballot.reserve(vote.size());
    for (const auto& name : vote) {
      const auto it = index.find(name);
      if (it == index.end())
        throw std::logic_error("ballot names candidate outside roster: " + name);
      ballot.push_back(it->second);
    }
    e.votes.push_back(std::move(ballot));
  }
  e.validate();
  return e;
}

}  // namespace detail

// Three ballots over q_1..q_t whose majority graph is the path q_1 -> q_2 ->
// ... -> q_t plus every back arc (q_i, q_j) with i > j + 1, all of weight 1.
// Even t is obtained by building t+1 and deleting q_{t+1}.
inline Profile path_tournament_profile(int t) {
  if (t < 1) throw std::invalid_argument("path length must be positive");
  const int build = t % 2 == 1 ? t : t + 1;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(build));
  for (int i = 1; i <= build; ++i) names.push_back("q" + std::to_string(i));
  Profile p = detail::path_profile_from_names(names);
  if (build != t) {
    const std::string last = "q" + std::to_string(build);
    for (auto& vote : p.votes) detail::erase_name(vote, last);
    p.candidates.pop_back();
    p.path.pop_back();
  }
  return p;
}

// Alternative path of length three between path positions i and i+3
// (1-based): splices fresh candidates q'_{i+1}, q''... derived by priming
// the names at positions i+1 and i+2.
inline Profile attach_alt_path3(Profile p, int i) {
  const int t = static_cast<int>(p.path.size());
  if (i < 1 || i + 3 > t)
    throw std::invalid_argument("gadget position out of range");
  const std::string& a = p.path[static_cast<std::size_t>(i)];
  const std::string& b = p.path[static_cast<std::size_t>(i + 1)];
  detail::attach_alt_path3_named(p, a, b, detail::primed(a, 1),
                                 detail::primed(b, 1));
  return p;
}

// Two alternative paths of length two between path positions i and i+2
// (1-based): inserts primed and double-primed copies of the candidate at
// position i+1.
inline Profile attach_two_alt_paths2(Profile p, int i) {
  const int t = static_cast<int>(p.path.size());
  if (i < 1 || i + 2 > t)
    throw std::invalid_argument("gadget position out of range");
  const std::string& mid = p.path[static_cast<std::size_t>(i)];
  detail::attach_two_alt_paths2_named(p, mid, detail::primed(mid, 1),
                                      detail::primed(mid, 2));
  return p;
}

// ---------------------------------------------------------------------------
// Candidate naming shared by the formula reductions.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string variable_candidate(int var, bool negated) {
  return (negated ? "xb" : "x") + std::to_string(var + 1);
}

inline std::string occurrence_candidate(int var, bool negated, int copy) {
  return variable_candidate(var, negated) + "_" + std::to_string(copy);
}

inline std::string selection_candidate(int var, bool negated, int copy) {
  return (negated ? "yb" : "y") + std::to_string(var + 1) + "_" +
         std::to_string(copy);
}

// Occurrence labels in clause-literal scan order: names[j][h] is the
// occurrence candidate for clause j, position h (copies 1 and 2 per signed
// literal, in order of appearance).
inline std::vector<std::array<std::string, 3>> occurrence_names(
    const BalancedCnf& f) {
  f.validate();
  std::vector<int> seen_pos(static_cast<std::size_t>(f.n), 0);
  std::vector<int> seen_neg(static_cast<std::size_t>(f.n), 0);
  std::vector<std::array<std::string, 3>> names(
      static_cast<std::size_t>(f.m()));
  for (int j = 0; j < f.m(); ++j)
    for (int h = 0; h < 3; ++h) {
      const Literal lit = f.clauses[static_cast<std::size_t>(j)]
                                   [static_cast<std::size_t>(h)];
      auto& counter = lit.negated ? seen_neg : seen_pos;
      const int copy = ++counter[static_cast<std::size_t>(lit.var)];
      names[static_cast<std::size_t>(j)][static_cast<std::size_t>(h)] =
          occurrence_candidate(lit.var, lit.negated, copy);
    }
  return names;
}

// Doubling device: a disjoint copy of the formula on fresh variables keeps
// 2-balance and satisfiability while making the variable count even.
inline BalancedCnf doubled(const BalancedCnf& f) {
  BalancedCnf out;
  out.n = 2 * f.n;
  out.clauses = f.clauses;
  for (auto clause : f.clauses) {
    for (Literal& lit : clause) lit.var += f.n;
    out.clauses.push_back(clause);
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Reduction kinds, generators, and certificate decoding.
// ---------------------------------------------------------------------------

enum class ReductionKind { pp3, pp4, np3, np4, pp_mcc, np_mcc };

inline std::string_view reduction_kind_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::pp3: return "pp3";
    case ReductionKind::pp4: return "pp4";
    case ReductionKind::np3: return "np3";
    case ReductionKind::np4: return "np4";
    case ReductionKind::pp_mcc: return "ppmcc";
    case ReductionKind::np_mcc: return "npmcc";
  }
  return "";
}

inline ReductionKind parse_reduction_kind(std::string_view name) {
  if (name == "pp3") return ReductionKind::pp3;
  if (name == "pp4") return ReductionKind::pp4;
  if (name == "np3") return ReductionKind::np3;
  if (name == "np4") return ReductionKind::np4;
  if (name == "ppmcc") return ReductionKind::pp_mcc;
  if (name == "npmcc") return ReductionKind::np_mcc;
  throw std::invalid_argument("unknown reduction kind: " + std::string(name));
}

// Possible President from 2-balanced 3-SAT, three ballots.  The election is
// a path tournament over a_1 y_1^1 y_1^2 a_2 ... a_n y_n^1 y_n^2 b_1 l_1^1
// b_2 l_2^1 ... b_m l_m^1 b_{m+1}, with an alternative path (the fresh
// yb-pair) attached around every y-pair and the remaining two occurrence
// candidates of each clause attached as alternative middles at its l^1.
// Occurrence candidate x_i^s is paired with selection candidate y_i^s in one
// party, so nominating the occurrence "frees" it for its clause; the
// distinguished singleton {a_1} can win exactly when the nominated
// occurrences cover every clause coherently, i.e. when the formula is
// satisfiable.  Formulas with an odd variable count are doubled first to
// keep the path length odd.
inline PartyElection build_pp3(const BalancedCnf& input) {
  input.validate();
  const BalancedCnf f =
      input.n % 2 == 0 ? input : detail::doubled(input);
  const int n = f.n;
  const int m = f.m();
  const auto occ = detail::occurrence_names(f);

  std::vector<std::string> path;
  path.reserve(static_cast<std::size_t>(3 * n + 2 * m + 1));
  for (int i = 0; i < n; ++i) {
    path.push_back("a" + std::to_string(i + 1));
    path.push_back(detail::selection_candidate(i, false, 1));
    path.push_back(detail::selection_candidate(i, false, 2));
  }
  for (int j = 0; j < m; ++j) {
    path.push_back("b" + std::to_string(j + 1));
    path.push_back(occ[static_cast<std::size_t>(j)][0]);
  }
  path.push_back("b" + std::to_string(m + 1));

  Profile profile = detail::path_profile_from_names(path);
  for (int i = 0; i < n; ++i)
    detail::attach_alt_path3_named(profile,
                                   detail::selection_candidate(i, false, 1),
                                   detail::selection_candidate(i, false, 2),
                                   detail::selection_candidate(i, true, 1),
                                   detail::selection_candidate(i, true, 2));
  for (int j = 0; j < m; ++j)
    detail::attach_two_alt_paths2_named(profile,
                                        occ[static_cast<std::size_t>(j)][0],
                                        occ[static_cast<std::size_t>(j)][1],
                                        occ[static_cast<std::size_t>(j)][2]);

  // Roster: dummies, clause anchors, selection quadruples, occurrence
  // quadruples.
  std::vector<std::string> roster;
  for (int i = 0; i < n; ++i) roster.push_back("a" + std::to_string(i + 1));
  for (int j = 0; j <= m; ++j) roster.push_back("b" + std::to_string(j + 1));
  for (int i = 0; i < n; ++i)
    for (bool neg : {false, true})
      for (int s : {1, 2})
        roster.push_back(detail::selection_candidate(i, neg, s));
  for (int i = 0; i < n; ++i)
    for (bool neg : {false, true})
      for (int s : {1, 2})
        roster.push_back(detail::occurrence_candidate(i, neg, s));

  PartyElection pe;
  pe.election = detail::election_from_name_votes(roster, profile.votes);
  pe.distinguished = 0;
  const auto idx = [&](const std::string& name) {
    return pe.election.require_candidate(name);
  };
  pe.parties.push_back({idx("a1")});
  for (int i = 1; i < n; ++i)
    pe.parties.push_back({idx("a" + std::to_string(i + 1))});
  for (int j = 0; j <= m; ++j)
    pe.parties.push_back({idx("b" + std::to_string(j + 1))});
  for (int i = 0; i < n; ++i)
    for (bool neg : {false, true})
      for (int s : {1, 2}) {
        std::vector<int> party = {idx(detail::selection_candidate(i, neg, s)),
                                  idx(detail::occurrence_candidate(i, neg, s))};
        std::sort(party.begin(), party.end());
        pe.parties.push_back(std::move(party));
      }
  pe.validate();
  return pe;
}

// Possible President from 2-balanced 3-SAT, four ballots.  Explicit profile;
// the majority graph consists exactly of the weight-2 arc families
// (p, z) for every literal candidate z, (z, z^h) for the same-sign
// occurrences of z, (l_j^h, k_j), and (k_j, p).  Nominating the true
// literal of each variable party lets p reach every clause candidate k_j
// through a nominated occurrence iff the assignment satisfies the formula.
inline PartyElection build_pp4(const BalancedCnf& f) {
  f.validate();
  const int n = f.n;
  const int m = f.m();
  const auto occ = detail::occurrence_names(f);
  const auto kappa = [](int j) { return "k" + std::to_string(j + 1); };

  std::vector<std::string> roster;
  roster.push_back("p");
  for (int i = 0; i < n; ++i) roster.push_back(detail::variable_candidate(i, false));
  for (int i = 0; i < n; ++i) roster.push_back(detail::variable_candidate(i, true));
  for (int i = 0; i < n; ++i)
    for (bool neg : {false, true})
      for (int s : {1, 2})
        roster.push_back(detail::occurrence_candidate(i, neg, s));
  for (int j = 0; j < m; ++j) roster.push_back(kappa(j));

  std::vector<std::vector<std::string>> votes(4);
  auto& v1 = votes[0];
  for (int j = 0; j < m; ++j) v1.push_back(kappa(j));
  v1.push_back("p");
  for (bool neg : {false, true})
    for (int i = 0; i < n; ++i) {
      v1.push_back(detail::variable_candidate(i, neg));
      v1.push_back(detail::occurrence_candidate(i, neg, 1));
      v1.push_back(detail::occurrence_candidate(i, neg, 2));
    }
  auto& v2 = votes[1];
  v2.push_back("p");
  for (bool neg : {true, false})
    for (int i = n - 1; i >= 0; --i) {
      v2.push_back(detail::variable_candidate(i, neg));
      v2.push_back(detail::occurrence_candidate(i, neg, 2));
      v2.push_back(detail::occurrence_candidate(i, neg, 1));
    }
  for (int j = m - 1; j >= 0; --j) v2.push_back(kappa(j));
  auto& v3 = votes[2];
  for (bool neg : {false, true})
    for (int i = 0; i < n; ++i) v3.push_back(detail::variable_candidate(i, neg));
  for (int j = 0; j < m; ++j) {
    for (int h = 0; h < 3; ++h)
      v3.push_back(occ[static_cast<std::size_t>(j)][static_cast<std::size_t>(h)]);
    v3.push_back(kappa(j));
  }
  v3.push_back("p");
  auto& v4 = votes[3];
  for (int j = m - 1; j >= 0; --j) {
    for (int h = 2; h >= 0; --h)
      v4.push_back(occ[static_cast<std::size_t>(j)][static_cast<std::size_t>(h)]);
    v4.push_back(kappa(j));
  }
  v4.push_back("p");
  for (bool neg : {true, false})
    for (int i = n - 1; i >= 0; --i) v4.push_back(detail::variable_candidate(i, neg));

  PartyElection pe;
  pe.election = detail::election_from_name_votes(roster, votes);
  pe.distinguished = 0;
  const auto idx = [&](const std::string& name) {
    return pe.election.require_candidate(name);
  };
  pe.parties.push_back({idx("p")});
  for (int i = 0; i < n; ++i)
    pe.parties.push_back({idx(detail::variable_candidate(i, false)),
                          idx(detail::variable_candidate(i, true))});
  for (int j = 0; j < m; ++j) pe.parties.push_back({idx(kappa(j))});
  for (int i = 0; i < n; ++i)
    for (int s : {1, 2})
      pe.parties.push_back({idx(detail::occurrence_candidate(i, false, s)),
                            idx(detail::occurrence_candidate(i, true, s))});
  pe.validate();
  return pe;
}

// Necessary President from 2-balanced 3-SAT, three ballots, all arcs weight
// 1.  Candidate b is defeated only by a, and p reaches a exactly when the
// nominated variable candidates leave some clause with all its occurrence
// candidates spoken for; p is a necessary president iff the formula is
// unsatisfiable.
inline PartyElection build_np3(const BalancedCnf& f) {
  f.validate();
  const int n = f.n;
  const auto occ = detail::occurrence_names(f);

  std::vector<std::string> roster;
  roster.push_back("p");
  roster.push_back("a");
  roster.push_back("b");
  for (int i = 0; i < n; ++i) roster.push_back(detail::variable_candidate(i, false));
  for (int i = 0; i < n; ++i) roster.push_back(detail::variable_candidate(i, true));
  for (int i = 0; i < n; ++i)
    for (int s : {1, 2})
      roster.push_back(detail::occurrence_candidate(i, false, s));
  for (int i = 0; i < n; ++i)
    for (int s : {1, 2})
      roster.push_back(detail::occurrence_candidate(i, true, s));

  std::vector<std::vector<std::string>> votes(3);
  auto& v1 = votes[0];
  v1.push_back("b");
  for (int i = 0; i < n; ++i)
    for (int s : {1, 2})
      v1.push_back(detail::occurrence_candidate(i, true, s));
  for (int i = 0; i < n; ++i)
    for (int s : {1, 2})
      v1.push_back(detail::occurrence_candidate(i, false, s));
  v1.push_back("a");
  v1.push_back("p");
  for (int i = 0; i < n; ++i) v1.push_back(detail::variable_candidate(i, false));
  for (int i = 0; i < n; ++i) v1.push_back(detail::variable_candidate(i, true));
  auto& v2 = votes[1];
  v2.push_back("p");
  for (int i = 0; i < n; ++i) {
    v2.push_back(detail::variable_candidate(i, false));
    v2.push_back(detail::occurrence_candidate(i, true, 1));
    v2.push_back(detail::occurrence_candidate(i, true, 2));
  }
  for (int i = 0; i < n; ++i) {
    v2.push_back(detail::variable_candidate(i, true));
    v2.push_back(detail::occurrence_candidate(i, false, 1));
    v2.push_back(detail::occurrence_candidate(i, false, 2));
  }
  v2.push_back("a");
  v2.push_back("b");
  auto& v3 = votes[2];
  v3.push_back("a");
  v3.push_back("b");
  for (int i = n - 1; i >= 0; --i) {
    v3.push_back(detail::variable_candidate(i, true));
    v3.push_back(detail::occurrence_candidate(i, false, 2));
    v3.push_back(detail::occurrence_candidate(i, false, 1));
  }
  for (int i = n - 1; i >= 0; --i) {
    v3.push_back(detail::variable_candidate(i, false));
    v3.push_back(detail::occurrence_candidate(i, true, 2));
    v3.push_back(detail::occurrence_candidate(i, true, 1));
  }
  v3.push_back("p");

  PartyElection pe;
  pe.election = detail::election_from_name_votes(roster, votes);
  pe.distinguished = 0;
  const auto idx = [&](const std::string& name) {
    return pe.election.require_candidate(name);
  };
  pe.parties.push_back({idx("p")});
  pe.parties.push_back({idx("a")});
  pe.parties.push_back({idx("b")});
  for (int i = 0; i < n; ++i)
    pe.parties.push_back({idx(detail::variable_candidate(i, false)),
                          idx(detail::variable_candidate(i, true))});
  for (int j = 0; j < f.m(); ++j) {
    std::vector<int> party;
    for (int h = 0; h < 3; ++h)
      party.push_back(idx(occ[static_cast<std::size_t>(j)][static_cast<std::size_t>(h)]));
    std::sort(party.begin(), party.end());
    pe.parties.push_back(std::move(party));
  }
  pe.validate();
  return pe;
}

// Necessary President from 2-balanced 3-SAT, four ballots, all arcs weight
// 2.  Selection candidates s_j^1, s_j^2 guard clause j: the only occurrence
// candidate defeating s_j^1 is l_j^1, and the only ones defeating s_j^2 are
// l_j^2, l_j^3; an occurrence candidate is defeated exactly by the opposite
// variable candidate.  p is a necessary president iff the formula is
// unsatisfiable.
inline PartyElection build_np4(const BalancedCnf& f) {
  f.validate();
  const int n = f.n;
  const int m = f.m();
  const auto occ = detail::occurrence_names(f);
  const auto sel = [](int j, int h) {
    return "s" + std::to_string(j + 1) + "_" + std::to_string(h);
  };

  std::vector<std::string> roster;
  for (const char* core : {"p", "a", "b", "c"}) roster.push_back(core);
  for (int i = 0; i < n; ++i) roster.push_back(detail::variable_candidate(i, false));
  for (int i = 0; i < n; ++i) roster.push_back(detail::variable_candidate(i, true));
  for (int i = 0; i < n; ++i)
    for (int s : {1, 2})
      roster.push_back(detail::occurrence_candidate(i, false, s));
  for (int i = 0; i < n; ++i)
    for (int s : {1, 2})
      roster.push_back(detail::occurrence_candidate(i, true, s));
  for (int j = 0; j < m; ++j)
    for (int h : {1, 2}) roster.push_back(sel(j, h));

  std::vector<std::vector<std::string>> votes(4);
  auto& v1 = votes[0];
  for (const char* core : {"p", "a", "b", "c"}) v1.push_back(core);
  for (bool neg : {false, true})
    for (int i = 0; i < n; ++i) v1.push_back(detail::variable_candidate(i, neg));
  for (int j = 0; j < m; ++j) {
    v1.push_back(occ[static_cast<std::size_t>(j)][0]);
    v1.push_back(sel(j, 1));
    v1.push_back(occ[static_cast<std::size_t>(j)][1]);
    v1.push_back(occ[static_cast<std::size_t>(j)][2]);
    v1.push_back(sel(j, 2));
  }
  auto& v2 = votes[1];
  for (int j = 0; j < m; ++j)
    for (int h : {1, 2}) v2.push_back(sel(j, h));
  for (const char* core : {"a", "b", "c", "p"}) v2.push_back(core);
  for (int i = 0; i < n; ++i) {
    v2.push_back(detail::variable_candidate(i, false));
    v2.push_back(detail::occurrence_candidate(i, true, 1));
    v2.push_back(detail::occurrence_candidate(i, true, 2));
  }
  for (int i = 0; i < n; ++i) {
    v2.push_back(detail::variable_candidate(i, true));
    v2.push_back(detail::occurrence_candidate(i, false, 1));
    v2.push_back(detail::occurrence_candidate(i, false, 2));
  }
  auto& v3 = votes[2];
  v3.push_back("b");
  v3.push_back("c");
  for (int j = m - 1; j >= 0; --j) {
    v3.push_back(occ[static_cast<std::size_t>(j)][1]);
    v3.push_back(occ[static_cast<std::size_t>(j)][2]);
    v3.push_back(sel(j, 2));
    v3.push_back(occ[static_cast<std::size_t>(j)][0]);
    v3.push_back(sel(j, 1));
  }
  v3.push_back("a");
  v3.push_back("p");
  for (bool neg : {true, false})
    for (int i = n - 1; i >= 0; --i) v3.push_back(detail::variable_candidate(i, neg));
  auto& v4 = votes[3];
  for (int i = n - 1; i >= 0; --i) {
    v4.push_back(detail::variable_candidate(i, true));
    v4.push_back(detail::occurrence_candidate(i, false, 2));
    v4.push_back(detail::occurrence_candidate(i, false, 1));
  }
  for (int i = n - 1; i >= 0; --i) {
    v4.push_back(detail::variable_candidate(i, false));
    v4.push_back(detail::occurrence_candidate(i, true, 2));
    v4.push_back(detail::occurrence_candidate(i, true, 1));
  }
  v4.push_back("c");
  for (int j = m - 1; j >= 0; --j)
    for (int h : {2, 1}) v4.push_back(sel(j, h));
  v4.push_back("a");
  v4.push_back("b");
  v4.push_back("p");

  PartyElection pe;
  pe.election = detail::election_from_name_votes(roster, votes);
  pe.distinguished = 0;
  const auto idx = [&](const std::string& name) {
    return pe.election.require_candidate(name);
  };
  for (const char* core : {"p", "a", "b", "c"}) pe.parties.push_back({idx(core)});
  for (int i = 0; i < n; ++i)
    pe.parties.push_back({idx(detail::variable_candidate(i, false)),
                          idx(detail::variable_candidate(i, true))});
  for (int j = 0; j < m; ++j) {
    pe.parties.push_back({idx(occ[static_cast<std::size_t>(j)][0])});
    std::vector<int> rest = {idx(occ[static_cast<std::size_t>(j)][1]),
                             idx(occ[static_cast<std::size_t>(j)][2])};
    std::sort(rest.begin(), rest.end());
    pe.parties.push_back(std::move(rest));
    pe.parties.push_back({idx(sel(j, 1)), idx(sel(j, 2))});
  }
  pe.validate();
  return pe;
}

// ---------------------------------------------------------------------------
// Multicolored-clique constructions.
// ---------------------------------------------------------------------------

namespace detail {

// Index-based view of a colored graph for the election builders: vertices
// and edge candidates in roster order, plus per-vertex incidence lists split
// by whether the other endpoint lives in a higher or lower class.
struct McView {
  int q = 0;
  int x = 0;
  std::vector<std::vector<std::string>> classes;
  std::vector<std::string> edge_names;                // roster order
  std::vector<std::pair<int, int>> edge_class_pair;   // (i, j), i < j
  std::vector<std::vector<std::vector<int>>> higher;  // [i][l] -> edge ids
  std::vector<std::vector<std::vector<int>>> lower;   // [i][l] -> edge ids
};

inline McView mc_view(const ColoredGraph& h) {
  h.validate();
  if (h.color_count() < 2)
    throw std::invalid_argument("construction needs at least two color classes");
  McView view;
  view.q = h.color_count();
  view.x = h.class_size();
  view.classes = h.classes;
  std::unordered_map<std::string, std::pair<int, int>> locate;
  for (int i = 0; i < view.q; ++i)
    for (int l = 0; l < view.x; ++l) {
      const std::string& name = h.classes[static_cast<std::size_t>(i)]
                                         [static_cast<std::size_t>(l)];
      if (name == "a" || name == "b" || name == "p" ||
          name.find('~') != std::string::npos)
        throw std::invalid_argument(
            "vertex name reserved or contains '~': " + name);
      locate.emplace(name, std::make_pair(i, l));
    }
  view.higher.assign(static_cast<std::size_t>(view.q),
                     std::vector<std::vector<int>>(static_cast<std::size_t>(view.x)));
  view.lower = view.higher;
  // Edge candidates grouped by class pair in lexicographic order, input
  // order within a pair; each is named lower-endpoint~higher-endpoint.
  for (int i = 0; i < view.q; ++i)
    for (int j = i + 1; j < view.q; ++j)
      for (const auto& [eu, ev] : h.edges) {
        const auto pu = locate.at(eu);
        const auto pv = locate.at(ev);
        if (std::min(pu.first, pv.first) != i ||
            std::max(pu.first, pv.first) != j)
          continue;
        const auto [lo, hi] = pu.first < pv.first ? std::make_pair(pu, pv)
                                                  : std::make_pair(pv, pu);
        const int id = static_cast<int>(view.edge_names.size());
        view.edge_names.push_back(
            view.classes[static_cast<std::size_t>(lo.first)]
                        [static_cast<std::size_t>(lo.second)] +
            "~" +
            view.classes[static_cast<std::size_t>(hi.first)]
                        [static_cast<std::size_t>(hi.second)]);
        view.edge_class_pair.emplace_back(i, j);
        view.higher[static_cast<std::size_t>(lo.first)]
                   [static_cast<std::size_t>(lo.second)].push_back(id);
        view.lower[static_cast<std::size_t>(hi.first)]
                  [static_cast<std::size_t>(hi.second)].push_back(id);
      }
  if (view.edge_names.empty())
    throw std::invalid_argument("construction needs at least one edge per class pair");
  return view;
}

// Shared assembly: roster = a, b, p, all vertices, all edge candidates;
// parties = {a}, {b}, {p} (distinguished), the color classes, the per-pair
// edge sets.
inline PartyElection mc_assemble(const McView& view,
                                 std::vector<std::vector<int>> votes) {
  PartyElection pe;
  pe.election.candidates = {"a", "b", "p"};
  for (const auto& cls : view.classes)
    for (const auto& name : cls) pe.election.candidates.push_back(name);
  for (const auto& name : view.edge_names)
    pe.election.candidates.push_back(name);
  pe.election.votes = std::move(votes);
  pe.election.validate();
  pe.parties = {{0}, {1}, {2}};
  pe.distinguished = 2;
  int next = 3;
  for (int i = 0; i < view.q; ++i) {
    std::vector<int> party;
    for (int l = 0; l < view.x; ++l) party.push_back(next++);
    pe.parties.push_back(std::move(party));
  }
  const int edge_base = next;
  std::vector<std::vector<int>> edge_parties;
  for (int i = 0; i < view.q; ++i)
    for (int j = i + 1; j < view.q; ++j) edge_parties.emplace_back();
  const auto pair_slot = [&](int i, int j) {
    // position of (i, j) in lexicographic pair order
    int slot = 0;
    for (int a = 0; a < i; ++a) slot += view.q - a - 1;
    return slot + (j - i - 1);
  };
  for (std::size_t e = 0; e < view.edge_names.size(); ++e) {
    const auto [i, j] = view.edge_class_pair[e];
    edge_parties[static_cast<std::size_t>(pair_slot(i, j))].push_back(
        edge_base + static_cast<int>(e));
  }
  for (auto& party : edge_parties) pe.parties.push_back(std::move(party));
  pe.validate();
  return pe;
}

// Ballot-building pieces shared by both clique constructions.  Vertex v
// (class i, position l) has roster index 3 + i*x + l; edge e has index
// 3 + q*x + e.
struct McBallots {
  const McView* view;
  int vert(int i, int l) const { return 3 + i * view->x + l; }
  int edge(int e) const { return 3 + view->q * view->x + e; }

  void all_vertices(std::vector<int>& vote, bool forward) const {
    const int total = view->q * view->x;
    for (int v = 0; v < total; ++v) vote.push_back(3 + (forward ? v : total - 1 - v));
  }
  void all_edges(std::vector<int>& vote, bool forward) const {
    const int total = static_cast<int>(view->edge_names.size());
    for (int e = 0; e < total; ++e)
      vote.push_back(edge(forward ? e : total - 1 - e));
  }
  // Incidence series: per vertex of class i (ascending positions when
  // forward, else descending), its higher- or lower-incident edges (in
  // roster order when forward, else reversed) followed by the vertex.
  void series(std::vector<int>& vote, int i, bool use_higher, bool forward) const {
    const auto& lists = use_higher ? view->higher : view->lower;
    for (int step = 0; step < view->x; ++step) {
      const int l = forward ? step : view->x - 1 - step;
      const auto& incident = lists[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
      if (forward) {
        for (int e : incident) vote.push_back(edge(e));
      } else {
        for (auto it = incident.rbegin(); it != incident.rend(); ++it)
          vote.push_back(edge(*it));
      }
      vote.push_back(vert(i, l));
    }
  }
};

}  // namespace detail

// Possible President from multicolored clique, eight ballots, all arcs
// weight 2.  Core arcs: b beats every vertex candidate, every edge candidate
// beats a, a beats p, p beats every vertex and edge candidate; a vertex
// candidate beats an edge candidate iff they are not incident (incident
// pairs are tied).  The distinguished singleton {p} is blocked exactly by
// beatpaths b -> u -> f -> a -> p through a nominated non-incident pair.
inline PartyElection build_pp_mcc(const ColoredGraph& h) {
  const detail::McView view = detail::mc_view(h);
  const detail::McBallots bb{&view};
  std::vector<std::vector<int>> votes(8);
  // Base ballots.
  auto& v1 = votes[0];
  v1.push_back(1);
  bb.all_vertices(v1, true);
  bb.all_edges(v1, true);
  v1.push_back(0);
  v1.push_back(2);
  auto& v2 = votes[1];
  v2.push_back(2);
  bb.all_edges(v2, false);
  v2.push_back(0);
  v2.push_back(1);
  bb.all_vertices(v2, false);
  auto& v3 = votes[2];
  bb.all_vertices(v3, true);
  bb.all_edges(v3, true);
  v3.push_back(0);
  v3.push_back(2);
  v3.push_back(1);
  auto& v4 = votes[3];
  v4.push_back(1);
  v4.push_back(0);
  bb.all_vertices(v4, false);
  bb.all_edges(v4, false);
  v4.push_back(2);
  // Incidence ballots.
  auto& v5 = votes[4];
  v5.push_back(2);
  for (int i = 0; i < view.q; ++i) bb.series(v5, i, true, true);
  v5.push_back(0);
  v5.push_back(1);
  auto& v6 = votes[5];
  v6.push_back(1);
  v6.push_back(0);
  v6.push_back(2);
  for (int i = view.q - 1; i >= 0; --i) bb.series(v6, i, true, false);
  auto& v7 = votes[6];
  v7.push_back(2);
  for (int i = 0; i < view.q; ++i) bb.series(v7, i, false, true);
  v7.push_back(0);
  v7.push_back(1);
  auto& v8 = votes[7];
  v8.push_back(1);
  v8.push_back(0);
  v8.push_back(2);
  for (int i = view.q - 1; i >= 0; --i) bb.series(v8, i, false, false);
  return detail::mc_assemble(view, std::move(votes));
}

// Necessary President from multicolored clique, seven ballots, all arcs
// weight 1.  Core arcs: b beats everyone except a, a beats b, p and every
// vertex candidate, each edge candidate beats a and p, p beats every vertex
// candidate; a non-incident vertex/edge pair is an arc from the vertex,
// an incident pair an arc from the edge.
inline PartyElection build_np_mcc(const ColoredGraph& h) {
  const detail::McView view = detail::mc_view(h);
  const detail::McBallots bb{&view};
  std::vector<std::vector<int>> votes(7);
  auto& v1 = votes[0];
  v1.push_back(1);
  bb.all_edges(v1, true);
  v1.push_back(0);
  v1.push_back(2);
  bb.all_vertices(v1, true);
  auto& v2 = votes[1];
  v2.push_back(2);
  bb.all_vertices(v2, true);
  bb.all_edges(v2, true);
  v2.push_back(0);
  v2.push_back(1);
  auto& v3 = votes[2];
  v3.push_back(0);
  v3.push_back(1);
  bb.all_vertices(v3, false);
  bb.all_edges(v3, false);
  v3.push_back(2);
  auto& v4 = votes[3];
  v4.push_back(2);
  v4.push_back(0);
  v4.push_back(1);
  for (int i = 0; i < view.q; ++i) bb.series(v4, i, true, true);
  auto& v5 = votes[4];
  for (int i = view.q - 1; i >= 0; --i) bb.series(v5, i, true, false);
  v5.push_back(1);
  v5.push_back(0);
  v5.push_back(2);
  auto& v6 = votes[5];
  v6.push_back(2);
  v6.push_back(0);
  v6.push_back(1);
  for (int i = 0; i < view.q; ++i) bb.series(v6, i, false, true);
  auto& v7 = votes[6];
  for (int i = view.q - 1; i >= 0; --i) bb.series(v7, i, false, false);
  v7.push_back(1);
  v7.push_back(0);
  v7.push_back(2);
  return detail::mc_assemble(view, std::move(votes));
}

inline PartyElection build_reduction(ReductionKind kind, const BalancedCnf& f) {
  switch (kind) {
    case ReductionKind::pp3: return build_pp3(f);
    case ReductionKind::pp4: return build_pp4(f);
    case ReductionKind::np3: return build_np3(f);
    case ReductionKind::np4: return build_np4(f);
    default:
      throw std::invalid_argument("reduction kind requires a colored graph");
  }
}

inline PartyElection build_reduction(ReductionKind kind, const ColoredGraph& h) {
  switch (kind) {
    case ReductionKind::pp_mcc: return build_pp_mcc(h);
    case ReductionKind::np_mcc: return build_np_mcc(h);
    default:
      throw std::invalid_argument("reduction kind requires a CNF formula");
  }
}

// ---------------------------------------------------------------------------
// Certificate decoding.
// ---------------------------------------------------------------------------

struct Certificate {
  std::optional<std::vector<bool>> assignment;
  std::optional<std::vector<std::string>> clique;
};

// Maps a nomination (as candidate names) back to an assignment of the source
// formula.  For the three-ballot Possible construction, x_i is true iff both
// fresh selection candidates of its negative pair are nominated; the other
// formula constructions nominate the true literal's variable candidate
// directly.
inline Certificate decode_certificate(ReductionKind kind, const BalancedCnf& f,
                                      const std::vector<std::string>& nominated) {
  if (kind == ReductionKind::pp_mcc || kind == ReductionKind::np_mcc)
    throw std::invalid_argument("reduction kind requires a colored graph");
  std::unordered_set<std::string> names(nominated.begin(), nominated.end());
  Certificate cert;
  std::vector<bool> assignment(static_cast<std::size_t>(f.n), false);
  for (int i = 0; i < f.n; ++i) {
    if (kind == ReductionKind::pp3) {
      assignment[static_cast<std::size_t>(i)] =
          names.count(detail::selection_candidate(i, true, 1)) &&
          names.count(detail::selection_candidate(i, true, 2));
    } else {
      const bool pos = names.count(detail::variable_candidate(i, false)) > 0;
      const bool neg = names.count(detail::variable_candidate(i, true)) > 0;
      if (pos == neg)
        throw std::invalid_argument(
            "nomination does not determine variable x" + std::to_string(i + 1));
      assignment[static_cast<std::size_t>(i)] = pos;
    }
  }
  cert.assignment = std::move(assignment);
  return cert;
}

// Extracts the nominated vertex candidates (in class order) as the claimed
// multicolored clique.
inline Certificate decode_certificate(ReductionKind kind, const ColoredGraph& h,
                                      const std::vector<std::string>& nominated) {
  if (kind != ReductionKind::pp_mcc && kind != ReductionKind::np_mcc)
    throw std::invalid_argument("reduction kind requires a CNF formula");
  std::unordered_set<std::string> names(nominated.begin(), nominated.end());
  std::vector<std::string> clique;
  for (const auto& cls : h.classes)
    for (const auto& vertex : cls)
      if (names.count(vertex)) clique.push_back(vertex);
  Certificate cert;
  cert.clique = std::move(clique);
  return cert;
}

}  // namespace president
