#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "president/core.hpp"

using namespace president;

namespace {

Election make_election(std::vector<std::string> names,
                       std::vector<std::vector<int>> votes) {
  Election e;
  e.candidates = std::move(names);
  e.votes = std::move(votes);
  e.validate();
  return e;
}

}  // namespace

TEST_CASE("election validation") {
  Election e;
  e.candidates = {"a", "b", "a"};
  CHECK_THROWS_AS(e.validate(), std::invalid_argument);

  e.candidates = {"a", "b"};
  e.votes = {{0}};
  CHECK_THROWS_AS(e.validate(), std::invalid_argument);

  e.votes = {{0, 0}};
  CHECK_THROWS_AS(e.validate(), std::invalid_argument);

  e.votes = {{0, 1}, {1, 0}};
  CHECK_NOTHROW(e.validate());

  CHECK(e.find_candidate("b") == 1);
  CHECK_FALSE(e.find_candidate("z").has_value());
  CHECK(e.require_candidate("a") == 0);
  CHECK_THROWS_WITH(e.require_candidate("z"), "unknown candidate: z");
}

TEST_CASE("majority graph on a hand-checked profile") {
  // a>b 2-1, a>c 2-1, b>c 2-1
  const auto e = make_election({"a", "b", "c"}, {{0, 1, 2}, {1, 2, 0}, {0, 2, 1}});
  const auto g = weighted_majority_graph(e);
  CHECK(g.vertices == e.candidates);
  CHECK(g.arcs() == std::vector<std::tuple<int, int, int>>{
                        {0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
  CHECK(g.max_weight() == 1);
  CHECK(g.has_arc(0, 1));
  CHECK_FALSE(g.has_arc(1, 0));
  CHECK(g.weight_of(0, 1) == 1);
  CHECK(g.weight_of(1, 0) == 0);
}

TEST_CASE("majority graph of a tied pair has no arc") {
  const auto e = make_election({"a", "b"}, {{0, 1}, {1, 0}});
  const auto g = weighted_majority_graph(e);
  CHECK(g.arcs().empty());
}

TEST_CASE("majority graph matches direct pairwise counting") {
  std::mt19937 rng(7101);
  for (int round = 0; round < 120; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const int v = static_cast<int>(rng() % 6);
    const auto e = oracles::random_election(rng, n, v);
    const auto g = weighted_majority_graph(e);
    const auto ref = oracles::majority_graph_by_counting(e);
    CHECK(g.weight == ref.weight);
  }
}

TEST_CASE("majority graph parity and antisymmetry") {
  std::mt19937 rng(7102);
  for (int round = 0; round < 80; ++round) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int v = static_cast<int>(rng() % 7);
    const auto e = oracles::random_election(rng, n, v);
    const auto g = weighted_majority_graph(e);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        const int w = g.weight_of(a, b);
        CHECK(w >= 0);
        CHECK(w <= v);
        if (w > 0) {
          CHECK(w % 2 == v % 2);
          CHECK(g.weight_of(b, a) == 0);
        }
      }
  }
}

TEST_CASE("threshold subgraph keeps arcs of one exact weight") {
  const auto e = make_election(
      {"a", "b", "c"},
      {{0, 1, 2}, {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}});
  const auto g = weighted_majority_graph(e);
  // a>b 4-1 (weight 3), a>c 5-0 (weight 5), b>c 4-1 (weight 3)
  CHECK(g.weight_of(0, 1) == 3);
  CHECK(g.weight_of(0, 2) == 5);
  CHECK(g.weight_of(1, 2) == 3);
  const auto g3 = threshold_subgraph(g, 3);
  CHECK(g3.arcs() == std::vector<std::tuple<int, int, int>>{{0, 1, 3}, {1, 2, 3}});
  const auto g5 = threshold_subgraph(g, 5);
  CHECK(g5.arcs() == std::vector<std::tuple<int, int, int>>{{0, 2, 5}});
  CHECK(threshold_subgraph(g, 2).arcs().empty());
  CHECK_THROWS_AS(threshold_subgraph(g, 0), std::invalid_argument);
  CHECK_THROWS_AS(threshold_subgraph(g, -1), std::invalid_argument);
}

TEST_CASE("reduction keeps roster order and ballot order") {
  const auto e = make_election({"a", "b", "c", "d", "e"},
                               {{4, 2, 0, 3, 1}, {1, 3, 0, 2, 4}});
  const auto r = reduce(e, std::vector<int>{4, 1, 2});
  CHECK(r.candidates == std::vector<std::string>{"b", "c", "e"});
  CHECK(r.votes == std::vector<std::vector<int>>{{2, 1, 0}, {0, 1, 2}});
  CHECK_THROWS_AS(reduce(e, std::vector<int>{0, 9}), std::invalid_argument);
  CHECK_THROWS_WITH(reduce(e, std::vector<int>{0, 0}), "duplicate nominee: a");
}

TEST_CASE("reduction preserves pairwise margins") {
  std::mt19937 rng(7103);
  for (int round = 0; round < 60; ++round) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto e = oracles::random_election(rng, n, 3 + static_cast<int>(rng() % 3));
    std::vector<int> keep;
    for (int c = 0; c < n; ++c)
      if (rng() % 2) keep.push_back(c);
    if (keep.size() < 2) continue;
    const auto r = reduce(e, keep);
    const auto g = weighted_majority_graph(e);
    const auto gr = weighted_majority_graph(r);
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) {
        if (i == j) continue;
        CHECK(gr.weight_of(static_cast<int>(i), static_cast<int>(j)) ==
              g.weight_of(keep[i], keep[j]));
      }
  }
}

TEST_CASE("padding with reversed pairs never changes the majority graph") {
  std::mt19937 rng(7104);
  for (int round = 0; round < 40; ++round) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto e = oracles::random_election(rng, n, static_cast<int>(rng() % 5));
    const int pairs = static_cast<int>(rng() % 4);
    const auto padded = pad_reversed_pairs(e, pairs);
    CHECK(padded.voter_count() == e.voter_count() + 2 * pairs);
    CHECK(weighted_majority_graph(padded).weight ==
          weighted_majority_graph(e).weight);
  }
  const auto e = make_election({"a", "b"}, {});
  CHECK_THROWS_AS(pad_reversed_pairs(e, -1), std::invalid_argument);
}

TEST_CASE("party election validation") {
  PartyElection pe;
  pe.election = make_election({"a", "b", "c"}, {{0, 1, 2}});
  pe.parties = {{0, 1}, {2}};
  pe.distinguished = 0;
  CHECK_NOTHROW(pe.validate());
  CHECK(pe.party_of(2) == 1);

  SECTION("member order must be ascending") {
    pe.parties = {{1, 0}, {2}};
    CHECK_THROWS_AS(pe.validate(), std::invalid_argument);
  }
  SECTION("parties must be disjoint") {
    pe.parties = {{0, 1}, {1, 2}};
    CHECK_THROWS_AS(pe.validate(), std::invalid_argument);
  }
  SECTION("parties must cover the roster") {
    pe.parties = {{0, 1}};
    CHECK_THROWS_AS(pe.validate(), std::invalid_argument);
  }
  SECTION("no empty party") {
    pe.parties = {{0, 1, 2}, {}};
    CHECK_THROWS_AS(pe.validate(), std::invalid_argument);
  }
  SECTION("distinguished index in range") {
    pe.distinguished = 2;
    CHECK_THROWS_AS(pe.validate(), std::invalid_argument);
  }
}

TEST_CASE("nomination enumeration is lexicographic in party order") {
  PartyElection pe;
  pe.election = make_election({"a", "b", "c", "d", "e"}, {});
  pe.parties = {{0, 1}, {2}, {3, 4}};
  pe.distinguished = 0;
  pe.validate();

  const auto all = enumerate_nominations(pe);
  REQUIRE(all.size() == 4);
  CHECK(all[0].by_party == std::vector<int>{0, 2, 3});
  CHECK(all[1].by_party == std::vector<int>{0, 2, 4});
  CHECK(all[2].by_party == std::vector<int>{1, 2, 3});
  CHECK(all[3].by_party == std::vector<int>{1, 2, 4});
  CHECK(nomination_count(pe) == 4);
  CHECK(all[1].sorted_candidates() == std::vector<int>{0, 2, 4});

  NominationEnumerator it(pe);
  int seen = 0;
  while (auto nom = it.next()) {
    CHECK(nom->by_party == all[static_cast<std::size_t>(seen)].by_party);
    ++seen;
  }
  CHECK(seen == 4);
}

TEST_CASE("nomination count saturates instead of overflowing") {
  PartyElection pe;
  for (int i = 0; i < 140; ++i)
    pe.election.candidates.push_back("c" + std::to_string(i + 1));
  for (int i = 0; i < 70; ++i) pe.parties.push_back({2 * i, 2 * i + 1});
  pe.distinguished = 0;
  pe.validate();
  CHECK(nomination_count(pe) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("empty parties are rejected by the enumerator") {
  PartyElection pe;
  pe.election = make_election({"a"}, {});
  pe.parties = {{0}, {}};
  pe.distinguished = 0;
  CHECK(nomination_count(pe) == 0);
  CHECK_THROWS_AS(NominationEnumerator(pe), std::invalid_argument);
}
