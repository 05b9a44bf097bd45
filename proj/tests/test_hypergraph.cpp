#include <doctest.h>

#include "hypertree/errors.hpp"
#include "hypertree/hypergraph.hpp"
#include "hypertree/hypertree_count.hpp"
#include "oracles.hpp"

using namespace hypertree;

TEST_CASE("hypergraph construction normalizes and validates") {
  Hypergraph h(5, {{4, 2, 0}, {1, 3, 0}});
  CHECK(h.r() == 3);
  CHECK(h.m() == 2);
  CHECK(h.edges[0] == Edge{0, 1, 3});  // sorted within and across edges
  CHECK(h.edges[1] == Edge{0, 2, 4});

  CHECK_THROWS_AS(Hypergraph(5, {{0, 1, 2}, {0, 1}}), ValidationError);    // mixed size
  CHECK_THROWS_AS(Hypergraph(5, {{0, 1, 5}}), ValidationError);            // out of range
  CHECK_THROWS_AS(Hypergraph(5, {{0, 1, 1}}), ValidationError);            // repeated vertex
  CHECK_THROWS_AS(Hypergraph(5, {{0, 1, 2}, {2, 1, 0}}), ValidationError); // repeated edge
}

TEST_CASE("hypergraph text format round-trips") {
  Hypergraph h(5, {{0, 1, 2}, {0, 3, 4}});
  std::string text = h.format();
  CHECK(text == "5 3 2\n1 2 3\n1 4 5\n");
  CHECK(Hypergraph::parse(text) == h);
  CHECK_THROWS_AS(Hypergraph::parse("5 3 2\n1 2 3\n"), ValidationError);  // short
}

TEST_CASE("degrees of a hypergraph") {
  Hypergraph h(5, {{0, 1, 2}, {0, 3, 4}});
  CHECK(degrees_of(h) == std::vector<std::int64_t>{2, 1, 1, 1, 1});
  CHECK(degree_sequence_of(h).M() == 6);
}

TEST_CASE("incidence forest detection") {
  // two edges sharing two vertices form a Berge 2-cycle
  CHECK_FALSE(is_incidence_forest(5, {{0, 1, 2}, {0, 1, 3}}));
  CHECK(is_incidence_forest(5, {{0, 1, 2}, {0, 3, 4}}));
  CHECK(is_incidence_forest(5, {{0, 1, 2}}));
  CHECK(is_incidence_forest(5, {}));
  // a Berge cycle through three edges pairwise sharing single vertices
  CHECK_FALSE(is_incidence_forest(6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}));
  // same three edges opened up into a path
  CHECK(is_incidence_forest(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}));
}

TEST_CASE("spanning hypertree recognition") {
  Hypergraph h = oracles::complete_hypergraph(5, 3);
  // {0,1,2} is edge 0; {0,3,4} is edge C(4,2)=6 positions later: find them
  auto index_of = [&](const Edge& e) {
    for (std::int64_t i = 0; i < h.m(); ++i)
      if (h.edges[static_cast<std::size_t>(i)] == e) return static_cast<std::int32_t>(i);
    REQUIRE(false);
    return std::int32_t{-1};
  };
  EdgeSubset good{index_of({0, 1, 2}), index_of({0, 3, 4})};
  CHECK(is_spanning_hypertree(h, good));
  EdgeSubset cyclic{index_of({0, 1, 2}), index_of({0, 1, 3})};
  CHECK_FALSE(is_spanning_hypertree(h, cyclic));     // not acyclic
  EdgeSubset incomplete{index_of({0, 1, 2})};
  CHECK_FALSE(is_spanning_hypertree(h, incomplete)); // wrong edge count
}

TEST_CASE("spanning hypertree counts match the BFS subset oracle") {
  // complete hosts
  for (auto [n, r] : {std::pair{5, 3}, {7, 3}, {7, 4}, {5, 5}}) {
    Hypergraph h = oracles::complete_hypergraph(n, r);
    CHECK(count_spanning_hypertrees(h) == oracles::count_spanning_by_subsets(h));
  }
  // sparse fixed hosts
  Hypergraph path(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  CHECK(count_spanning_hypertrees(path) == 1);
  Hypergraph with_cycle(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {0, 3, 5}, {1, 3, 6}});
  CHECK(count_spanning_hypertrees(with_cycle) ==
        oracles::count_spanning_by_subsets(with_cycle));
  // host too small to span
  Hypergraph sparse(7, {{0, 1, 2}, {3, 4, 5}});
  CHECK(count_spanning_hypertrees(sparse) == 0);
  // shape mismatch gives zero rather than an error
  Hypergraph bad_shape(6, {{0, 1, 2}, {3, 4, 5}});
  CHECK(count_spanning_hypertrees(bad_shape) == 0);
}

TEST_CASE("parallel spanning count equals sequential") {
  Hypergraph h = oracles::complete_hypergraph(7, 3);
  BigInt seq = count_spanning_hypertrees(h, 1);
  CHECK(seq == 735);
  CHECK(count_spanning_hypertrees(h, 2) == seq);
  CHECK(count_spanning_hypertrees(h, 8) == seq);
  CHECK(count_spanning_hypertrees(h, 64) == seq);  // more workers than branches
}
