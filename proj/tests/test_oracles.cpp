#include <doctest.h>

#include "portal/oracles.hpp"

#include <random>

using namespace portal;

TEST_CASE("subset sum oracle") {
  auto a = subset_sum_oracle({{1, 2, 3}, 3});
  REQUIRE(a.yes);
  CHECK(check_subset({{1, 2, 3}, 3}, std::get<SubsetWitness>(*a.witness)));
  auto empty = subset_sum_oracle({{}, 0});
  CHECK(empty.yes);
  CHECK(std::get<SubsetWitness>(*empty.witness).indices.empty());
  auto no = subset_sum_oracle({{2}, 1});
  CHECK_FALSE(no.yes);
  CHECK_FALSE(no.witness);
}

TEST_CASE("sat oracle") {
  auto a = sat_oracle({1, {{1, 1, 1}}});
  REQUIRE(a.yes);
  CHECK(std::get<Assignment>(*a.witness) == Assignment{true});
  CHECK_FALSE(sat_oracle({1, {{1}, {-1}}}).yes);
  // lexicographic: first satisfying assignment with false < true
  auto lex = sat_oracle({2, {{1, 2}}});
  CHECK(std::get<Assignment>(*lex.witness) == Assignment{false, true});
  CHECK_THROWS_AS(sat_oracle({23, {{1}}}), TooLarge);
  CHECK_THROWS_AS(sat_oracle({1, {{}}}), InvalidInstance);

  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    CnfFormula f{3, {}};
    const int m = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < m; ++k) {
      std::vector<int> c;
      for (int j = 0; j < 1 + static_cast<int>(rng() % 3); ++j)
        c.push_back((1 + static_cast<int>(rng() % 3)) * (rng() % 2 ? 1 : -1));
      f.clauses.push_back(c);
    }
    auto ans = sat_oracle(f);
    CHECK(ans.yes == sat_by_clause_masks(f));
    if (ans.yes) CHECK(check_assignment(f, std::get<Assignment>(*ans.witness)));
  }
}

TEST_CASE("grid Hamiltonian oracle") {
  GridGraph square{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 0};
  auto a = grid_hamcycle_oracle(square);
  REQUIRE(a.yes);
  CHECK(check_cycle(square, std::get<VertexCycle>(*a.witness)));
  CHECK_FALSE(grid_hamcycle_oracle({{{0, 0}, {1, 0}, {2, 0}}, 0}).yes);
  GridGraph ring;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x != 1 || y != 1) ring.vertices.emplace_back(x, y);
  CHECK(grid_hamcycle_oracle(ring).yes);
  ring.vertices.emplace_back(1, 1);
  CHECK_FALSE(grid_hamcycle_oracle(ring).yes);  // odd bipartite
  CHECK(hamcycle_by_permutations(square));
  GridGraph big;
  for (int x = 0; x < 21; ++x) big.vertices.emplace_back(x, 0);
  CHECK_THROWS_AS(grid_hamcycle_oracle(big), TooLarge);
}
