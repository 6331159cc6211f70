#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagrank/rootsystem.hpp"

using namespace flagrank;

namespace {

std::size_t expected_count(const SimpleType& t) {
  int l = t.rank;
  switch (t.family) {
    case 'A': return l * (l + 1) / 2;
    case 'B': return l * l;
    case 'C': return l * l;
    case 'D': return l * (l - 1);
    case 'E': return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  return 0;
}

}  // namespace

TEST_CASE("invalid type rejected") {
  CHECK_THROWS_AS(build_root_system({'E', 9}), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system({'B', 1}), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system({'X', 3}), std::invalid_argument);
}

TEST_CASE("positive root counts match closed formulas") {
  CHECK(build_root_system({'A', 1}).num_positive() == 1);
  CHECK(build_root_system({'D', 4}).num_positive() == 12);
  CHECK(build_root_system({'E', 6}).num_positive() == 36);
  std::vector<SimpleType> types = {{'A', 5}, {'B', 4}, {'C', 4}, {'D', 6},
                                   {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
  for (const auto& t : types) {
    auto rs = build_root_system(t);
    CHECK(rs.num_positive() == expected_count(t));
  }
}

TEST_CASE("roots have unmixed sign and reflections stay in the system") {
  for (SimpleType t : {SimpleType{'B', 3}, SimpleType{'C', 4}, SimpleType{'D', 4},
                       SimpleType{'F', 4}, SimpleType{'G', 2}}) {
    auto rs = build_root_system(t);
    for (const auto& r : rs.positive_roots) {
      for (int x : r) CHECK(x >= 0);
      for (int i = 0; i < rs.rank(); ++i) {
        RootCoords refl(r);
        refl[i] -= rs.pairing_with_simple_coroot(r, i);
        CHECK(rs.is_root(refl));
      }
    }
  }
}

TEST_CASE("minus_w0 involution matches diagram theory") {
  // Oracle is the longest-element computation itself; the closed-form
  // expectations below are the standard diagram involutions.
  auto sigma = build_root_system({'B', 3}).minus_w0_involution();
  CHECK(sigma == std::vector<int>{0, 1, 2});

  sigma = build_root_system({'A', 4}).minus_w0_involution();
  CHECK(sigma == std::vector<int>{3, 2, 1, 0});

  sigma = build_root_system({'D', 5}).minus_w0_involution();
  CHECK(sigma == std::vector<int>{0, 1, 2, 4, 3});

  sigma = build_root_system({'D', 4}).minus_w0_involution();
  CHECK(sigma == std::vector<int>{0, 1, 2, 3});

  sigma = build_root_system({'E', 6}).minus_w0_involution();
  CHECK(sigma == std::vector<int>{5, 1, 4, 3, 2, 0});

  sigma = build_root_system({'E', 7}).minus_w0_involution();
  CHECK(sigma == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("minus_w0 is an involution and a diagram automorphism") {
  for (SimpleType t : {SimpleType{'A', 5}, SimpleType{'D', 5}, SimpleType{'D', 6},
                       SimpleType{'E', 6}, SimpleType{'F', 4}}) {
    auto rs = build_root_system(t);
    auto s = rs.minus_w0_involution();
    for (int i = 0; i < rs.rank(); ++i) {
      CHECK(s[s[i]] == i);
      for (int j = 0; j < rs.rank(); ++j) CHECK(rs.cartan[i][j] == rs.cartan[s[i]][s[j]]);
    }
  }
}

TEST_CASE("i_degree extracts coefficients at I") {
  auto rs = build_root_system({'B', 4});
  // Simple root with I = {i}.
  RootCoords a2 = {0, 1, 0, 0};
  CHECK(rs.i_degree(a2, {2}) == std::vector<int>{1});
  // Highest root of B_4 is (1,2,2,2).
  const RootCoords& high = rs.positive_roots.back();
  CHECK(high == RootCoords{1, 2, 2, 2});
  CHECK(rs.i_degree(high, {1, 4}) == std::vector<int>{1, 2});

  auto d4 = build_root_system({'D', 4});
  RootCoords alpha2 = {0, 1, 0, 0};
  CHECK(d4.i_degree(alpha2, {3, 4}) == std::vector<int>{0, 0});
  CHECK_THROWS_AS(d4.i_degree(RootCoords{1, 1, 1, 5}, {1}), std::invalid_argument);
}

TEST_CASE("root order is by height then lexicographic") {
  auto rs = build_root_system({'G', 2});
  for (std::size_t k = 1; k < rs.num_positive(); ++k) {
    int h0 = RootSystem::height(rs.positive_roots[k - 1]);
    int h1 = RootSystem::height(rs.positive_roots[k]);
    CHECK((h0 < h1 || (h0 == h1 && rs.positive_roots[k - 1] < rs.positive_roots[k])));
  }
}
