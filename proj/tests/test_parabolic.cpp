#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagrank/parabolic.hpp"

using namespace flagrank;

namespace {
ParabolicData make(SimpleType t, std::vector<int> nodes) {
  ChevalleyAlgebra alg(build_root_system(t));
  return make_parabolic(alg, nodes);
}
}  // namespace

TEST_CASE("flag dimensions match closed formulas") {
  // Grassmannian Gr(i, l+1): dim = i(l+1-i)
  for (int l = 1; l <= 5; ++l)
    for (int i = 1; i <= l; ++i)
      CHECK(make({'A', l}, {i}).flag_dim == i * (l + 1 - i));
  // Quadrics and (co)isotropic Grassmannians
  CHECK(make({'B', 3}, {1}).flag_dim == 5);   // 2l-1
  CHECK(make({'B', 4}, {1}).flag_dim == 7);
  CHECK(make({'B', 4}, {4}).flag_dim == 10);  // l(l+1)/2
  CHECK(make({'C', 3}, {1}).flag_dim == 5);   // 2l-1
  CHECK(make({'C', 3}, {3}).flag_dim == 6);   // l(l+1)/2
  CHECK(make({'D', 4}, {1}).flag_dim == 6);   // 2l-2
  CHECK(make({'D', 5}, {5}).flag_dim == 10);  // l(l-1)/2
  CHECK(make({'E', 6}, {1}).flag_dim == 16);
  CHECK(make({'E', 7}, {7}).flag_dim == 27);
  // Full flag variety: all positive roots
  CHECK(make({'A', 3}, {1, 2, 3}).flag_dim == 6);
  CHECK(make({'G', 2}, {1, 2}).flag_dim == 6);
}

TEST_CASE("nilradical and Levi roots partition the positive roots") {
  for (SimpleType t : {SimpleType{'A', 4}, SimpleType{'B', 3}, SimpleType{'D', 4},
                       SimpleType{'F', 4}}) {
    ChevalleyAlgebra alg(build_root_system(t));
    for (int node = 1; node <= t.rank; ++node) {
      ParabolicData p = make_parabolic(alg, {node});
      CHECK(p.u_roots.size() + p.levi_roots.size() == alg.root_system().num_positive());
      for (int r : p.levi_roots)
        CHECK(alg.root_system().positive_roots[r][node - 1] == 0);
      for (int r : p.u_roots)
        CHECK(alg.root_system().positive_roots[r][node - 1] != 0);
    }
  }
}

TEST_CASE("Levi part is closed under the bracket, nilradical is a Levi module") {
  ChevalleyAlgebra alg(build_root_system({'B', 4}));
  ParabolicData p = make_parabolic(alg, {1, 4});
  CHECK(p.flag_dim == 13);
  std::vector<char> in_levi(alg.dim(), 0), in_um(alg.dim(), 0);
  for (int b : p.levi_basis) in_levi[b] = 1;
  for (int b : p.u_minus_basis) in_um[b] = 1;
  for (int a : p.levi_basis) {
    for (int b : p.levi_basis)
      for (const auto& [idx, c] : alg.bracket_basis(a, b)) CHECK(in_levi[idx]);
    for (int b : p.u_minus_basis)
      for (const auto& [idx, c] : alg.bracket_basis(a, b)) CHECK(in_um[idx]);
  }
}

TEST_CASE("self-opposite parabolics follow -w0") {
  for (int l = 2; l <= 5; ++l)
    for (int i = 1; i <= l; ++i)
      CHECK(make({'A', l}, {i}).self_opposite == (2 * i == l + 1));
  // -w0 = id in B, C, D(even), E7, E8, F4, G2
  CHECK(make({'B', 4}, {2}).self_opposite);
  CHECK(make({'C', 3}, {1}).self_opposite);
  CHECK(make({'F', 4}, {3}).self_opposite);
  CHECK(make({'G', 2}, {1}).self_opposite);
  CHECK(make({'D', 4}, {3}).self_opposite);
  CHECK(make({'D', 4}, {1, 3, 4}).self_opposite);
  // D_l, l odd: -w0 swaps the fork nodes
  CHECK_FALSE(make({'D', 5}, {4}).self_opposite);
  CHECK(make({'D', 5}, {4, 5}).self_opposite);
  CHECK(make({'D', 5}, {1}).self_opposite);
  // E6: -w0 is the diagram flip
  CHECK_FALSE(make({'E', 6}, {1}).self_opposite);
  CHECK(make({'E', 6}, {1, 6}).self_opposite);
  CHECK(make({'E', 6}, {2}).self_opposite);
  CHECK(make({'E', 7}, {7}).self_opposite);
}

TEST_CASE("bad node sets are rejected") {
  ChevalleyAlgebra alg(build_root_system({'A', 3}));
  CHECK_THROWS_AS(make_parabolic(alg, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_parabolic(alg, {4}), std::invalid_argument);
  CHECK_THROWS_AS(make_parabolic(alg, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_parabolic(alg, {}), std::invalid_argument);
}
