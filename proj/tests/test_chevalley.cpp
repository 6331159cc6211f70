#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flagrank/chevalley.hpp"

using namespace flagrank;

namespace {

bool is_zero_elem(const LieElement& e) {
  for (const auto& x : e)
    if (x != 0) return false;
  return true;
}

LieElement add_elem(const LieElement& a, const LieElement& b) {
  LieElement r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

void check_jacobi_triple(const ChevalleyAlgebra& alg, int a, int b, int c) {
  LieElement ea = alg.basis_element(a), eb = alg.basis_element(b), ec = alg.basis_element(c);
  LieElement s = add_elem(add_elem(alg.bracket(alg.bracket(ea, eb), ec),
                                   alg.bracket(alg.bracket(eb, ec), ea)),
                          alg.bracket(alg.bracket(ec, ea), eb));
  REQUIRE(is_zero_elem(s));
}

}  // namespace

TEST_CASE("A_1 is sl2") {
  ChevalleyAlgebra alg(build_root_system({'A', 1}));
  CHECK(alg.dim() == 3);
  LieElement h = alg.basis_element(alg.h_index(0));
  LieElement x = alg.basis_element(alg.x_index(0));
  LieElement y = alg.basis_element(alg.y_index(0));
  CHECK(alg.bracket(x, y) == h);
  LieElement hx = alg.bracket(h, x);
  CHECK(hx[alg.x_index(0)] == 2);
  LieElement hy = alg.bracket(h, y);
  CHECK(hy[alg.y_index(0)] == -2);
}

TEST_CASE("Cartan pairing and h_i = [x_i, y_i]") {
  for (SimpleType t : {SimpleType{'A', 2}, SimpleType{'B', 3}, SimpleType{'G', 2}}) {
    ChevalleyAlgebra alg(build_root_system(t));
    const auto& rs = alg.root_system();
    for (int i = 0; i < alg.rank(); ++i) {
      RootCoords simple(alg.rank(), 0);
      simple[i] = 1;
      int k = rs.positive_index(simple);
      LieElement h = alg.bracket(alg.basis_element(alg.x_index(k)), alg.basis_element(alg.y_index(k)));
      LieElement expect = alg.basis_element(alg.h_index(i));
      CHECK(h == expect);
      // [h, x_alpha] = <alpha, alpha_i^vee> x_alpha for every positive root.
      for (int r = 0; r < alg.num_positive(); ++r) {
        LieElement hx = alg.bracket(expect, alg.basis_element(alg.x_index(r)));
        int w = rs.pairing_with_simple_coroot(rs.positive_roots[r], i);
        CHECK(hx[alg.x_index(r)] == w);
      }
    }
  }
}

TEST_CASE("bracket in A_2: [x_a1, x_a2] = +-x_{a1+a2} with magnitude 1") {
  ChevalleyAlgebra alg(build_root_system({'A', 2}));
  LieElement v = alg.bracket(alg.basis_element(alg.x_index(0)), alg.basis_element(alg.x_index(1)));
  int nz = 0;
  for (const auto& x : v) nz += (x != 0);
  CHECK(nz == 1);
  CHECK((v[alg.x_index(2)] == 1 || v[alg.x_index(2)] == -1));
  // bracket(h_1, x_{alpha1}) = 2 x_{alpha1}
  int k1 = alg.root_system().positive_index(RootCoords{1, 0});
  LieElement hx = alg.bracket(alg.basis_element(0), alg.basis_element(alg.x_index(k1)));
  CHECK(hx[alg.x_index(k1)] == 2);
}

TEST_CASE("structure constants have magnitude p+1 (root string oracle)") {
  for (SimpleType t : {SimpleType{'G', 2}, SimpleType{'B', 3}, SimpleType{'C', 3}, SimpleType{'F', 4}}) {
    ChevalleyAlgebra alg(build_root_system(t));
    const auto& rs = alg.root_system();
    bool sawBig = false;
    for (std::size_t i = 0; i < rs.num_positive(); ++i)
      for (std::size_t j = 0; j < rs.num_positive(); ++j) {
        if (i == j) continue;
        const auto& a = rs.positive_roots[i];
        const auto& b = rs.positive_roots[j];
        RootCoords s(a);
        for (int k = 0; k < rs.rank(); ++k) s[k] += b[k];
        if (!rs.is_root(s)) continue;
        long n = alg.structure_constant(a, b);
        // Oracle: p+1 where p is the length of the string b, b-a, b-2a, ...
        int p = 0;
        RootCoords cur(b);
        while (true) {
          for (int k = 0; k < rs.rank(); ++k) cur[k] -= a[k];
          bool zero = true;
          for (int x : cur) zero &= (x == 0);
          if (zero || !rs.is_root(cur)) break;
          ++p;
        }
        CHECK(std::abs(n) == p + 1);
        if (t.family == 'G') {
          CHECK(std::abs(n) <= 3);
          if (std::abs(n) == 3) sawBig = true;
        }
      }
    if (t.family == 'G') CHECK(sawBig);  // G_2 has |N| in {1,2,3}
  }
}

TEST_CASE("antisymmetry of basis brackets") {
  ChevalleyAlgebra alg(build_root_system({'B', 2}));
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = 0; b < alg.dim(); ++b) {
      LieElement ab = alg.bracket(alg.basis_element(a), alg.basis_element(b));
      LieElement ba = alg.bracket(alg.basis_element(b), alg.basis_element(a));
      for (int k = 0; k < alg.dim(); ++k) CHECK(ab[k] == -ba[k]);
    }
}

TEST_CASE("Jacobi identity, exhaustive for small ranks") {
  for (SimpleType t : {SimpleType{'A', 2}, SimpleType{'B', 2}, SimpleType{'G', 2}}) {
    ChevalleyAlgebra alg(build_root_system(t));
    for (int a = 0; a < alg.dim(); ++a)
      for (int b = a + 1; b < alg.dim(); ++b)
        for (int c = b + 1; c < alg.dim(); ++c) check_jacobi_triple(alg, a, b, c);
  }
}

TEST_CASE("Jacobi identity, exhaustive for B_3 and D_4 and F_4") {
  for (SimpleType t : {SimpleType{'B', 3}, SimpleType{'D', 4}, SimpleType{'F', 4}}) {
    ChevalleyAlgebra alg(build_root_system(t));
    for (int a = 0; a < alg.dim(); ++a)
      for (int b = a + 1; b < alg.dim(); ++b)
        for (int c = b + 1; c < alg.dim(); ++c) check_jacobi_triple(alg, a, b, c);
  }
}

TEST_CASE("Jacobi identity, randomized for E_6") {
  ChevalleyAlgebra alg(build_root_system({'E', 6}));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(0, alg.dim() - 1);
  for (int trial = 0; trial < 2000; ++trial) check_jacobi_triple(alg, d(rng), d(rng), d(rng));
}

TEST_CASE("exp_ad basics") {
  ChevalleyAlgebra alg(build_root_system({'A', 1}));
  AdOperator id = alg.exp_ad(alg.zero());
  CHECK(id.matrix == RatMat::identity(3));

  // exp(ad t x) y = y + t h - t^2 x in sl2.
  Rat t(3);
  LieElement tx = alg.zero();
  tx[alg.x_index(0)] = t;
  AdOperator e = alg.exp_ad(tx);
  LieElement img = e.matrix.apply(alg.basis_element(alg.y_index(0)));
  CHECK(img[alg.y_index(0)] == 1);
  CHECK(img[alg.h_index(0)] == t);
  CHECK(img[alg.x_index(0)] == -t * t);

  // Non-nilpotent input rejected.
  CHECK_THROWS_AS(alg.exp_ad(alg.basis_element(alg.h_index(0))), std::invalid_argument);
}

TEST_CASE("exp_ad is Ad-equivariant and invertible by exp(-a)") {
  ChevalleyAlgebra alg(build_root_system({'B', 2}));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    LieElement a = alg.zero();
    for (int k = 0; k < alg.num_positive(); ++k) a[alg.x_index(k)] = coeff(rng);
    AdOperator g = alg.exp_ad(a);
    LieElement na = alg.zero();
    for (int i = 0; i < alg.dim(); ++i) na[i] = -a[i];
    CHECK(g.matrix * alg.exp_ad(na).matrix == RatMat::identity(alg.dim()));
    CHECK(g.matrix.determinant() == 1);
    LieElement u = alg.zero(), v = alg.zero();
    for (int i = 0; i < alg.dim(); ++i) {
      u[i] = coeff(rng);
      v[i] = coeff(rng);
    }
    LieElement lhs = g.matrix.apply(alg.bracket(u, v));
    LieElement rhs = alg.bracket(g.matrix.apply(u), g.matrix.apply(v));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("random group elements: determinism, identity, equivariance") {
  ChevalleyAlgebra alg(build_root_system({'A', 2}));
  CHECK_THROWS_AS(alg.random_group_element(1, 0, 3), std::invalid_argument);
  AdOperator id = alg.random_group_element(9, 1, 0);
  CHECK(id.matrix == RatMat::identity(alg.dim()));

  AdOperator g1 = alg.random_group_element(1234, 6, 3);
  AdOperator g2 = alg.random_group_element(1234, 6, 3);
  CHECK(g1.matrix == g2.matrix);
  AdOperator g3 = alg.random_group_element(1235, 6, 3);
  CHECK(g1.matrix != g3.matrix);
  CHECK(g1.matrix.determinant() == 1);

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    LieElement u = alg.zero(), v = alg.zero();
    for (int i = 0; i < alg.dim(); ++i) {
      u[i] = coeff(rng);
      v[i] = coeff(rng);
    }
    CHECK(g1.matrix.apply(alg.bracket(u, v)) == alg.bracket(g1.matrix.apply(u), g1.matrix.apply(v)));
  }
}

TEST_CASE("selected-row product agrees with the dense product") {
  ChevalleyAlgebra alg(build_root_system({'B', 2}));
  AdOperator g = alg.random_group_element(77, 5, 2);
  std::vector<int> rows = {0, 3, 7};
  RatMat sel = alg.random_group_rows(77, 5, 2, rows);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < alg.dim(); ++j) CHECK(sel.at(i, j) == g.matrix.at(rows[i], j));
}
