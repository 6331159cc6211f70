#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagrank/orbitrank.hpp"

using namespace flagrank;

namespace {
struct Setup {
  ChevalleyAlgebra alg;
  ParabolicData p;
  Setup(SimpleType t, std::vector<int> nodes)
      : alg(build_root_system(t)), p(make_parabolic(alg, nodes)) {}
};
}  // namespace

TEST_CASE("a single point always lies on an open orbit") {
  for (auto& [t, node] : std::vector<std::pair<SimpleType, int>>{
           {{'A', 3}, 2}, {{'B', 3}, 1}, {{'G', 2}, 1}}) {
    Setup s(t, {node});
    TransitivityVerdict v = diagonal_open_orbit(s.alg, s.p, 1);
    CHECK(v.generically_transitive);
    CHECK(v.certificate.achieved_rank == s.p.flag_dim);
  }
}

TEST_CASE("projective space: PGL_{l+1} is (l+2)-transitive and no more") {
  // Classical fact: l+2 points of P^l in general position form a single
  // orbit, and l+3 points carry a cross-ratio-style invariant.
  for (int l = 1; l <= 3; ++l) {
    Setup s({'A', l}, {1});
    CHECK(gtd_flag(s.alg, s.p) == l + 2);
  }
}

TEST_CASE("Gr(2,4): open orbit on triples, dimension kills quadruples") {
  Setup s({'A', 3}, {2});
  TransitivityVerdict v3 = diagonal_open_orbit(s.alg, s.p, 3);
  CHECK(v3.generically_transitive);
  CHECK(v3.certificate.achieved_rank == 12);
  TransitivityVerdict v4 = diagonal_open_orbit(s.alg, s.p, 4);
  CHECK_FALSE(v4.generically_transitive);
  CHECK(v4.certificate.dimension_bound);  // 4*4 = 16 > dim sl_4 = 15
  CHECK(gtd_flag(s.alg, s.p) == 3);
}

TEST_CASE("quadrics and isotropic lines in low rank") {
  Setup b3(SimpleType{'B', 3}, {1});
  CHECK(diagonal_open_orbit(b3.alg, b3.p, 3).generically_transitive);
  // Four points on the 5-quadric: 20 <= dim so_7 = 21, yet no open orbit.
  TransitivityVerdict v4 = diagonal_open_orbit(b3.alg, b3.p, 4);
  CHECK_FALSE(v4.generically_transitive);
  CHECK_FALSE(v4.certificate.dimension_bound);
  CHECK(v4.certificate.attempts == RunConfig{}.retries);
  CHECK(v4.certificate.achieved_rank < v4.certificate.required_rank);

  Setup c2(SimpleType{'C', 2}, {1});
  CHECK(diagonal_open_orbit(c2.alg, c2.p, 3).generically_transitive);
  Setup d4(SimpleType{'D', 4}, {1});
  CHECK(diagonal_open_orbit(d4.alg, d4.p, 3).generically_transitive);
}

TEST_CASE("G_2 flags never admit an open orbit on triples") {
  for (int node : {1, 2}) {
    Setup s({'G', 2}, {node});
    TransitivityVerdict v = diagonal_open_orbit(s.alg, s.p, 3);
    CHECK_FALSE(v.generically_transitive);
    CHECK(v.certificate.dimension_bound);  // 3*5 = 15 > dim g_2 = 14
  }
}

TEST_CASE("F_4 triples fail by rank, not by dimension") {
  Setup s({'F', 4}, {4});
  RunConfig cfg;
  cfg.retries = 2;
  TransitivityVerdict v = diagonal_open_orbit(s.alg, s.p, 3, cfg);
  CHECK_FALSE(v.generically_transitive);
  CHECK_FALSE(v.certificate.dimension_bound);  // 3*15 = 45 <= 52
  CHECK(v.certificate.achieved_rank < 45);
}

TEST_CASE("Levi reduction matches the direct computation") {
  // For a self-opposite maximal parabolic, passing to the Levi acting on
  // u^- drops the transitivity degree by exactly 2.
  for (auto& [t, node] : std::vector<std::pair<SimpleType, int>>{
           {{'A', 3}, 2}, {{'B', 3}, 3}, {{'C', 2}, 1}, {{'D', 4}, 1}}) {
    Setup s(t, {node});
    REQUIRE(s.p.self_opposite);
    CHECK(gtd_flag(s.alg, s.p) == 2 + gtd_levi(s.alg, s.p));
  }
  // Oracle: GL_2 x GL_2 (Levi of Gr(2,4)) has an open orbit on one 2x2
  // matrix block (the invertible ones) but not on two.
  Setup gr(SimpleType{'A', 3}, {2});
  CHECK(levi_open_orbit(gr.alg, gr.p, 1).generically_transitive);
  CHECK_FALSE(levi_open_orbit(gr.alg, gr.p, 2).generically_transitive);
  CHECK(gtd_levi(gr.alg, gr.p) == 1);
}

TEST_CASE("double flag sphericity") {
  Setup p1(SimpleType{'A', 1}, {1});
  CHECK(double_flag_spherical(p1.alg, p1.p).generically_transitive);
  Setup gr(SimpleType{'A', 3}, {2});
  CHECK(double_flag_spherical(gr.alg, gr.p).generically_transitive);
  Setup quad(SimpleType{'B', 3}, {1});
  CHECK(double_flag_spherical(quad.alg, quad.p).generically_transitive);
  // Two full flags of sl_3: 2*3 = 6 > dim b = 5.
  Setup full(SimpleType{'A', 2}, {1, 2});
  TransitivityVerdict v = double_flag_spherical(full.alg, full.p);
  CHECK_FALSE(v.generically_transitive);
  CHECK(v.certificate.dimension_bound);
}

TEST_CASE("certificates are deterministic and self-consistent") {
  Setup s({'B', 3}, {1});
  RunConfig cfg;
  cfg.seed = 42;
  TransitivityVerdict a = diagonal_open_orbit(s.alg, s.p, 3, cfg);
  TransitivityVerdict b = diagonal_open_orbit(s.alg, s.p, 3, cfg);
  REQUIRE(a.generically_transitive);
  CHECK(a.certificate.achieved_rank == b.certificate.achieved_rank);
  REQUIRE(a.certificate.points.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(a.certificate.points[i].coeffs == b.certificate.points[i].coeffs);
  // First point is the base point eP.
  for (long t : a.certificate.points[0].coeffs) CHECK(t == 0);
  // Replaying the recorded witness reproduces the full rank.
  CHECK(tangent_rank(s.alg, s.p, a.certificate.points) == a.certificate.required_rank);
}
