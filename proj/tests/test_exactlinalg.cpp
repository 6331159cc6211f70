#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flagrank/ratmat.hpp"

using namespace flagrank;

namespace {

RatMat random_int_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatMat a(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) a.at(i, j) = d(rng);
  return a;
}

// Independent oracle: naive Gaussian elimination over rationals.
std::size_t rank_oracle(RatMat a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, c) == 0) continue;
      Rat f = a.at(i, c) / a.at(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    ++r;
  }
  return r;
}

// Independent oracle: cofactor expansion.
Rat det_oracle(const RatMat& a) {
  std::size_t n = a.rows();
  if (n == 1) return a.at(0, 0);
  Rat d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a.at(0, j) == 0) continue;
    RatMat minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = a.at(i, c);
      }
    }
    Rat term = a.at(0, j) * det_oracle(minor);
    d += (j % 2 == 0) ? term : -term;
  }
  return d;
}

}  // namespace

TEST_CASE("rank: identity and proportional rows") {
  CHECK(RatMat::identity(3).rank() == 3);
  RatMat m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  CHECK(m.rank() == 1);
  CHECK(RatMat(0, 0).rank() == 0);
  CHECK(RatMat(3, 4).rank() == 0);
}

TEST_CASE("rank matches Gaussian oracle on random 10x10 matrices") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    RatMat a = random_int_matrix(rng, 10, 10, -9, 9);
    CHECK(a.rank() == rank_oracle(a));
    CHECK(a.rank() == a.transpose().rank());
  }
}

TEST_CASE("kernel basis: trivial cases") {
  CHECK(RatMat::identity(3).kernel_basis().empty());
  CHECK(RatMat(2, 3).kernel_basis().size() == 3);
  RatMat row(1, 3);
  row.at(0, 0) = 1;
  row.at(0, 1) = 1;
  auto ker = row.kernel_basis();
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) CHECK(v[0] + v[1] == 0);
}

TEST_CASE("kernel vectors are annihilated exactly; rank-nullity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    RatMat a = random_int_matrix(rng, 5, 8, -4, 4);
    auto ker = a.kernel_basis();
    CHECK(a.rank() + ker.size() == a.cols());
    for (const auto& v : ker) {
      auto img = a.apply(v);
      for (const auto& x : img) CHECK(x == 0);
    }
  }
}

TEST_CASE("determinant: trivial and oracle cases") {
  CHECK(RatMat::identity(4).determinant() == 1);
  RatMat d(2, 2);
  d.at(0, 0) = 2;
  d.at(1, 1) = 3;
  CHECK(d.determinant() == 6);
  CHECK_THROWS_AS(RatMat(2, 3).determinant(), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    RatMat a = random_int_matrix(rng, 4, 4, -6, 6);
    CHECK(a.determinant() == det_oracle(a));
    CHECK((a.determinant() != 0) == (a.rank() == 4));
  }
}

TEST_CASE("determinant handles rational entries") {
  RatMat a(2, 2);
  a.at(0, 0) = Rat(1, 2);
  a.at(0, 1) = Rat(1, 3);
  a.at(1, 0) = Rat(1, 5);
  a.at(1, 1) = Rat(1, 7);
  CHECK(a.determinant() == Rat(1, 14) - Rat(1, 15));
}

TEST_CASE("solve and inverse") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    RatMat a = random_int_matrix(rng, 5, 5, -5, 5);
    if (a.determinant() == 0) continue;
    RatMat inv = a.inverse();
    CHECK(a * inv == RatMat::identity(5));
    std::vector<Rat> b(5);
    for (auto& x : b) x = std::uniform_int_distribution<int>(-9, 9)(rng);
    auto x = a.solve(b);
    REQUIRE(x.has_value());
    auto ax = a.apply(*x);
    CHECK(ax == b);
  }
}

TEST_CASE("column span intersection") {
  // span{e1,e2} and span{e2,e3} in Q^3 intersect in span{e2}.
  RatMat a(3, 2), b(3, 2);
  a.at(0, 0) = 1;
  a.at(1, 1) = 1;
  b.at(1, 0) = 1;
  b.at(2, 1) = 1;
  RatMat inter = column_span_intersection(a, b);
  REQUIRE(inter.cols() == 1);
  CHECK(inter.at(0, 0) == 0);
  CHECK(inter.at(1, 0) != 0);
  CHECK(inter.at(2, 0) == 0);
}
