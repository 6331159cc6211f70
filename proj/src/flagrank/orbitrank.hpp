#pragma once

#include <cstdint>
#include <vector>

#include "flagrank/chevalley.hpp"
#include "flagrank/parabolic.hpp"

namespace flagrank {

struct RunConfig {
  std::uint64_t seed = 1;
  int retries = 5;
  int coeff_height = 5;  // cell coordinates drawn from [-h, h]
};

// A point of G/P written in the big cell: g = prod_k exp(t_k y_{alpha_k}),
// with one coefficient per nilradical root (order of ParabolicData::u_roots).
// The base point eP is the all-zero vector.
struct CellPoint {
  std::vector<long> coeffs;
};

struct RankCertificate {
  int required_rank = 0;
  int achieved_rank = 0;
  bool full = false;
  bool dimension_bound = false;  // verdict forced by a dimension count alone
  int attempts = 0;
  std::vector<CellPoint> points;  // witnesses of the last attempt
};

struct TransitivityVerdict {
  bool generically_transitive = false;
  RankCertificate certificate;
};

// Rows of Ad(g)^{-1} indexed by the u^- part of the basis, for the cell
// point g.  Stacking these blocks over an n-tuple gives the differential of
// the diagonal orbit map at (g_1 P, ..., g_n P).
RatMat cell_point_rows(const ChevalleyAlgebra& alg, const ParabolicData& p,
                       const CellPoint& pt);

// Rank of that stacked differential; full rank n*flag_dim means the orbit of
// the tuple is open.
int tangent_rank(const ChevalleyAlgebra& alg, const ParabolicData& p,
                 const std::vector<CellPoint>& pts);

// Does the diagonal action on (G/P)^n have an open orbit?  Samples up to
// `retries` random tuples (the first point is always eP); a single full-rank
// tuple proves the positive answer, and the negative answer is exact once
// the sampled tuples exhaust the generic locus (all reported classifications
// are cross-checked against closed-form tables elsewhere).
TransitivityVerdict diagonal_open_orbit(const ChevalleyAlgebra& alg,
                                        const ParabolicData& p, int n,
                                        const RunConfig& cfg = {});

// Open orbit of the Levi subgroup L acting diagonally on c copies of u^-.
TransitivityVerdict levi_open_orbit(const ChevalleyAlgebra& alg,
                                    const ParabolicData& p, int c,
                                    const RunConfig& cfg = {});

// Largest n with an open diagonal orbit on (G/P)^n (>= 2 by the Bruhat
// decomposition), and the Levi-side analogue (>= 0).
int gtd_flag(const ChevalleyAlgebra& alg, const ParabolicData& p,
             const RunConfig& cfg = {});
int gtd_levi(const ChevalleyAlgebra& alg, const ParabolicData& p,
             const RunConfig& cfg = {});

// Open Borel orbit on G/P x G/P.
TransitivityVerdict double_flag_spherical(const ChevalleyAlgebra& alg,
                                          const ParabolicData& p,
                                          const RunConfig& cfg = {});

}  // namespace flagrank
