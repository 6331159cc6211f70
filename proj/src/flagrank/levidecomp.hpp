#pragma once

#include <vector>

#include "flagrank/chevalley.hpp"
#include "flagrank/parabolic.hpp"

namespace flagrank {

// One graded piece of u^- under the marked-node multigrading.  The center of
// the Levi acts on the piece by a single character, recorded as `degree`
// (coefficients of the roots at the marked nodes, which all agree within a
// piece).
struct LeviSummand {
  std::vector<int> degree;  // one entry per marked node
  std::vector<int> roots;   // positive-root indices, ascending
  bool irreducible = false;
};

struct LeviDecomposition {
  std::vector<LeviSummand> summands;  // sorted by degree (lex)
};

// Decomposition of u^- as a module over the Levi subgroup.
LeviDecomposition decompose_u_minus(const ChevalleyAlgebra& alg,
                                    const ParabolicData& p);

// Basis of quadratic forms on a summand invariant under the semisimple part
// of the Levi, as symmetric matrices in the y-basis of the summand.
std::vector<RatMat> invariant_quadratics(const ChevalleyAlgebra& alg,
                                         const ParabolicData& p,
                                         const LeviSummand& s);

// Integer basis of the relations sum_s m_s * degree_s = 0 among the central
// characters of the summands.  A relation with support on summands carrying
// relative invariants exhibits a non-constant invariant rational function.
std::vector<std::vector<long>> central_weight_relations(const LeviDecomposition& d);

}  // namespace flagrank
