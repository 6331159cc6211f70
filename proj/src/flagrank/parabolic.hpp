#pragma once

#include <vector>

#include "flagrank/chevalley.hpp"
#include "flagrank/rootsystem.hpp"

namespace flagrank {

// Standard parabolic subalgebra attached to a set of marked (crossed) simple
// nodes.  The Levi part keeps the Cartan and every root supported away from
// the marked nodes; the nilradical u (resp. its opposite u^-) collects the
// positive (negative) roots whose support meets the marked set.
struct ParabolicData {
  std::vector<int> marked;        // 1-based simple node indices, sorted
  std::vector<int> levi_simple;   // unmarked nodes, 0-based
  std::vector<int> u_roots;       // positive-root indices in the nilradical
  std::vector<int> levi_roots;    // positive-root indices inside the Levi
  int flag_dim = 0;               // = u_roots.size() = dim G/P
  bool self_opposite = false;     // marked set stable under -w0

  // Basis indices into the ambient Chevalley algebra.
  std::vector<int> u_minus_basis;  // y_alpha, alpha in u_roots
  std::vector<int> levi_basis;     // all h_i, then x/y over levi_roots
  std::vector<int> borel_basis;    // all h_i, then all x_alpha
};

// Throws std::invalid_argument on an out-of-range or duplicate node.
ParabolicData make_parabolic(const ChevalleyAlgebra& alg,
                             const std::vector<int>& marked_nodes);

}  // namespace flagrank
