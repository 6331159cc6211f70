#include "flagrank/parabolic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace flagrank {

ParabolicData make_parabolic(const ChevalleyAlgebra& alg,
                             const std::vector<int>& marked_nodes) {
  const RootSystem& rs = alg.root_system();
  const int l = rs.rank();

  std::set<int> marked;
  for (int i : marked_nodes) {
    if (i < 1 || i > l) throw std::invalid_argument("parabolic node out of range");
    if (!marked.insert(i).second) throw std::invalid_argument("duplicate parabolic node");
  }
  if (marked.empty()) throw std::invalid_argument("parabolic needs at least one node");

  ParabolicData p;
  p.marked.assign(marked.begin(), marked.end());
  for (int i = 0; i < l; ++i)
    if (!marked.count(i + 1)) p.levi_simple.push_back(i);

  for (int r = 0; r < alg.num_positive(); ++r) {
    const RootCoords& root = rs.positive_roots[r];
    bool in_levi = true;
    for (int i : p.marked)
      if (root[i - 1] != 0) { in_levi = false; break; }
    (in_levi ? p.levi_roots : p.u_roots).push_back(r);
  }
  p.flag_dim = static_cast<int>(p.u_roots.size());

  std::vector<int> sigma = rs.minus_w0_involution();
  p.self_opposite = true;
  for (int i : p.marked)
    if (!marked.count(sigma[i - 1] + 1)) { p.self_opposite = false; break; }

  for (int r : p.u_roots) p.u_minus_basis.push_back(alg.y_index(r));
  for (int i = 0; i < l; ++i) p.levi_basis.push_back(alg.h_index(i));
  for (int r : p.levi_roots) p.levi_basis.push_back(alg.x_index(r));
  for (int r : p.levi_roots) p.levi_basis.push_back(alg.y_index(r));
  for (int i = 0; i < l; ++i) p.borel_basis.push_back(alg.h_index(i));
  for (int r = 0; r < alg.num_positive(); ++r) p.borel_basis.push_back(alg.x_index(r));
  return p;
}

}  // namespace flagrank
