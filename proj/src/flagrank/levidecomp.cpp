#include "flagrank/levidecomp.hpp"

#include <map>
#include <stdexcept>

namespace flagrank {

LeviDecomposition decompose_u_minus(const ChevalleyAlgebra& alg,
                                    const ParabolicData& p) {
  const RootSystem& rs = alg.root_system();
  std::map<std::vector<int>, std::vector<int>> classes;
  for (int r : p.u_roots)
    classes[rs.i_degree(rs.positive_roots[r], p.marked)].push_back(r);

  LeviDecomposition d;
  for (auto& [deg, roots] : classes) {
    LeviSummand s;
    s.degree = deg;
    s.roots = roots;

    // Every weight space is one-dimensional, so L-submodules are spanned by
    // subsets of the roots closed under adding/subtracting Levi simples.
    // The piece is irreducible iff that move graph is connected.
    std::vector<int> comp(roots.size(), -1);
    std::vector<std::size_t> queue{0};
    comp[0] = 0;
    while (!queue.empty()) {
      std::size_t k = queue.back();
      queue.pop_back();
      for (int i : p.levi_simple)
        for (int sgn : {-1, 1}) {
          RootCoords b = rs.positive_roots[s.roots[k]];
          b[i] += sgn;
          if (!rs.is_root(b)) continue;
          int idx = rs.positive_index(b);
          for (std::size_t j = 0; j < roots.size(); ++j)
            if (s.roots[j] == idx && comp[j] < 0) {
              comp[j] = 0;
              queue.push_back(j);
            }
        }
    }
    s.irreducible = true;
    for (int c : comp)
      if (c < 0) s.irreducible = false;
    d.summands.push_back(std::move(s));
  }
  return d;
}

std::vector<RatMat> invariant_quadratics(const ChevalleyAlgebra& alg,
                                         const ParabolicData& p,
                                         const LeviSummand& s) {
  const std::size_t d = s.roots.size();
  std::vector<int> slot(alg.dim(), -1);
  for (std::size_t i = 0; i < d; ++i) slot[alg.y_index(s.roots[i])] = static_cast<int>(i);

  // Action matrices of the semisimple Levi generators on the y-span.
  std::vector<RatMat> gens;
  for (int i : p.levi_simple)
    for (bool lower : {false, true}) {
      RootCoords simple(alg.rank(), 0);
      simple[i] = 1;
      int k0 = alg.root_system().positive_index(simple);
      int g = lower ? alg.y_index(k0) : alg.x_index(k0);
      RatMat A(d, d);
      for (std::size_t j = 0; j < d; ++j)
        for (const auto& [idx, c] : alg.bracket_basis(g, alg.y_index(s.roots[j]))) {
          if (slot[idx] < 0) throw std::logic_error("Levi action left the summand");
          A.at(slot[idx], j) = c;
        }
      gens.push_back(std::move(A));
    }

  // Solve A^T S + S A = 0 over symmetric S, unknowns s_{uv} with u <= v.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = u; v < d; ++v) unknowns.push_back({u, v});
  auto uidx = [&](std::size_t u, std::size_t v) {
    if (u > v) std::swap(u, v);
    return u * d - u * (u + 1) / 2 + v;
  };
  RatMat sys(gens.size() * d * d, unknowns.size());
  std::size_t row = 0;
  for (const RatMat& A : gens)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j, ++row)
        for (std::size_t k = 0; k < d; ++k) {
          // (A^T S)_{ij} = sum_k A_{ki} S_{kj}; (S A)_{ij} = sum_k S_{ik} A_{kj}
          if (A.at(k, i) != 0) sys.at(row, uidx(k, j)) += A.at(k, i);
          if (A.at(k, j) != 0) sys.at(row, uidx(i, k)) += A.at(k, j);
        }

  std::vector<RatMat> basis;
  for (const auto& vec : sys.kernel_basis()) {
    RatMat S(d, d);
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t v = u; v < d; ++v) S.at(u, v) = S.at(v, u) = vec[uidx(u, v)];
    basis.push_back(std::move(S));
  }
  return basis;
}

std::vector<std::vector<long>> central_weight_relations(const LeviDecomposition& d) {
  if (d.summands.empty()) return {};
  const std::size_t w = d.summands.front().degree.size();
  RatMat m(w, d.summands.size());
  for (std::size_t s = 0; s < d.summands.size(); ++s)
    for (std::size_t i = 0; i < w; ++i) m.at(i, s) = d.summands[s].degree[i];
  std::vector<std::vector<long>> out;
  for (const auto& vec : m.kernel_basis()) {
    // Clear denominators to an integer vector.
    Int lcm = 1;
    for (const Rat& x : vec) lcm = Int(lcm * x.get_den() / gcd(lcm, Int(x.get_den())));
    std::vector<long> rel;
    for (const Rat& x : vec) rel.push_back(Int(Rat(x * lcm).get_num()).get_si());
    out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace flagrank
