#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagrank/rational.hpp"

namespace flagrank {

// Simple root numbering follows Humphreys throughout: chains are numbered
// left to right; in B_l the short root is alpha_l, in C_l the long root is
// alpha_l; in D_l the fork ends are alpha_{l-1}, alpha_l; in E_n node 2 hangs
// off node 4 of the chain 1-3-4-5-6(-7)(-8).
struct SimpleType {
  char family;  // 'A'..'G'
  int rank;
};

// D_3 (= A_3) is accepted internally; the CLI layer rejects it.
bool valid_simple_type(const SimpleType& t, std::string* why = nullptr);

using RootCoords = std::vector<int>;  // coefficients over the simple roots

class RootSystem {
 public:
  SimpleType type;
  std::vector<std::vector<int>> cartan;   // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<RootCoords> positive_roots;  // ordered by height, then lex
  std::vector<Rat> len2;                   // (alpha,alpha) per positive root, short roots = 2
  std::vector<Rat> simple_len2;

  int rank() const { return type.rank; }
  std::size_t num_positive() const { return positive_roots.size(); }

  // Index into positive_roots, or -1.  Accepts either sign: a negative root
  // maps to the index of its negative.
  int positive_index(const RootCoords& r) const;
  bool is_root(const RootCoords& r) const;
  static int height(const RootCoords& r);

  // <r, alpha_i^vee> for 0-based simple index i.
  int pairing_with_simple_coroot(const RootCoords& r, int i) const;

  Rat length2(const RootCoords& r) const;

  // Permutation sigma (0-based) with -w0(alpha_i) = alpha_{sigma(i)}.
  std::vector<int> minus_w0_involution() const;

  // Sub-vector of |coords| at the positions of I (1-based simple indices).
  std::vector<int> i_degree(const RootCoords& r, const std::vector<int>& I) const;

 private:
  std::map<RootCoords, int> index_;
  friend RootSystem build_root_system(const SimpleType&);
};

RootSystem build_root_system(const SimpleType& t);

// Cartan matrix for a supported type, cartan[i][j] = <alpha_i, alpha_j^vee>.
std::vector<std::vector<int>> cartan_matrix(const SimpleType& t);

}  // namespace flagrank
