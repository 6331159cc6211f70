#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "flagrank/ratmat.hpp"
#include "flagrank/rootsystem.hpp"

namespace flagrank {

using LieElement = std::vector<Rat>;  // coefficients over the fixed basis order

struct AdOperator {
  enum class Kind { Adjoint, GroupElement };
  RatMat matrix;
  Kind kind = Kind::Adjoint;
};

// Chevalley basis of the simple Lie algebra of a root system, with exact
// integer structure constants.  Basis order: h_1..h_l, then x_alpha over the
// positive-root order, then y_alpha over the same order.  Signs of the
// constants N_{alpha,beta} are pinned by the extraspecial-pair convention:
// N > 0 on the extraspecial pair of each positive root.
class ChevalleyAlgebra {
 public:
  explicit ChevalleyAlgebra(RootSystem rs);

  const RootSystem& root_system() const { return rs_; }
  int dim() const { return dim_; }
  int rank() const { return rs_.rank(); }
  int num_positive() const { return static_cast<int>(rs_.num_positive()); }

  int h_index(int i) const { return i; }                         // 0-based simple index
  int x_index(int k) const { return rank() + k; }                // positive-root index
  int y_index(int k) const { return rank() + num_positive() + k; }

  // Structure constant N_{a,b} for two roots given as signed coordinate
  // vectors; zero when a+b is not a root.
  long structure_constant(const RootCoords& a, const RootCoords& b) const;

  // Sparse bracket of two basis elements: list of (basis index, coefficient).
  const std::vector<std::pair<int, long>>& bracket_basis(int a, int b) const;

  LieElement zero() const { return LieElement(dim_, Rat(0)); }
  LieElement basis_element(int idx) const;
  LieElement bracket(const LieElement& a, const LieElement& b) const;

  RatMat ad(const LieElement& a) const;

  // exp(ad a) as an exact matrix; throws std::invalid_argument if ad(a) is
  // not nilpotent (series fails to terminate by degree dim+1).
  AdOperator exp_ad(const LieElement& a) const;

  // Deterministic product of `length` unipotent factors exp(ad t*x_beta) /
  // exp(ad s*y_beta), t,s integers in [-height, height].
  AdOperator random_group_element(std::uint64_t seed, int length, int height) const;

  // Selected rows of the same product, computed without materializing the
  // full dim x dim matrix.  Row set is given by basis indices.
  RatMat random_group_rows(std::uint64_t seed, int length, int height,
                           const std::vector<int>& row_indices) const;

  struct UnipotentFactor {
    int root;    // positive-root index
    bool lower;  // exp(t ad y) instead of exp(t ad x)
    long t;
  };

  // Selected rows of prod_k exp(t_k ad x/y_{root_k}) for a prescribed word.
  RatMat word_rows(const std::vector<UnipotentFactor>& word,
                   const std::vector<int>& row_indices) const;

  // Coroot of a positive root in the h_i coordinates.
  const std::vector<long>& coroot(int pos_index) const { return coroots_[pos_index]; }

 private:
  struct Factor {
    int root;   // positive-root index
    bool lower; // y side
    int t;
  };
  std::vector<Factor> draw_factors(std::uint64_t seed, int length, int height) const;
  RatMat rows_times_exp(const RatMat& m, const Factor& f) const;

  long n_special(int ia, int ib) const;  // memoized, positive-root indices, ia < ib
  long n_general(const RootCoords& a, const RootCoords& b) const;
  int string_down(const RootCoords& a, const RootCoords& b) const;  // max k: b-ka root

  RootSystem rs_;
  int dim_;
  std::vector<std::vector<long>> coroots_;
  mutable std::map<std::pair<int, int>, long> special_memo_;
  // Dense table of basis brackets, built eagerly.
  std::vector<std::vector<std::pair<int, long>>> table_;
};

}  // namespace flagrank
