#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "flagrank/ratmat.hpp"

namespace flagrank {

// Matrix model of SO_{2l+1}, Sp_{2l} or SO_{2l} preserving the anti-diagonal
// bilinear form (symmetric with all ones; for Sp the top half is +1 and the
// bottom half -1).
struct ClassicalModel {
  char family = 'D';  // 'B', 'C', 'D'
  int l = 0;
  int N = 0;
  bool symplectic = false;
  RatMat gram;
};

ClassicalModel build_classical_model(char family, int l);

// Basis of {X : X^T gram + gram X = 0}; its size equals dim g.
std::vector<RatMat> lie_algebra_basis(const ClassicalModel& m);

bool in_lie_algebra(const ClassicalModel& m, const RatMat& X);
bool preserves_form(const ClassicalModel& m, const RatMat& g);

// exp of a nilpotent matrix; throws std::invalid_argument otherwise.
RatMat exp_nilpotent(const RatMat& X);

// Product of exponentials of nilpotent algebra generators with small integer
// coefficients; lands in the identity component (det = 1).
RatMat random_group_element(const ClassicalModel& m, std::uint64_t seed,
                            int length = 24, int height = 2);

// --- subspaces (columns of a full-rank matrix) ---

struct Subspace {
  RatMat basis;
  int dim() const { return static_cast<int>(basis.cols()); }
};

Subspace make_subspace(const RatMat& columns);  // reduces to a basis
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
bool same_subspace(const Subspace& a, const Subspace& b);
bool is_isotropic(const RatMat& gram, const Subspace& s);
Subspace apply_matrix(const RatMat& g, const Subspace& s);

// --- the block cases of the Levi action on u^- ---

enum class LeviCase { B1l, C1l, Dll, D1l, D1ll };

// Element of u^- embedded as an N x N matrix of the model, lower block
// triangular for the standard isotropic flag.
struct LeviPoint {
  LeviCase tag;
  int l;
  RatMat X;
};

// Block-diagonal element of the Levi subgroup, embedded.
struct LeviElement {
  LeviCase tag;
  int l;
  RatMat g;
};

ClassicalModel case_model(LeviCase tag, int l);

LeviPoint random_levi_point(LeviCase tag, int l, std::uint64_t seed, int height = 3);
LeviElement random_levi_element(LeviCase tag, int l, std::uint64_t seed);
LeviElement embed_levi(LeviCase tag, int l, const RatMat& A, const Rat& a, const Rat& t);
LeviPoint act(const LeviElement& g, const LeviPoint& u);  // conjugation

// The case's rational invariant; throws std::domain_error when the
// denominator vanishes at u.
Rat case_invariant(const LeviPoint& u);

struct InvariantReport {
  int trials = 0;
  bool all_equal = false;
  Rat value;        // at the base point
  Rat other_value;  // at a second point
  bool nonconstant = false;
};

// Exact invariance of the case invariant under `trials` random Levi
// elements, plus a non-constancy witness.  Supported: B1l, C1l, Dll (l odd),
// D1ll.
InvariantReport verify_rational_invariant(LeviCase tag, int l, std::uint64_t seed,
                                          int trials);

// --- constructive algorithms ---

// The target of the normal form: u1 = R, u2 = e_1, u3 = e_1 + e_2 in block
// coordinates, embedded in u^-.
LeviPoint canonical_levi_point(LeviCase tag, int l);

struct CanonicalizeResult {
  LeviElement g;
  LeviPoint canonical;
};

// Open-orbit normal form for Dll / D1l with l even: g.u = (R, e_1, e_1+e_2)
// in the case's block coordinates.  Throws std::invalid_argument naming the
// violated genericity condition, or std::domain_error when the required
// scaling is not a rational square.
CanonicalizeResult canonicalize_levi_triple(const LeviPoint& u);

struct Lemma1Result {
  RatMat basis;  // columns; basis^T gram basis = Q exactly
  RatMat M1, M2, M3;
};

// Common symplectic-style basis for three pairwise transversal maximal
// isotropic subspaces of a 2k-dim symmetric form space; k must be even.
Lemma1Result lemma1_basis(const RatMat& gram, const Subspace& U1,
                          const Subspace& U2, const Subspace& U3);

struct DTriplePoint {
  Subspace s;          // maximal isotropic, dim l
  std::vector<Rat> a;  // a line inside s
};

// SO_{2l} (l odd) reduction of a generic triple of (subspace, line) flags to
// the reference tuple.  Returns B with B^T Q B = Q and det B = 1.  Throws
// std::invalid_argument naming the violated condition (1)-(7).
RatMat reduce_triple_D_odd(int l, const std::array<DTriplePoint, 3>& point);

// The fixed tuple every generic triple is reduced to.
std::array<DTriplePoint, 3> reference_triple_D_odd(int l);

// --- cross-ratio infinitude certificates ---

enum class CrossRatioKind { Quadruple, SO6, SO2l_P1l, SO2l_Pll };

struct CrossRatioReport {
  Rat value1, value2;
  bool invariant = false;  // exact under all sampled group elements
  bool distinct = false;
  int trials = 0;
};

// Cross ratio of four lines spanning a plane, via 2x2 determinants in any
// basis of the carrier.
Rat cross_ratio_of_lines(const std::array<std::vector<Rat>, 4>& lines);

// params: Quadruple = {t1,t2,t3,t4} on the unipotent curve; other kinds =
// {tau1, tau2, tau3} defining the lines T_i.  The report evaluates params1
// and params2 and checks exact invariance under `trials` random elements of
// the relevant classical group.
CrossRatioReport cross_ratio_certificate(CrossRatioKind kind, int l,
                                         const std::vector<Rat>& params1,
                                         const std::vector<Rat>& params2,
                                         int trials, std::uint64_t seed);

}  // namespace flagrank
