#include "flagrank/chevalley.hpp"

#include <random>
#include <stdexcept>

namespace flagrank {

namespace {
RootCoords negate(const RootCoords& a) {
  RootCoords r(a);
  for (int& x : r) x = -x;
  return r;
}
RootCoords add(const RootCoords& a, const RootCoords& b) {
  RootCoords r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
RootCoords sub(const RootCoords& a, const RootCoords& b) {
  RootCoords r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
bool is_positive(const RootCoords& a) {
  for (int x : a)
    if (x != 0) return x > 0;
  return false;
}
bool is_zero(const RootCoords& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}
}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(RootSystem rs) : rs_(std::move(rs)) {
  const int l = rs_.rank();
  const int m = num_positive();
  dim_ = l + 2 * m;

  // Integer coroot coordinates: alpha^vee = sum k_i * (alpha_i,alpha_i)/(alpha,alpha) * alpha_i^vee.
  coroots_.resize(m);
  for (int k = 0; k < m; ++k) {
    const RootCoords& a = rs_.positive_roots[k];
    coroots_[k].resize(l);
    for (int i = 0; i < l; ++i) {
      Rat c = Rat(a[i]) * rs_.simple_len2[i] / rs_.len2[k];
      c.canonicalize();
      if (c.get_den() != 1) throw std::logic_error("coroot coordinate not integral");
      coroots_[k][i] = c.get_num().get_si();
    }
  }

  // Eager bracket table over all basis pairs.
  table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
  auto set = [&](int a, int b, std::vector<std::pair<int, long>> v) {
    table_[static_cast<std::size_t>(a) * dim_ + b] = std::move(v);
  };
  auto signed_root = [&](int basis) -> RootCoords {
    if (basis < l + m) return rs_.positive_roots[basis - l];
    return negate(rs_.positive_roots[basis - l - m]);
  };
  auto root_basis_index = [&](const RootCoords& r) -> int {
    int k = rs_.positive_index(r);
    return is_positive(r) ? x_index(k) : y_index(k);
  };
  for (int a = 0; a < dim_; ++a) {
    for (int b = 0; b < dim_; ++b) {
      if (a < l && b < l) continue;  // [h,h] = 0
      if (a < l || b < l) {
        int h = a < l ? a : b;
        int rb = a < l ? b : a;
        RootCoords r = signed_root(rb);
        long w = 0;
        for (int j = 0; j < l; ++j) w += r[j] * rs_.cartan[j][h];
        if (w != 0) set(a, b, {{rb, a < l ? w : -w}});
        continue;
      }
      RootCoords ra = signed_root(a), rb = signed_root(b);
      RootCoords s = add(ra, rb);
      if (is_zero(s)) {
        int k = rs_.positive_index(ra);
        long sgn = is_positive(ra) ? 1 : -1;
        std::vector<std::pair<int, long>> v;
        for (int i = 0; i < l; ++i)
          if (coroots_[k][i] != 0) v.push_back({i, sgn * coroots_[k][i]});
        set(a, b, std::move(v));
      } else if (rs_.is_root(s)) {
        long n = n_general(ra, rb);
        if (n != 0) set(a, b, {{root_basis_index(s), n}});
      }
    }
  }
}

int ChevalleyAlgebra::string_down(const RootCoords& a, const RootCoords& b) const {
  int p = 0;
  RootCoords cur(b);
  while (true) {
    cur = sub(cur, a);
    if (is_zero(cur) || !rs_.is_root(cur)) break;
    ++p;
  }
  return p;
}

long ChevalleyAlgebra::n_special(int ia, int ib) const {
  auto key = std::make_pair(ia, ib);
  auto it = special_memo_.find(key);
  if (it != special_memo_.end()) return it->second;

  const RootCoords& a = rs_.positive_roots[ia];
  const RootCoords& b = rs_.positive_roots[ib];
  RootCoords gamma = add(a, b);
  int ig = rs_.positive_index(gamma);

  // Extraspecial pair of gamma: minimal first component in the root order.
  int iea = -1, ieb = -1;
  for (int k = 0; k < static_cast<int>(rs_.num_positive()); ++k) {
    RootCoords beta = sub(gamma, rs_.positive_roots[k]);
    if (!is_positive(beta)) continue;
    int j = rs_.positive_index(beta);
    if (j < 0 || j <= k) continue;
    iea = k;
    ieb = j;
    break;
  }
  if (iea < 0) throw std::logic_error("no extraspecial pair for a decomposable root");

  long value;
  if (ia == iea) {
    value = string_down(a, b) + 1;
  } else {
    // Jacobi identity on (x_alpha, x_beta, y_a), with (alpha,beta) the
    // extraspecial pair of gamma = a + b:
    //   N_{gamma,-a} N_{alpha,beta} = -N_{beta,-a} N_{beta-a,alpha} - N_{-a,alpha} N_{alpha-a,beta}
    // then rotate (gamma, -a, -b) back to the pair (a, b).
    const RootCoords& alpha = rs_.positive_roots[iea];
    const RootCoords& beta = rs_.positive_roots[ieb];
    RootCoords na = negate(a);
    long rhs = 0;
    RootCoords bma = sub(beta, a);
    if (!is_zero(bma) && rs_.is_root(bma)) rhs -= n_general(beta, na) * n_general(bma, alpha);
    RootCoords ama = sub(alpha, a);
    if (!is_zero(ama) && rs_.is_root(ama)) rhs -= n_general(na, alpha) * n_general(ama, beta);
    long n_extra = n_special(iea, ieb);
    if (rhs % n_extra != 0) throw std::logic_error("structure constant recursion not integral");
    long n_gamma_na = rhs / n_extra;
    // N_{a,b} = -(|gamma|^2 / |b|^2) * N_{gamma,-a}
    Rat ratio = rs_.len2[ig] / rs_.len2[ib];
    Rat v = -ratio * n_gamma_na;
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("structure constant rotation not integral");
    value = v.get_num().get_si();
  }
  special_memo_[key] = value;
  return value;
}

long ChevalleyAlgebra::n_general(const RootCoords& a0, const RootCoords& b0) const {
  RootCoords a(a0), b(b0);
  Rat factor = 1;
  for (int step = 0; step < 4; ++step) {
    RootCoords s = add(a, b);
    if (is_zero(s) || !rs_.is_root(s)) return 0;
    bool pa = is_positive(a), pb = is_positive(b);
    if (!pa && !pb) {
      a = negate(a);
      b = negate(b);
      factor = -factor;
      pa = pb = true;
    }
    if (pa && pb) {
      int ia = rs_.positive_index(a), ib = rs_.positive_index(b);
      long n = ia < ib ? n_special(ia, ib) : -n_special(ib, ia);
      Rat v = factor * n;
      v.canonicalize();
      if (v.get_den() != 1) throw std::logic_error("structure constant not integral");
      return v.get_num().get_si();
    }
    // Mixed signs: N_{a,b} = (|a+b|^2/|b|^2) N_{-a-b,a}.
    int is = rs_.positive_index(s);
    int ib2 = rs_.positive_index(b);
    factor *= rs_.len2[is] / rs_.len2[ib2];
    RootCoords na = negate(s);
    b = a;
    a = na;
  }
  throw std::logic_error("structure constant rotation failed to terminate");
}

long ChevalleyAlgebra::structure_constant(const RootCoords& a, const RootCoords& b) const {
  if (!rs_.is_root(a) || !rs_.is_root(b)) throw std::invalid_argument("structure_constant: not a root");
  RootCoords s = add(a, b);
  if (is_zero(s) || !rs_.is_root(s)) return 0;
  return n_general(a, b);
}

const std::vector<std::pair<int, long>>& ChevalleyAlgebra::bracket_basis(int a, int b) const {
  return table_[static_cast<std::size_t>(a) * dim_ + b];
}

LieElement ChevalleyAlgebra::basis_element(int idx) const {
  LieElement e = zero();
  e[idx] = 1;
  return e;
}

LieElement ChevalleyAlgebra::bracket(const LieElement& a, const LieElement& b) const {
  if (static_cast<int>(a.size()) != dim_ || static_cast<int>(b.size()) != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  LieElement out = zero();
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      for (const auto& [k, c] : bracket_basis(i, j)) out[k] += a[i] * b[j] * c;
    }
  }
  return out;
}

RatMat ChevalleyAlgebra::ad(const LieElement& a) const {
  RatMat m(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < dim_; ++j)
      for (const auto& [k, c] : bracket_basis(i, j)) m.at(k, j) += a[i] * c;
  }
  return m;
}

AdOperator ChevalleyAlgebra::exp_ad(const LieElement& a) const {
  RatMat A = ad(a);
  RatMat sum = RatMat::identity(dim_);
  RatMat term = A;
  int k = 1;
  while (!term.is_zero()) {
    sum = sum + term;
    ++k;
    if (k > dim_ + 1) throw std::invalid_argument("exp_ad: ad(a) is not nilpotent");
    term = (term * A).scaled(Rat(1, k));
  }
  return AdOperator{std::move(sum), AdOperator::Kind::GroupElement};
}

std::vector<ChevalleyAlgebra::Factor> ChevalleyAlgebra::draw_factors(std::uint64_t seed, int length,
                                                                     int height) const {
  if (length < 1) throw std::invalid_argument("random group element: length must be >= 1");
  if (height < 0) throw std::invalid_argument("random group element: height must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> root_dist(0, num_positive() - 1);
  std::uniform_int_distribution<int> side(0, 1);
  std::uniform_int_distribution<int> coeff(-height, height);
  std::vector<Factor> fs;
  fs.reserve(length);
  for (int i = 0; i < length; ++i) fs.push_back({root_dist(rng), side(rng) == 1, coeff(rng)});
  return fs;
}

RatMat ChevalleyAlgebra::rows_times_exp(const RatMat& m, const Factor& f) const {
  // Sparse columns of ad(t * x_beta) (or y_beta).
  int basis = f.lower ? y_index(f.root) : x_index(f.root);
  std::vector<std::vector<std::pair<int, Rat>>> cols(dim_);
  int nil = 0;
  for (int j = 0; j < dim_; ++j)
    for (const auto& [k, c] : bracket_basis(basis, j)) {
      cols[j].push_back({k, Rat(c) * f.t});
      ++nil;
    }
  if (nil == 0 || f.t == 0) return m;
  auto right_mult = [&](const RatMat& b) {
    RatMat r(b.rows(), static_cast<std::size_t>(dim_));
    for (std::size_t j = 0; j < static_cast<std::size_t>(dim_); ++j)
      for (const auto& [k, v] : cols[j])
        for (std::size_t i = 0; i < b.rows(); ++i)
          if (b.at(i, k) != 0) r.at(i, j) += b.at(i, k) * v;
    return r;
  };
  RatMat sum = m;
  RatMat term = right_mult(m);
  int k = 1;
  while (!term.is_zero()) {
    sum = sum + term;
    ++k;
    if (k > dim_ + 1) throw std::logic_error("unipotent factor failed to terminate");
    term = right_mult(term).scaled(Rat(1, k));
  }
  return sum;
}

RatMat ChevalleyAlgebra::random_group_rows(std::uint64_t seed, int length, int height,
                                           const std::vector<int>& row_indices) const {
  RatMat m(row_indices.size(), static_cast<std::size_t>(dim_));
  for (std::size_t i = 0; i < row_indices.size(); ++i) m.at(i, row_indices[i]) = 1;
  for (const Factor& f : draw_factors(seed, length, height)) m = rows_times_exp(m, f);
  return m;
}

RatMat ChevalleyAlgebra::word_rows(const std::vector<UnipotentFactor>& word,
                                   const std::vector<int>& row_indices) const {
  RatMat m(row_indices.size(), static_cast<std::size_t>(dim_));
  for (std::size_t i = 0; i < row_indices.size(); ++i) m.at(i, row_indices[i]) = 1;
  for (const UnipotentFactor& f : word) {
    if (f.root < 0 || f.root >= num_positive())
      throw std::invalid_argument("word_rows: root index out of range");
    m = rows_times_exp(m, Factor{f.root, f.lower, static_cast<int>(f.t)});
  }
  return m;
}

AdOperator ChevalleyAlgebra::random_group_element(std::uint64_t seed, int length, int height) const {
  std::vector<int> all(dim_);
  for (int i = 0; i < dim_; ++i) all[i] = i;
  return AdOperator{random_group_rows(seed, length, height, all), AdOperator::Kind::GroupElement};
}

}  // namespace flagrank
