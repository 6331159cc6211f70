#include "flagrank/classical.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace flagrank {

namespace {

RatMat antidiag_ones(int n) {
  RatMat J(n, n);
  for (int i = 0; i < n; ++i) J.at(i, n - 1 - i) = 1;
  return J;
}

// Skew normal form target: diag(0ad kernel block, [[0,1],[-1,0]], ...).
RatMat skew_R(int n, int kernel_dim) {
  RatMat R(n, n);
  for (int i = kernel_dim; i + 1 < n; i += 2) {
    R.at(i, i + 1) = 1;
    R.at(i + 1, i) = -1;
  }
  return R;
}

int eps0(const ClassicalModel& m, int k) {  // symplectic sign, 0-based
  return k < m.N / 2 ? 1 : -1;
}

// X[N-1-j][N-1-i] = mirror_coeff(i,j) * X[i][j] for algebra elements.
Rat mirror_coeff(const ClassicalModel& m, int i, int j) {
  if (!m.symplectic) return Rat(-1);
  return Rat(eps0(m, m.N - 1 - i) * eps0(m, j));
}

void set_mirrored(const ClassicalModel& m, RatMat& X, int i, int j, const Rat& v) {
  int mi = m.N - 1 - j, mj = m.N - 1 - i;
  if (mi == i && mj == j) {
    if (!m.symplectic && v != 0)
      throw std::logic_error("orthogonal anti-diagonal entry must vanish");
    X.at(i, j) = v;
    return;
  }
  X.at(i, j) = v;
  X.at(mi, mj) = mirror_coeff(m, i, j) * v;
}

long rand_int(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return d(rng);
}

Rat rand_scale(std::mt19937_64& rng) {
  static const Rat choices[6] = {Rat(1),      Rat(-1),      Rat(2),
                                 Rat(-2),     Rat(1, 2),    Rat(-1, 2)};
  return choices[rand_int(rng, 0, 5)];
}

std::vector<int> block_sizes_for(LeviCase tag, int l) {
  switch (tag) {
    case LeviCase::B1l:
      return {1, l - 1, 1, l - 1, 1};
    case LeviCase::C1l:
    case LeviCase::D1l:
      return {1, l - 1, l - 1, 1};
    case LeviCase::Dll:
      return {l - 1, 2, l - 1};
    case LeviCase::D1ll:
      return {1, l - 2, 2, l - 2, 1};
  }
  throw std::logic_error("bad case");
}

std::vector<int> starts_of(const std::vector<int>& sizes) {
  std::vector<int> s(sizes.size());
  int acc = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    s[i] = acc;
    acc += sizes[i];
  }
  return s;
}

int block_of(const std::vector<int>& starts, const std::vector<int>& sizes, int idx) {
  for (std::size_t b = 0; b < starts.size(); ++b)
    if (idx >= starts[b] && idx < starts[b] + sizes[b]) return static_cast<int>(b);
  throw std::logic_error("index outside partition");
}

RatMat get_block(const RatMat& X, const std::vector<int>& starts,
                 const std::vector<int>& sizes, int r, int c) {
  RatMat B(sizes[r], sizes[c]);
  for (int i = 0; i < sizes[r]; ++i)
    for (int j = 0; j < sizes[c]; ++j) B.at(i, j) = X.at(starts[r] + i, starts[c] + j);
  return B;
}

struct CaseLayout {
  ClassicalModel model;
  std::vector<int> sizes, starts;
};

CaseLayout layout_of(LeviCase tag, int l) {
  CaseLayout lay;
  lay.model = case_model(tag, l);
  lay.sizes = block_sizes_for(tag, l);
  lay.starts = starts_of(lay.sizes);
  return lay;
}

int min_rank_for(LeviCase tag) {
  switch (tag) {
    case LeviCase::B1l:
    case LeviCase::C1l:
      return 3;
    default:
      return 4;
  }
}

void check_case_rank(LeviCase tag, int l) {
  if (l < min_rank_for(tag)) throw std::invalid_argument("rank too small for this case");
}

// Iterate over the independent entries of u^- for the case layout.
template <typename F>
void for_each_u_minus_rep(const CaseLayout& lay, F&& f) {
  int N = lay.model.N;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (block_of(lay.starts, lay.sizes, i) <= block_of(lay.starts, lay.sizes, j))
        continue;
      int mi = N - 1 - j, mj = N - 1 - i;
      if (mi == i && mj == j) {
        if (lay.model.symplectic) f(i, j);  // free anti-diagonal entry
        continue;
      }
      if (std::make_pair(i, j) <= std::make_pair(mi, mj)) f(i, j);
    }
}

bool is_u_minus_shaped(const CaseLayout& lay, const RatMat& X) {
  int N = lay.model.N;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (block_of(lay.starts, lay.sizes, i) <= block_of(lay.starts, lay.sizes, j) &&
          X.at(i, j) != 0)
        return false;
  return true;
}

std::vector<Rat> col_vec(const RatMat& m) {
  std::vector<Rat> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, 0);
  return v;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rat> mat_apply(const RatMat& m, const std::vector<Rat>& v) {
  return m.apply(v);
}

RatMat diag_join(const std::vector<RatMat>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.rows());
  RatMat g(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) g.at(off + i, off + j) = b.at(i, j);
    off += static_cast<int>(b.rows());
  }
  return g;
}

RatMat scalar1(const Rat& v) {
  RatMat m(1, 1);
  m.at(0, 0) = v;
  return m;
}

}  // namespace

ClassicalModel build_classical_model(char family, int l) {
  if (l < 1 || (family == 'D' && l < 2)) throw std::invalid_argument("bad rank");
  ClassicalModel m;
  m.family = family;
  m.l = l;
  switch (family) {
    case 'B':
      m.N = 2 * l + 1;
      m.symplectic = false;
      break;
    case 'C':
      m.N = 2 * l;
      m.symplectic = true;
      break;
    case 'D':
      m.N = 2 * l;
      m.symplectic = false;
      break;
    default:
      throw std::invalid_argument("family must be B, C or D");
  }
  m.gram = RatMat(m.N, m.N);
  for (int i = 0; i < m.N; ++i)
    m.gram.at(i, m.N - 1 - i) = m.symplectic ? Rat(eps0(m, i)) : Rat(1);
  return m;
}

std::vector<RatMat> lie_algebra_basis(const ClassicalModel& m) {
  std::vector<RatMat> basis;
  int N = m.N;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int mi = N - 1 - j, mj = N - 1 - i;
      if (mi == i && mj == j) {
        if (!m.symplectic) continue;  // forced zero
        RatMat X(N, N);
        X.at(i, j) = 1;
        basis.push_back(X);
        continue;
      }
      if (std::make_pair(i, j) > std::make_pair(mi, mj)) continue;
      RatMat X(N, N);
      set_mirrored(m, X, i, j, Rat(1));
      basis.push_back(X);
    }
  return basis;
}

bool in_lie_algebra(const ClassicalModel& m, const RatMat& X) {
  return (X.transpose() * m.gram + m.gram * X).is_zero();
}

bool preserves_form(const ClassicalModel& m, const RatMat& g) {
  return g.transpose() * m.gram * g == m.gram;
}

RatMat exp_nilpotent(const RatMat& X) {
  if (X.rows() != X.cols()) throw std::invalid_argument("exp of non-square matrix");
  int n = static_cast<int>(X.rows());
  RatMat result = RatMat::identity(n);
  RatMat term = RatMat::identity(n);
  for (int k = 1; k <= n; ++k) {
    term = (term * X).scaled(Rat(1, k));
    if (term.is_zero()) return result;
    result = result + term;
  }
  if (!(term * X).is_zero()) throw std::invalid_argument("matrix is not nilpotent");
  return result;
}

RatMat random_group_element(const ClassicalModel& m, std::uint64_t seed, int length,
                            int height) {
  std::mt19937_64 rng(seed);
  int N = m.N;
  RatMat g = RatMat::identity(N);
  int done = 0;
  while (done < length) {
    int i = static_cast<int>(rand_int(rng, 0, N - 1));
    int j = static_cast<int>(rand_int(rng, 0, N - 1));
    if (i == j || i + j == N - 1) continue;
    long t = rand_int(rng, -height, height);
    if (t == 0) continue;
    RatMat X(N, N);
    set_mirrored(m, X, i, j, Rat(t));
    g = g * exp_nilpotent(X);
    ++done;
  }
  return g;
}

// --- subspaces ---

Subspace make_subspace(const RatMat& columns) { return Subspace{columns.column_space_basis()}; }

Subspace intersect(const Subspace& a, const Subspace& b) {
  return Subspace{column_span_intersection(a.basis, b.basis)};
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  std::vector<std::vector<Rat>> cols;
  for (std::size_t j = 0; j < a.basis.cols(); ++j) cols.push_back(a.basis.column(j));
  for (std::size_t j = 0; j < b.basis.cols(); ++j) cols.push_back(b.basis.column(j));
  if (cols.empty()) return a;
  return make_subspace(RatMat::from_columns(cols));
}

bool same_subspace(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return false;
  return subspace_sum(a, b).dim() == a.dim();
}

bool is_isotropic(const RatMat& gram, const Subspace& s) {
  return (s.basis.transpose() * gram * s.basis).is_zero();
}

Subspace apply_matrix(const RatMat& g, const Subspace& s) {
  return make_subspace(g * s.basis);
}

// --- Levi cases ---

ClassicalModel case_model(LeviCase tag, int l) {
  check_case_rank(tag, l);
  switch (tag) {
    case LeviCase::B1l:
      return build_classical_model('B', l);
    case LeviCase::C1l:
      return build_classical_model('C', l);
    default:
      return build_classical_model('D', l);
  }
}

LeviPoint random_levi_point(LeviCase tag, int l, std::uint64_t seed, int height) {
  CaseLayout lay = layout_of(tag, l);
  std::mt19937_64 rng(seed);
  RatMat X(lay.model.N, lay.model.N);
  for_each_u_minus_rep(lay, [&](int i, int j) {
    set_mirrored(lay.model, X, i, j, Rat(rand_int(rng, -height, height)));
  });
  if (!in_lie_algebra(lay.model, X)) throw std::logic_error("u^- sample left the algebra");
  return LeviPoint{tag, l, X};
}

LeviElement embed_levi(LeviCase tag, int l, const RatMat& A, const Rat& a, const Rat& t) {
  CaseLayout lay = layout_of(tag, l);
  int na = static_cast<int>(A.rows());
  RatMat J = antidiag_ones(na);
  RatMat Abar = J * A.inverse().transpose() * J;
  RatMat torus(2, 2);
  torus.at(0, 0) = t;
  torus.at(1, 1) = Rat(1) / t;
  std::vector<RatMat> blocks;
  switch (tag) {
    case LeviCase::B1l:
      blocks = {scalar1(a), A, scalar1(Rat(1)), Abar, scalar1(Rat(1) / a)};
      break;
    case LeviCase::C1l:
    case LeviCase::D1l:
      blocks = {scalar1(a), A, Abar, scalar1(Rat(1) / a)};
      break;
    case LeviCase::Dll:
      blocks = {A, torus, Abar};
      break;
    case LeviCase::D1ll:
      blocks = {scalar1(a), A, torus, Abar, scalar1(Rat(1) / a)};
      break;
  }
  RatMat g = diag_join(blocks);
  if (static_cast<int>(g.rows()) != lay.model.N)
    throw std::invalid_argument("Levi block sizes do not match the case");
  if (!preserves_form(lay.model, g))
    throw std::logic_error("embedded Levi element does not preserve the form");
  return LeviElement{tag, l, g};
}

LeviElement random_levi_element(LeviCase tag, int l, std::uint64_t seed) {
  CaseLayout lay = layout_of(tag, l);
  std::mt19937_64 rng(seed);
  int na = lay.sizes[tag == LeviCase::Dll ? 0 : 1];
  RatMat A(na, na);
  do {
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j) A.at(i, j) = Rat(rand_int(rng, -3, 3));
  } while (A.determinant() == 0);
  return embed_levi(tag, l, A, rand_scale(rng), rand_scale(rng));
}

LeviPoint act(const LeviElement& g, const LeviPoint& u) {
  if (g.tag != u.tag || g.l != u.l) throw std::invalid_argument("case mismatch");
  CaseLayout lay = layout_of(u.tag, u.l);
  RatMat Y = g.g * u.X * g.g.inverse();
  if (!is_u_minus_shaped(lay, Y))
    throw std::logic_error("Levi action left the nilradical");
  return LeviPoint{u.tag, u.l, Y};
}

Rat case_invariant(const LeviPoint& u) {
  CaseLayout lay = layout_of(u.tag, u.l);
  const auto& st = lay.starts;
  const auto& sz = lay.sizes;
  int n = 0;
  switch (u.tag) {
    case LeviCase::B1l: {
      n = u.l - 1;
      RatMat v = get_block(u.X, st, sz, 1, 0);   // tautological column
      RatMat s = get_block(u.X, st, sz, 2, 1);   // dual row
      RatMat r = get_block(u.X, st, sz, 3, 0);   // second dual column (as J r)
      Rat num(0), den(0);
      for (int i = 0; i < n; ++i) {
        num += s.at(0, i) * v.at(i, 0);
        den += r.at(n - 1 - i, 0) * v.at(i, 0);
      }
      if (den == 0) throw std::domain_error("invariant denominator vanishes");
      return num * num / den;
    }
    case LeviCase::C1l: {
      n = u.l - 1;
      RatMat v = get_block(u.X, st, sz, 1, 0);
      RatMat r = get_block(u.X, st, sz, 2, 0);
      Rat w = get_block(u.X, st, sz, 3, 0).at(0, 0);
      if (w == 0) throw std::domain_error("invariant denominator vanishes");
      Rat num(0);
      for (int i = 0; i < n; ++i) num += r.at(n - 1 - i, 0) * v.at(i, 0);
      return num / w;
    }
    case LeviCase::Dll: {
      if (u.l % 2 == 0)
        throw std::invalid_argument("the (l-1,l) invariant exists only for odd l");
      n = u.l - 1;
      RatMat W = get_block(u.X, st, sz, 2, 0);
      RatMat M = antidiag_ones(n) * W;  // skew, generically invertible (n even)
      if (M.determinant() == 0) throw std::domain_error("invariant denominator vanishes");
      RatMat Minv = M.inverse();
      RatMat rows = get_block(u.X, st, sz, 1, 0);  // rows u2, u3
      Rat val(0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) val += rows.at(0, i) * Minv.at(i, j) * rows.at(1, j);
      return val;
    }
    case LeviCase::D1ll: {
      n = u.l - 2;
      RatMat v = get_block(u.X, st, sz, 1, 0);
      RatMat q = get_block(u.X, st, sz, 2, 0);   // two scalars
      RatMat s = get_block(u.X, st, sz, 2, 1);   // two dual rows
      if (q.at(0, 0) == 0) throw std::domain_error("invariant denominator vanishes");
      Rat num(0);
      for (int i = 0; i < n; ++i) num += s.at(0, i) * v.at(i, 0);
      return num / q.at(0, 0);
    }
    case LeviCase::D1l:
      throw std::invalid_argument("the (1,l) case has no rational invariant");
  }
  throw std::logic_error("bad case");
}

InvariantReport verify_rational_invariant(LeviCase tag, int l, std::uint64_t seed,
                                          int trials) {
  std::mt19937_64 rng(seed);
  InvariantReport rep;
  rep.trials = trials;
  LeviPoint base{tag, l, RatMat()};
  bool have = false;
  for (int attempt = 0; attempt < 200 && !have; ++attempt) {
    base = random_levi_point(tag, l, rng());
    try {
      rep.value = case_invariant(base);
      have = true;
    } catch (const std::domain_error&) {
    }
  }
  if (!have) throw std::runtime_error("could not sample off the denominator locus");
  rep.all_equal = true;
  for (int k = 0; k < trials; ++k) {
    LeviElement g = random_levi_element(tag, l, rng());
    LeviPoint moved = act(g, base);
    if (case_invariant(moved) != rep.value) rep.all_equal = false;
  }
  rep.nonconstant = false;
  for (int attempt = 0; attempt < 200 && !rep.nonconstant; ++attempt) {
    LeviPoint other = random_levi_point(tag, l, rng());
    try {
      rep.other_value = case_invariant(other);
      if (rep.other_value != rep.value) rep.nonconstant = true;
    } catch (const std::domain_error&) {
    }
  }
  return rep;
}

// --- skew normal form and symplectic helpers ---

namespace {

Rat skew_pair(const RatMat& M, const std::vector<Rat>& x, const std::vector<Rat>& y) {
  return dot(x, mat_apply(M, y));
}

// Columns C with C^T M C = skew_R(n, kernel_dim); requires the kernel of M to
// have the given dimension.
RatMat skew_basis(const RatMat& M, int kernel_dim) {
  int n = static_cast<int>(M.rows());
  auto ker = M.kernel_basis();
  if (static_cast<int>(ker.size()) != kernel_dim)
    throw std::invalid_argument("skew form has unexpected rank");
  std::vector<std::vector<Rat>> chosen;  // kernel vectors then (x_k, y_k) pairs
  for (auto& v : ker) {
    // normalize the leading entry for determinism
    Rat lead(0);
    for (auto& c : v)
      if (c != 0) {
        lead = c;
        break;
      }
    for (auto& c : v) c /= lead;
    chosen.push_back(v);
  }
  std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> pairs;
  auto reduce = [&](std::vector<Rat> z) {
    for (auto& [xk, yk] : pairs) {
      Rat zy = skew_pair(M, z, yk), zx = skew_pair(M, z, xk);
      for (int i = 0; i < n; ++i) z[i] += -zy * xk[i] + zx * yk[i];
    }
    return z;
  };
  auto independent = [&](const std::vector<Rat>& z) {
    std::vector<std::vector<Rat>> cols = chosen;
    cols.push_back(z);
    return RatMat::from_columns(cols).rank() == cols.size();
  };
  while (static_cast<int>(chosen.size()) < n) {
    std::vector<Rat> x;
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> e(n, Rat(0));
      e[i] = 1;
      e = reduce(e);
      if (independent(e)) {
        x = e;
        break;
      }
    }
    if (x.empty()) throw std::logic_error("symplectic completion failed");
    std::vector<Rat> y;
    for (int i = 0; i < n; ++i) {
      std::vector<Rat> e(n, Rat(0));
      e[i] = 1;
      e = reduce(e);
      Rat w = skew_pair(M, x, e);
      if (w != 0) {
        for (auto& c : e) c /= w;
        y = e;
        break;
      }
    }
    if (y.empty()) throw std::logic_error("no symplectic partner found");
    pairs.emplace_back(x, y);
    chosen.push_back(x);
    chosen.push_back(y);
  }
  return RatMat::from_columns(chosen);
}

// Transvection-based k with k x = y and k^T F k = F (F skew nondegenerate).
RatMat sp_map_to(const RatMat& F, const std::vector<Rat>& x, const std::vector<Rat>& y) {
  int n = static_cast<int>(F.rows());
  if (x == y) return RatMat::identity(n);
  auto transvection = [&](const std::vector<Rat>& u, const Rat& lambda) {
    RatMat T = RatMat::identity(n);
    std::vector<Rat> Fu = mat_apply(F, u);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) T.at(i, j) += lambda * u[i] * Fu[j];
    return T;
  };
  Rat c = skew_pair(F, x, y);
  if (c != 0) {
    std::vector<Rat> u(n);
    for (int i = 0; i < n; ++i) u[i] = y[i] - x[i];
    return transvection(u, Rat(1) / c);
  }
  // route through an intermediate vector
  std::vector<Rat> w;
  std::vector<Rat> w1, w2;
  for (int i = 0; i < n && (w1.empty() || w2.empty()); ++i) {
    std::vector<Rat> e(n, Rat(0));
    e[i] = 1;
    if (w1.empty() && skew_pair(F, x, e) != 0) w1 = e;
    if (w2.empty() && skew_pair(F, y, e) != 0) w2 = e;
  }
  if (w1.empty() || w2.empty()) throw std::invalid_argument("degenerate skew form");
  if (skew_pair(F, y, w1) != 0)
    w = w1;
  else if (skew_pair(F, x, w2) != 0)
    w = w2;
  else {
    w = w1;
    for (int i = 0; i < n; ++i) w[i] += w2[i];
  }
  RatMat k1 = sp_map_to(F, x, w);
  RatMat k2 = sp_map_to(F, w, y);
  return k2 * k1;
}

struct CanonState {
  RatMat M;            // skew form, transforms B M B^T
  std::vector<Rat> co; // covariant vector(s): B v
  std::vector<Rat> ct; // contravariant vector: B^{-T} v (D1l only)
  std::vector<Rat> co2;
  RatMat Btotal;
};

}  // namespace

LeviPoint canonical_levi_point(LeviCase tag, int l) {
  CaseLayout lay = layout_of(tag, l);
  int n = l - 1;
  RatMat J = antidiag_ones(n);
  RatMat R = skew_R(n, 1);
  RatMat X(lay.model.N, lay.model.N);
  auto set = [&](int i, int j, const Rat& v) { set_mirrored(lay.model, X, i, j, v); };
  if (tag == LeviCase::D1l) {
    // components: M = J X32 = R, phi = J X31 = e0, v = X21 = e0 + e1
    RatMat X32 = J * R;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int gi = lay.starts[2] + i, gj = lay.starts[1] + j;
        int mi = lay.model.N - 1 - gj, mj = lay.model.N - 1 - gi;
        if (std::make_pair(gi, gj) <= std::make_pair(mi, mj)) set(gi, gj, X32.at(i, j));
      }
    set(lay.starts[2] + (n - 1), 0, Rat(1));                // J phi = e_{n-1}
    set(lay.starts[1] + 0, 0, Rat(1));                      // v
    set(lay.starts[1] + 1, 0, Rat(1));
    return LeviPoint{tag, l, X};
  }
  if (tag == LeviCase::Dll) {
    RatMat X31 = J * R;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int gi = lay.starts[2] + i, gj = lay.starts[0] + j;
        int mi = lay.model.N - 1 - gj, mj = lay.model.N - 1 - gi;
        if (std::make_pair(gi, gj) <= std::make_pair(mi, mj)) set(gi, gj, X31.at(i, j));
      }
    set(lay.starts[1] + 0, 0, Rat(1));  // u2 = e0
    set(lay.starts[1] + 1, 0, Rat(1));  // u3 = e0 + e1
    set(lay.starts[1] + 1, 1, Rat(1));
    return LeviPoint{tag, l, X};
  }
  throw std::invalid_argument("canonical form implemented for the D cases only");
}

CanonicalizeResult canonicalize_levi_triple(const LeviPoint& u) {
  if (u.tag != LeviCase::Dll && u.tag != LeviCase::D1l)
    throw std::invalid_argument("canonical form implemented for the D cases only");
  if (u.l % 2 != 0) throw std::invalid_argument("canonical form requires even rank");
  CaseLayout lay = layout_of(u.tag, u.l);
  int n = u.l - 1;
  RatMat J = antidiag_ones(n);
  RatMat R = skew_R(n, 1);

  // extract components
  RatMat M(n, n);
  std::vector<Rat> va(n), vb(n);
  if (u.tag == LeviCase::D1l) {
    M = J * get_block(u.X, lay.starts, lay.sizes, 2, 1);
    RatMat phi = J * get_block(u.X, lay.starts, lay.sizes, 2, 0);
    RatMat v = get_block(u.X, lay.starts, lay.sizes, 1, 0);
    va = col_vec(phi);  // covariant: B phi
    vb = col_vec(v);    // contravariant: B^{-T} v
  } else {
    M = J * get_block(u.X, lay.starts, lay.sizes, 2, 0);
    RatMat rows = get_block(u.X, lay.starts, lay.sizes, 1, 0);
    for (int i = 0; i < n; ++i) {
      va[i] = rows.at(0, i);  // u2, covariant, torus weight t
      vb[i] = rows.at(1, i);  // u3, covariant, torus weight 1/t
    }
  }

  if ((u.tag == LeviCase::D1l) && dot(va, vb) == 0)
    throw std::invalid_argument("genericity failed: the pairing <u2, u3> vanishes");

  RatMat Btotal = RatMat::identity(n);
  auto apply_B = [&](const RatMat& B) {
    M = B * M * B.transpose();
    va = mat_apply(B, va);
    if (u.tag == LeviCase::D1l)
      vb = mat_apply(B.inverse().transpose(), vb);
    else
      vb = mat_apply(B, vb);
    Btotal = B * Btotal;
  };

  // Step 1: skew normal form of u1.
  RatMat C;
  try {
    C = skew_basis(M, 1);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("genericity failed: u1 does not have corank one");
  }
  apply_B(C.transpose());
  if (M != R) throw std::logic_error("skew normal form failed");

  // Step 2: u2 must have nonzero kernel coordinate; clear the rest.
  if (va[0] == 0)
    throw std::invalid_argument(
        "genericity failed: u2 lies in the hyperplane orthogonal to Ker u1");
  {
    RatMat B2 = RatMat::identity(n);
    for (int i = 1; i < n; ++i) B2.at(i, 0) = -va[i] / va[0];
    apply_B(B2);
  }
  if (M != R) throw std::logic_error("clearing step broke the normal form");

  if (vb[0] == 0)
    throw std::invalid_argument(
        "genericity failed: u3 lies in the hyperplane orthogonal to Ker u1");

  // Step 3: scale so that the two leading coordinates match (needs a square).
  Rat ratio = u.tag == LeviCase::D1l ? Rat(vb[0] / va[0]) : Rat(Rat(1) / (va[0] * vb[0]));
  auto d = rat_sqrt(ratio);
  if (!d || *d == 0)
    throw std::domain_error("the normalizing scale is not a rational square");
  {
    RatMat B4 = RatMat::identity(n);
    B4.at(0, 0) = *d;
    apply_B(B4);
  }

  // Step 4: move the tail of u3 to (vb[0], 0, ..., 0) with Sp(R2).
  std::vector<Rat> tail(n - 1), target(n - 1, Rat(0));
  for (int i = 1; i < n; ++i) tail[i - 1] = vb[i];
  bool zero_tail = true;
  for (auto& c : tail)
    if (c != 0) zero_tail = false;
  if (zero_tail)
    throw std::invalid_argument("genericity failed: u3 is proportional to u2");
  target[0] = vb[0];
  RatMat R2(n - 1, n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) R2.at(i, j) = R.at(i + 1, j + 1);
  {
    RatMat k = sp_map_to(R2, tail, target);
    RatMat B3 = RatMat::identity(n);
    RatMat kk = u.tag == LeviCase::D1l ? k.inverse().transpose() : k;
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n - 1; ++j) B3.at(i + 1, j + 1) = kk.at(i, j);
    apply_B(B3);
  }
  if (M != R) throw std::logic_error("symplectic step broke the normal form");

  // Step 5: final torus scaling.
  Rat a(1), t(1);
  if (u.tag == LeviCase::D1l) {
    a = va[0];  // now va[0] == vb[0]
    for (auto& c : va) c /= a;
    for (auto& c : vb) c /= a;
  } else {
    t = Rat(1) / va[0];
    for (auto& c : va) c *= t;
    for (auto& c : vb) c /= t;
  }

  LeviElement g = embed_levi(u.tag, u.l, Btotal.inverse().transpose(), a, t);
  LeviPoint canon = canonical_levi_point(u.tag, u.l);
  LeviPoint moved = act(g, u);
  if (!(moved.X == canon.X))
    throw std::logic_error("canonicalization verification failed");
  return CanonicalizeResult{g, canon};
}

// --- Lemma 1 ---

Lemma1Result lemma1_basis(const RatMat& gram, const Subspace& U1, const Subspace& U2,
                          const Subspace& U3) {
  int n = static_cast<int>(gram.rows());
  if (n % 2 != 0) throw std::invalid_argument("ambient dimension must be even");
  int k = n / 2;
  if (U1.dim() != k || U2.dim() != k || U3.dim() != k)
    throw std::invalid_argument("subspaces must be maximal isotropic (dim k)");
  if (k % 2 != 0)
    throw std::invalid_argument(
        "no common symplectic basis: the graph form forces k to be even");
  for (const Subspace* s : {&U1, &U2, &U3})
    if (!is_isotropic(gram, *s)) throw std::invalid_argument("subspace is not isotropic");
  if (intersect(U1, U2).dim() != 0 || intersect(U1, U3).dim() != 0 ||
      intersect(U2, U3).dim() != 0)
    throw std::invalid_argument("subspaces must intersect pairwise in zero");

  // U3 as the graph of A : U1 -> U2.
  std::vector<std::vector<Rat>> joint;
  for (int j = 0; j < k; ++j) joint.push_back(U1.basis.column(j));
  for (int j = 0; j < k; ++j) joint.push_back(U2.basis.column(j));
  RatMat B12 = RatMat::from_columns(joint);
  RatMat Xc(k, k), Yc(k, k);
  for (int j = 0; j < k; ++j) {
    auto sol = B12.solve(U3.basis.column(j));
    if (!sol) throw std::invalid_argument("U3 is not contained in U1 + U2");
    for (int i = 0; i < k; ++i) {
      Xc.at(i, j) = (*sol)[i];
      Yc.at(i, j) = (*sol)[k + i];
    }
  }
  if (Xc.determinant() == 0) throw std::invalid_argument("U3 meets U2");
  RatMat Ac = Yc * Xc.inverse();  // U1-coords -> U2-coords

  // Skew form (v, Aw) on U1 coordinates.
  RatMat F = U1.basis.transpose() * gram * U2.basis * Ac;
  if (!(F.transpose() + F).is_zero())
    throw std::logic_error("graph pairing is not skew");
  if (F.determinant() == 0) throw std::invalid_argument("graph pairing is degenerate");

  // Symplectic pairs of F, arranged [a_1..a_{k/2}, b_{k/2}..b_1].
  RatMat P = skew_basis(F, 0);  // columns x1,y1,x2,y2,...
  std::vector<std::vector<Rat>> arranged(k);
  for (int p = 0; p < k / 2; ++p) {
    arranged[p] = P.column(2 * p);
    arranged[k - 1 - p] = P.column(2 * p + 1);
  }
  RatMat Q1 = RatMat::from_columns(arranged);  // coords of q_1..q_k in U1

  std::vector<std::vector<Rat>> cols;
  RatMat AQ = U2.basis * Ac * Q1;
  RatMat U1Q = U1.basis * Q1;
  for (int j = 0; j < k; ++j) cols.push_back(U1Q.column(j));
  for (int j = 0; j < k; ++j) {
    auto c = AQ.column(j);
    if (j < k / 2)
      for (auto& x : c) x = -x;
    cols.push_back(c);
  }
  RatMat E = RatMat::from_columns(cols);
  if (!(E.transpose() * gram * E == antidiag_ones(n)))
    throw std::logic_error("lemma basis does not have the expected Gram matrix");

  RatMat M1(n, k), M2(n, k), M3(n, k);
  for (int j = 0; j < k; ++j) {
    M1.at(j, j) = 1;
    M2.at(k + j, j) = 1;
    M3.at(j, j) = 1;
    M3.at(k + j, j) = j < k / 2 ? Rat(-1) : Rat(1);
  }
  if (!same_subspace(make_subspace(E * M1), U1) ||
      !same_subspace(make_subspace(E * M2), U2) ||
      !same_subspace(make_subspace(E * M3), U3))
    throw std::logic_error("lemma basis does not reproduce the subspaces");
  return Lemma1Result{E, M1, M2, M3};
}

// --- triple reduction for SO_{2l}, l odd ---

std::array<DTriplePoint, 3> reference_triple_D_odd(int l) {
  if (l < 5 || l % 2 == 0) throw std::invalid_argument("need odd l >= 5");
  int N = 2 * l, k = l - 3;
  auto e = [&](int i) {  // 1-based standard vector
    std::vector<Rat> v(N, Rat(0));
    v[i - 1] = 1;
    return v;
  };
  auto add = [&](std::vector<Rat> a, const std::vector<Rat>& b, int sign) {
    for (int i = 0; i < N; ++i) a[i] += sign * b[i];
    return a;
  };
  std::array<DTriplePoint, 3> p;
  {
    std::vector<std::vector<Rat>> c;
    for (int i = 1; i <= l; ++i) c.push_back(e(i));
    p[0].s = make_subspace(RatMat::from_columns(c));
    p[0].a = e(1);
  }
  {
    std::vector<std::vector<Rat>> c = {e(3)};
    for (int j = 1; j <= k; ++j) c.push_back(e(3 + k + j));  // e_{l+1}..e_{2l-3}
    c.push_back(e(2 * l - 1));
    c.push_back(e(2 * l));
    p[1].s = make_subspace(RatMat::from_columns(c));
    p[1].a = add(e(2 * l - 1), e(2 * l), 1);
  }
  {
    std::vector<std::vector<Rat>> c = {e(2), e(2 * l - 2), e(2 * l)};
    for (int j = 1; j <= k; ++j)
      c.push_back(add(e(3 + j), e(3 + k + j), j <= k / 2 ? -1 : 1));
    p[2].s = make_subspace(RatMat::from_columns(c));
    p[2].a = add(add(e(2), e(2 * l - 2), 1), e(2 * l), 1);
  }
  return p;
}

RatMat reduce_triple_D_odd(int l, const std::array<DTriplePoint, 3>& point) {
  if (l < 5 || l % 2 == 0) throw std::invalid_argument("need odd l >= 5");
  ClassicalModel m = build_classical_model('D', l);
  const RatMat& Q = m.gram;
  int N = 2 * l;

  for (int i = 0; i < 3; ++i) {
    if (point[i].s.dim() != l || !is_isotropic(Q, point[i].s))
      throw std::invalid_argument("input subspace is not maximal isotropic");
    Subspace line = make_subspace(RatMat::from_columns({point[i].a}));
    if (line.dim() != 1 || intersect(line, point[i].s).dim() != 1)
      throw std::invalid_argument("input line is not contained in its subspace");
  }
  const Subspace &s1 = point[0].s, &s2 = point[1].s, &s3 = point[2].s;
  Subspace p23 = intersect(s2, s3), p13 = intersect(s1, s3), p12 = intersect(s1, s2);
  if (p12.dim() != 1 || p13.dim() != 1 || p23.dim() != 1)
    throw std::invalid_argument("condition (3) failed: a pairwise intersection is not a line");
  if (intersect(s1, p23).dim() != 0)
    throw std::invalid_argument("condition (1) failed: the triple intersection is nonzero");
  if (subspace_sum(subspace_sum(s1, s2), s3).dim() != N)
    throw std::invalid_argument("condition (2) failed: the subspaces do not span the space");
  RatMat amat = RatMat::from_columns({point[0].a, point[1].a, point[2].a});
  if (amat.rank() != 3)
    throw std::invalid_argument("condition (4) failed: the lines a_i are not independent");
  Subspace small = subspace_sum(subspace_sum(p12, p13), p23);
  Subspace aspan = make_subspace(amat);
  if (subspace_sum(small, aspan).dim() != 6)
    throw std::invalid_argument(
        "condition (5) failed: the a_i meet the span of the pairwise intersections");
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k2 = (i + 2) % 3;
    Subspace aline = make_subspace(RatMat::from_columns({point[i].a}));
    if (subspace_sum(subspace_sum(aline, point[j].s), point[k2].s).dim() != N)
      throw std::invalid_argument(
          "condition (6) failed: a_i with the other two subspaces does not span");
  }

  std::vector<std::vector<Rat>> f(7);  // 1-based f1..f6
  f[1] = point[0].a;
  f[2] = point[1].a;
  f[3] = point[2].a;
  f[4] = p23.basis.column(0);
  f[5] = p13.basis.column(0);
  f[6] = p12.basis.column(0);
  auto pair = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    return dot(x, mat_apply(Q, y));
  };
  Rat b1 = pair(f[1], f[2]), b2 = pair(f[1], f[3]), b3 = pair(f[2], f[3]);
  if (b1 == 0 || b2 == 0 || b3 == 0)
    throw std::invalid_argument("condition (7) failed: two of the lines a_i are orthogonal");
  Rat b4 = pair(f[1], f[4]), b5 = pair(f[2], f[5]), b6 = pair(f[3], f[6]);
  if (b4 == 0 || b5 == 0 || b6 == 0)
    throw std::invalid_argument(
        "condition (6) failed: a_i is orthogonal to the opposite intersection line");

  Rat c1sq = b3 / (b1 * b2);
  auto c1 = rat_sqrt(c1sq);
  if (!c1 || *c1 == 0)
    throw std::domain_error("the normalizing scale is not a rational square");
  Rat cs[7];
  cs[1] = *c1;
  cs[2] = Rat(1) / (cs[1] * b1);
  cs[3] = Rat(1) / (cs[1] * b2);
  cs[4] = Rat(1) / (cs[1] * b4);
  cs[5] = Rat(1) / (cs[2] * b5);
  cs[6] = Rat(1) / (cs[3] * b6);
  for (int i = 1; i <= 6; ++i)
    for (auto& c : f[i]) c *= cs[i];

  auto comb = [&](std::initializer_list<std::pair<int, int>> terms) {
    std::vector<Rat> v(N, Rat(0));
    for (auto [idx, sign] : terms)
      for (int i = 0; i < N; ++i) v[i] += sign * f[idx][i];
    return v;
  };
  std::vector<std::vector<Rat>> g(7);
  g[1] = f[1];
  g[2] = f[5];
  g[3] = f[6];
  g[4] = comb({{3, 1}, {4, -1}, {5, -1}});
  g[5] = comb({{2, 1}, {4, -1}});
  g[6] = f[4];
  RatMat G6 = RatMat::from_columns({g[1], g[2], g[3], g[4], g[5], g[6]});
  if (!(G6.transpose() * Q * G6 == antidiag_ones(6)))
    throw std::logic_error("six-dimensional Gram normalization failed");

  // S-perp and the three (l-3)-dimensional pieces.
  RatMat Sperp_mat = RatMat::from_columns((G6.transpose() * Q).kernel_basis());
  Subspace Sperp = make_subspace(Sperp_mat);
  RatMat W = Sperp.basis;
  RatMat gramW = W.transpose() * Q * W;
  auto in_W_coords = [&](const Subspace& s) {
    std::vector<std::vector<Rat>> cols;
    for (std::size_t j = 0; j < s.basis.cols(); ++j) {
      auto sol = W.solve(s.basis.column(j));
      if (!sol) throw std::logic_error("subspace not inside S-perp");
      cols.push_back(*sol);
    }
    return make_subspace(RatMat::from_columns(cols));
  };
  Subspace U1 = intersect(s1, Sperp), U2 = intersect(s2, Sperp), U3 = intersect(s3, Sperp);
  if (U1.dim() != l - 3 || U2.dim() != l - 3 || U3.dim() != l - 3)
    throw std::invalid_argument("condition (2) failed: wrong intersection with S-perp");
  Lemma1Result lem = lemma1_basis(gramW, in_W_coords(U1), in_W_coords(U2), in_W_coords(U3));
  RatMat qcols = W * lem.basis;

  std::vector<std::vector<Rat>> full = {g[1], g[2], g[3]};
  for (std::size_t j = 0; j < qcols.cols(); ++j) full.push_back(qcols.column(j));
  full.push_back(g[4]);
  full.push_back(g[5]);
  full.push_back(g[6]);
  RatMat E = RatMat::from_columns(full);
  if (!(E.transpose() * Q * E == antidiag_ones(N)))
    throw std::logic_error("full basis does not have the expected Gram matrix");
  RatMat B = E.inverse();
  if (B.determinant() != 1)
    throw std::invalid_argument(
        "the triple lies in the wrong orbit component (det B = -1)");
  return B;
}

// --- cross ratios ---

Rat cross_ratio_of_lines(const std::array<std::vector<Rat>, 4>& lines) {
  std::vector<std::vector<Rat>> cols(lines.begin(), lines.end());
  RatMat all = RatMat::from_columns(cols);
  RatMat carrier = all.column_space_basis();
  if (carrier.cols() != 2)
    throw std::invalid_argument("the four lines do not span a plane");
  std::vector<std::vector<Rat>> x(4);
  for (int i = 0; i < 4; ++i) {
    auto sol = carrier.solve(lines[i]);
    if (!sol) throw std::logic_error("line outside carrier");
    x[i] = *sol;
    if (x[i][0] == 0 && x[i][1] == 0)
      throw std::invalid_argument("a line is the zero vector");
  }
  auto d = [&](int i, int j) -> Rat { return x[i][0] * x[j][1] - x[i][1] * x[j][0]; };
  Rat d03 = d(0, 3), d12 = d(1, 2);
  if (d03 == 0 || d12 == 0)
    throw std::invalid_argument("coincident lines have no cross ratio");
  return d(0, 2) * d(1, 3) / (d03 * d12);
}

namespace {

struct SOConfig {
  std::array<Subspace, 3> S;
  std::array<Subspace, 3> obj;  // T_i lines (P1l) or U'_i planes (Pll)
  bool planes;                  // true for the (l-1,l) kind
};

std::vector<Rat> unit(int N, int i) {  // 1-based
  std::vector<Rat> v(N, Rat(0));
  v[i - 1] = 1;
  return v;
}

SOConfig build_so_config(CrossRatioKind kind, int l, const std::vector<Rat>& taus) {
  if (taus.size() != 3) throw std::invalid_argument("need three line parameters");
  int N = 2 * l;
  auto lincomb = [&](int i, int j, const Rat& c) {
    std::vector<Rat> v = unit(N, i);
    std::vector<Rat> w = unit(N, j);
    for (int p = 0; p < N; ++p) v[p] += c * w[p];
    return v;
  };
  // anchor vectors closing the isotropic 3-spaces
  int x1 = 2 * l - 2, x2 = 2 * l, x3 = 2 * l - 1;
  std::vector<std::vector<Rat>> mid;
  for (int i = 4; i <= l; ++i) mid.push_back(unit(N, i));
  auto with_mid = [&](std::vector<std::vector<Rat>> cols) {
    for (auto& v : mid) cols.push_back(v);
    return make_subspace(RatMat::from_columns(cols));
  };
  SOConfig cfg;
  cfg.S[0] = with_mid({unit(N, 1), unit(N, 2), unit(N, x1)});
  cfg.S[1] = with_mid({unit(N, 2), unit(N, 3), unit(N, x2)});
  cfg.S[2] = with_mid({unit(N, 1), unit(N, 3), unit(N, x3)});
  std::vector<Rat> t1 = lincomb(1, 2, taus[0]);
  std::vector<Rat> t2 = lincomb(2, 3, taus[1]);
  std::vector<Rat> t3 = lincomb(1, 3, taus[2]);
  cfg.planes = kind == CrossRatioKind::SO2l_Pll;
  if (cfg.planes) {
    cfg.obj[0] = with_mid({t1, unit(N, x1)});
    cfg.obj[1] = with_mid({t2, unit(N, x2)});
    cfg.obj[2] = with_mid({t3, unit(N, x3)});
  } else {
    cfg.obj[0] = make_subspace(RatMat::from_columns({t1}));
    cfg.obj[1] = make_subspace(RatMat::from_columns({t2}));
    cfg.obj[2] = make_subspace(RatMat::from_columns({t3}));
  }
  return cfg;
}

Rat evaluate_so_config(const ClassicalModel& m, const SOConfig& cfg) {
  int N = m.N;
  Subspace K = intersect(intersect(cfg.S[0], cfg.S[1]), cfg.S[2]);
  RatMat P;  // quotient map onto a 6-dimensional space
  if (K.dim() == 0) {
    P = RatMat::identity(N);
  } else {
    RatMat V = RatMat::from_columns((K.basis.transpose() * m.gram).kernel_basis());
    RatMat funcs = RatMat::from_columns(K.basis.transpose().kernel_basis());
    // greedily select 6 functionals independent on V
    std::vector<std::vector<Rat>> rows;
    std::vector<std::vector<Rat>> selected;
    for (std::size_t j = 0; j < funcs.cols() && selected.size() < 6; ++j) {
      auto cand = funcs.column(j);
      std::vector<Rat> on_v(V.cols());
      RatMat Vt = V.transpose();
      on_v = Vt.apply(cand);
      rows.push_back(on_v);
      RatMat test = RatMat::from_columns(rows);
      if (test.rank() == rows.size())
        selected.push_back(cand);
      else
        rows.pop_back();
    }
    if (selected.size() != 6)
      throw std::invalid_argument("configuration degenerate: quotient is not 6-dimensional");
    P = RatMat::from_columns(selected).transpose();
  }
  auto proj = [&](const Subspace& s) { return make_subspace(P * s.basis); };
  std::array<Subspace, 3> Sq = {proj(cfg.S[0]), proj(cfg.S[1]), proj(cfg.S[2])};
  Subspace L1 = intersect(Sq[0], Sq[2]);  // <e1> in the model configuration
  Subspace L2 = intersect(Sq[0], Sq[1]);  // <e2>
  Subspace L3 = intersect(Sq[1], Sq[2]);
  if (L1.dim() != 1 || L2.dim() != 1 || L3.dim() != 1)
    throw std::invalid_argument("configuration degenerate: bad pairwise intersections");
  Subspace carrier = subspace_sum(L1, L2);
  std::array<Subspace, 3> T;
  if (cfg.planes) {
    Subspace small = subspace_sum(subspace_sum(L1, L2), L3);
    if (small.dim() != 3)
      throw std::invalid_argument("configuration degenerate: intersections not independent");
    for (int i = 0; i < 3; ++i) {
      T[i] = intersect(proj(cfg.obj[i]), small);
      if (T[i].dim() != 1)
        throw std::invalid_argument("configuration degenerate: U_i does not cut a line");
    }
  } else {
    for (int i = 0; i < 3; ++i) {
      T[i] = proj(cfg.obj[i]);
      if (T[i].dim() != 1)
        throw std::invalid_argument("configuration degenerate: T_i collapsed");
    }
  }
  Subspace T4 = intersect(subspace_sum(T[1], T[2]), carrier);
  if (T4.dim() != 1)
    throw std::invalid_argument("configuration degenerate: T2 + T3 meets the carrier badly");
  return cross_ratio_of_lines(
      {L1.basis.column(0), L2.basis.column(0), T[0].basis.column(0), T4.basis.column(0)});
}

Rat evaluate_quadruple(const std::vector<Rat>& ts, const RatMat& g) {
  int N = 4;
  std::array<std::vector<Rat>, 4> pts;
  for (int i = 0; i < 4; ++i) {
    std::vector<Rat> p(N, Rat(0));
    p[0] = 1;
    p[1] = ts[i];
    pts[i] = g.apply(p);
  }
  return cross_ratio_of_lines(pts);
}

}  // namespace

CrossRatioReport cross_ratio_certificate(CrossRatioKind kind, int l,
                                         const std::vector<Rat>& params1,
                                         const std::vector<Rat>& params2, int trials,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CrossRatioReport rep;
  rep.trials = trials;
  if (kind == CrossRatioKind::Quadruple) {
    if (params1.size() != 4 || params2.size() != 4)
      throw std::invalid_argument("a quadruple needs four curve parameters");
    ClassicalModel m = build_classical_model('C', 2);
    rep.value1 = evaluate_quadruple(params1, RatMat::identity(4));
    rep.value2 = evaluate_quadruple(params2, RatMat::identity(4));
    rep.invariant = true;
    for (int k = 0; k < trials; ++k) {
      RatMat g = random_group_element(m, rng());
      if (evaluate_quadruple(params1, g) != rep.value1) rep.invariant = false;
    }
  } else {
    if (kind == CrossRatioKind::SO6) {
      kind = CrossRatioKind::SO2l_P1l;
      l = 3;
    }
    if (l < 3) throw std::invalid_argument("need l >= 3");
    ClassicalModel m = build_classical_model('D', l);
    SOConfig c1 = build_so_config(kind, l, params1);
    SOConfig c2 = build_so_config(kind, l, params2);
    rep.value1 = evaluate_so_config(m, c1);
    rep.value2 = evaluate_so_config(m, c2);
    rep.invariant = true;
    for (int k = 0; k < trials; ++k) {
      RatMat g = random_group_element(m, rng());
      SOConfig moved = c1;
      for (int i = 0; i < 3; ++i) {
        moved.S[i] = apply_matrix(g, c1.S[i]);
        moved.obj[i] = apply_matrix(g, c1.obj[i]);
      }
      if (evaluate_so_config(m, moved) != rep.value1) rep.invariant = false;
    }
  }
  rep.distinct = rep.value1 != rep.value2;
  return rep;
}

}  // namespace flagrank
