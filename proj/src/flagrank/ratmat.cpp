#include "flagrank/ratmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagrank {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMat: dimension mismatch in product");
  RatMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += a * o.at(k, j);
      }
    }
  return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMat: shape mismatch");
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMat: shape mismatch");
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

RatMat RatMat::scaled(const Rat& c) const {
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
  return r;
}

bool RatMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return x == 0; });
}

namespace {

// Clear denominators row by row, giving an integer matrix with the same
// rank and with determinant scaled by the product of the row multipliers.
std::vector<std::vector<Int>> to_integer_rows(const RatMat& m, std::vector<Int>* multipliers) {
  std::vector<std::vector<Int>> z(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat v = m.at(i, j);
      v.canonicalize();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat v = m.at(i, j) * lcm;
      v.canonicalize();
      z[i][j] = v.get_num();
    }
    if (multipliers) multipliers->push_back(lcm);
  }
  return z;
}

}  // namespace

std::size_t RatMat::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  auto z = to_integer_rows(*this, nullptr);
  const std::size_t n = rows_, m = cols_;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && z[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(z[piv], z[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < m; ++j) {
        Int t = z[r][c] * z[i][j] - z[i][c] * z[r][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[r][c];
    ++r;
  }
  return r;
}

Rat RatMat::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant: matrix is not square");
  if (rows_ == 0) return 1;
  std::vector<Int> mult;
  auto z = to_integer_rows(*this, &mult);
  const std::size_t n = rows_;
  Int prev = 1;
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && z[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(z[piv], z[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Int t = z[c][c] * z[i][j] - z[i][c] * z[c][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[c][c];
  }
  Rat det(z[n - 1][n - 1]);
  if (sign < 0) det = -det;
  for (const Int& m : mult) det /= Rat(m);
  return det;
}

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rat>> RatMat::kernel_basis() const {
  RatMat m(*this);
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> RatMat::solve(const std::vector<Rat>& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("solve: rhs length mismatch");
  RatMat aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = rhs[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
  std::vector<Rat> x(cols_, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

RatMat RatMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse: matrix is not square");
  RatMat aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != rows_ || (!pivots.empty() && pivots.back() >= cols_))
    throw std::domain_error("inverse: singular matrix");
  RatMat inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  std::vector<Rat> r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

RatMat RatMat::from_columns(const std::vector<std::vector<Rat>>& cols) {
  if (cols.empty()) return RatMat(0, 0);
  RatMat m(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Rat> RatMat::column(std::size_t j) const {
  std::vector<Rat> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

RatMat RatMat::column_space_basis() const {
  RatMat t = transpose();
  auto pivots = rref(t);
  RatMat b(rows_, pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t i = 0; i < rows_; ++i) b.at(i, r) = t.at(r, i);
  return b;
}

RatMat column_span_intersection(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("intersection: ambient mismatch");
  // Kernel of [A | -B]; the A-part of each kernel vector gives a vector in both spans.
  RatMat stacked(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) stacked.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) stacked.at(i, a.cols() + j) = -b.at(i, j);
  }
  auto ker = stacked.kernel_basis();
  std::vector<std::vector<Rat>> vecs;
  for (const auto& k : ker) {
    std::vector<Rat> v(a.rows(), Rat(0));
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t i = 0; i < a.rows(); ++i) v[i] += a.at(i, j) * k[j];
    vecs.push_back(std::move(v));
  }
  RatMat span = RatMat::from_columns(vecs);
  if (span.cols() == 0) return RatMat(a.rows(), 0);
  return span.column_space_basis();
}

}  // namespace flagrank
