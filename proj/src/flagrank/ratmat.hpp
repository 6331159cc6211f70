#pragma once

#include <cstddef>
#include <vector>

#include "flagrank/rational.hpp"

namespace flagrank {

// Dense matrix of exact rationals.  Rank and determinant are computed
// fraction-free (denominators cleared per row, then Bareiss elimination
// over the integers), which keeps intermediate entries polynomially
// bounded on the tangent matrices this project produces.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  RatMat transpose() const;
  RatMat operator*(const RatMat& o) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat scaled(const Rat& c) const;
  bool is_zero() const;

  std::size_t rank() const;
  Rat determinant() const;  // throws std::invalid_argument on non-square input

  // Basis of the right kernel; size is cols() - rank().
  std::vector<std::vector<Rat>> kernel_basis() const;

  // One solution of A x = b, if any.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& rhs) const;

  RatMat inverse() const;  // throws std::domain_error if singular

  std::vector<Rat> apply(const std::vector<Rat>& v) const;

  // Columns spanning the same space, reduced to a column echelon basis.
  RatMat column_space_basis() const;

  static RatMat from_columns(const std::vector<std::vector<Rat>>& cols);
  std::vector<Rat> column(std::size_t j) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

// Reduced row echelon form in place; returns pivot column indices.
std::vector<std::size_t> rref(RatMat& m);

// Basis of the intersection of two column spans inside the same ambient space.
RatMat column_span_intersection(const RatMat& a, const RatMat& b);

}  // namespace flagrank
