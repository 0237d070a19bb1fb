#pragma once

#include <cstddef>
#include <vector>

#include "torusq/cyclotomic.hpp"

namespace torusq {

/// Dense row-major matrix over cyclotomic fields.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Cyclotomic& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Matrix conj() const;
  Cyclotomic trace() const;
  bool is_zero() const;

  /// Fraction-free (Bareiss) determinant.
  Cyclotomic determinant() const;
  std::size_t rank() const;
  /// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  /// Basis of the column space, as the nonzero rows of rref(transpose()).
  std::vector<std::vector<Cyclotomic>> column_space_basis() const;
  /// Throws InvalidInput if singular.
  Matrix inverse() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Cyclotomic& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Matrix a, const Cyclotomic& s) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Block-diagonal direct sum.
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyclotomic> data_;
};

}  // namespace torusq
