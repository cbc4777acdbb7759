#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdnf/scalar.hpp"

namespace pdnf {

/// Small dense row-major matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Scalar>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_diagonal() const;
  bool is_zero() const;
  std::vector<Scalar> diagonal_entries() const;

  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact determinant by Gaussian elimination over the field.
Scalar determinant(const Matrix& m);

/// Exact inverse; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Rank over the Gaussian rationals.
std::size_t rank(const Matrix& m);

/// [A, B] = AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

}  // namespace pdnf
