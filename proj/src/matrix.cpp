#include "pdnf/matrix.hpp"

#include <algorithm>

#include "pdnf/error.hpp"

namespace pdnf {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::dimension_mismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool Matrix::is_diagonal() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && !(*this)(r, c).is_zero()) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

std::vector<Scalar> Matrix::diagonal_entries() const {
  std::vector<Scalar> d;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
  return d;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::dimension_mismatch, "matrix product shape");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c).add_product(a(r, k), b(k, c));
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::dimension_mismatch, "matrix sum shape");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::dimension_mismatch, "matrix difference shape");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out = m;
  for (auto& e : out.data_) e *= s;
  return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::dimension_mismatch, "matrix-vector shape");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r].add_product((*this)(r, c), v[c]);
  return out;
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::dimension_mismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    Scalar inv = Scalar(1) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      Scalar factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::dimension_mismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    Scalar p = Scalar(1) / a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= p;
      inv(col, c) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      Scalar factor = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= factor * a(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(r, c));
    Scalar inv = Scalar(1) / a(r, col);
    for (std::size_t rr = r + 1; rr < a.rows(); ++rr) {
      if (a(rr, col).is_zero()) continue;
      Scalar factor = a(rr, col) * inv;
      for (std::size_t c = col; c < a.cols(); ++c) a(rr, c) -= factor * a(r, c);
    }
    ++r;
  }
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace pdnf
