#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hnk/grading.hpp"
#include "hnk/scalar.hpp"

namespace hnk {

/// Dense exact-rational matrix, row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar &at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar &at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

  bool is_zero() const;

  Vector apply(const Vector &v) const;
  Vector column(std::size_t c) const;

  Matrix &operator+=(const Matrix &o);
  Matrix &operator-=(const Matrix &o);
  Matrix &operator*=(const Scalar &s);

  friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
  friend Matrix operator*(const Scalar &s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix &a, const Matrix &b);
  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Exact inverse by Gauss-Jordan; nullopt when singular.
  std::optional<Matrix> inverse() const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

} // namespace hnk
