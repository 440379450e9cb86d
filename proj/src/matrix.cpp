#include "hnk/matrix.hpp"

#include <algorithm>

namespace hnk {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Scalar &s) { return s == 0; });
}

Vector Matrix::apply(const Vector &v) const {
  if (v.dim() != cols_)
    throw input_error("matrix/vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0)
      continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar &m = at(r, c);
      if (m != 0)
        out[r] += m * v[c];
    }
  }
  return out;
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    out[r] = at(r, c);
  return out;
}

Matrix &Matrix::operator+=(const Matrix &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw input_error("matrix dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i)
    a_[i] += o.a_[i];
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw input_error("matrix dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i)
    a_[i] -= o.a_[i];
  return *this;
}

Matrix &Matrix::operator*=(const Scalar &s) {
  for (auto &x : a_)
    x *= s;
  return *this;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols_ != b.rows_)
    throw input_error("matrix dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar &aik = a.at(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar &bkj = b.at(k, j);
        if (bkj != 0)
          out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_)
    return std::nullopt;
  const std::size_t n = rows_;
  Matrix work(*this);
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0)
      ++pivot;
    if (pivot == n)
      return std::nullopt;
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    const Scalar p = work.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(col, j) /= p;
      inv.at(col, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col)
        continue;
      const Scalar f = work.at(r, col);
      if (f == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j) {
        work.at(r, j) -= f * work.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

} // namespace hnk
