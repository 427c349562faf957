#include "fractel/rational_matrix.hpp"

#include <ostream>
#include <utility>

#include "fractel/error.hpp"

namespace fractel {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

// In-place reduction to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    }
    const Rational inv = Rational(1) / a(row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  require(rows > 0 && cols > 0, "matrix dimensions must be positive");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  require(rows_ > 0 && cols_ > 0, "matrix dimensions must be positive");
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(const RationalVector& d) {
  RationalMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Rational RationalMatrix::determinant() const {
  require(square(), "determinant of a non-square matrix");
  RationalMatrix a = *this;
  Rational det = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t p = col;
    while (p < rows_ && a(p, col).is_zero()) ++p;
    if (p == rows_) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(a(p, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < cols_; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

RationalMatrix RationalMatrix::inverse() const {
  require(square(), "inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) {
    throw Error(ErrorKind::SingularMatrix, "matrix is singular");
  }
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

std::vector<RationalVector> RationalMatrix::kernel() const {
  RationalMatrix a = *this;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  require(cols_ == o.rows_, "matrix product dimension mismatch");
  RationalMatrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) += a * o(k, c);
    }
  }
  return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  require(cols_ == v.size(), "matrix-vector dimension mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum dimension mismatch");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference dimension mismatch");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator*(const Rational& c) const {
  RationalMatrix out = *this;
  for (auto& v : out.data_) v *= c;
  return out;
}

std::vector<std::vector<double>> RationalMatrix::to_double() const {
  std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).to_double();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os;
}

}  // namespace fractel
