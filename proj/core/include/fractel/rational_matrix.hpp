#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "fractel/rational.hpp"

namespace fractel {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(const RationalVector& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  Rational determinant() const;
  /// Throws Error(SingularMatrix) when the determinant is zero.
  RationalMatrix inverse() const;
  /// Basis of {v : A v = 0}, one vector per free column (reduced row echelon form).
  std::vector<RationalVector> kernel() const;

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalVector operator*(const RationalVector& v) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix operator*(const Rational& c) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  /// Entries converted to double, row by row.
  std::vector<std::vector<double>> to_double() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// One row per line, entries as `n/d` separated by single spaces.
std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

}  // namespace fractel
