#pragma once

#include "lieq/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace lieq {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-wise literal, e.g. {{1, 2}, {3, 4}}.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static RationalMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static RationalMatrix from_rows(std::size_t cols, const std::vector<Vector>& rows);
  static RationalMatrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Rational>& entries() const { return data_; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  std::vector<Vector> columns() const;
  void set_column(std::size_t c, const Vector& v);

  RationalMatrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;

  /// Columns [first, first + count).
  RationalMatrix column_block(std::size_t first, std::size_t count) const;
  /// Horizontal concatenation.
  RationalMatrix hstack(const RationalMatrix& right) const;
  RationalMatrix vstack(const RationalMatrix& below) const;

  /// Entries in row-major order as one vector (used to treat matrices as
  /// points of gl(n)).
  Vector flatten() const { return data_; }
  static RationalMatrix unflatten(std::size_t rows, std::size_t cols, const Vector& v);

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& s);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, RationalMatrix a);
Vector operator*(const RationalMatrix& a, const Vector& v);

/// Commutator ab - ba.
RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix power(const RationalMatrix& m, std::size_t k);

std::string to_string(const RationalMatrix& m);
std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

} // namespace lieq
