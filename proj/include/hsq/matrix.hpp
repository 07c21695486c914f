#pragma once

#include "hsq/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace hsq {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;

  RationalMatrix transpose() const;
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator-(const RationalMatrix& a);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a);
  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& v);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

/// Basis of the null space {x : m x = 0}; one vector per free column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Some solution of m x = rhs, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

/// Inertia of a symmetric matrix by exact congruence diagonalization.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};
Inertia inertia(const RationalMatrix& symmetric);

Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector subtract(const RationalVector& a, const RationalVector& b);
RationalVector scale(const Rational& s, const RationalVector& v);
bool is_zero(const RationalVector& v);

}  // namespace hsq
