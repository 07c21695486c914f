#pragma once

#include "hsq/matrix.hpp"
#include "hsq/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace hsq {

using IntegerVector = std::vector<Integer>;

/// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntegerVector column(std::size_t c) const;
  IntegerMatrix select_columns(const std::vector<std::size_t>& cols) const;
  IntegerMatrix transpose() const;
  RationalMatrix to_rational() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// P * M * Q = diag(factors) with P, Q unimodular; nonzero factors are positive and
/// each divides the next. factors has min(rows, cols) entries, zeros last.
struct SmithDecomposition {
  IntegerVector factors;
  std::size_t rank = 0;
  IntegerMatrix left;   // P
  IntegerMatrix right;  // Q
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

Integer integer_determinant(const IntegerMatrix& m);

struct KernelBases {
  std::vector<RationalVector> rational;  // basis of ker over Q
  std::vector<IntegerVector> integral;   // Z-basis of ker ∩ Z^d
};

/// Kernel of U : R^d -> R^n, both as a rational subspace and as a lattice.
KernelBases integral_kernel_basis(const IntegerMatrix& u);

/// True iff the columns are linearly independent and extend to a Z-basis of Z^rows,
/// i.e. every invariant factor equals 1 and the rank equals the column count.
bool extends_to_lattice_basis(const IntegerMatrix& columns);

}  // namespace hsq
