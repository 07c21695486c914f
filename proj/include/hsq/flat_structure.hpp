#pragma once

#include "hsq/matrix.hpp"
#include "hsq/rational.hpp"

#include <array>
#include <cstddef>

namespace hsq {

/// Values of the metric and the three Kähler-type forms on a pair of vectors.
struct FlatPairing {
  Rational g;
  Rational omega_i;
  Rational omega_s;
  Rational omega_t;
};

/// The flat hypersymplectic structure on B^n = R^{4n}.
///
/// I, S, T are right multiplication by -i, s, t. The forms satisfy
/// omega_a(X, Y) = g(aX, Y) and are stored as coefficient matrices, so
/// omega_a(X, Y) = X^T omega_a Y. All coefficients are constant.
struct FlatStructure {
  std::size_t n = 0;
  RationalMatrix i_endo;
  RationalMatrix s_endo;
  RationalMatrix t_endo;
  RationalMatrix gram;
  RationalMatrix omega_i;
  RationalMatrix omega_s;
  RationalMatrix omega_t;

  std::size_t dimension() const { return 4 * n; }

  /// Throws std::invalid_argument on dimension mismatch.
  FlatPairing eval(const RationalVector& x, const RationalVector& y) const;

  /// (omega_I ^ omega_I - omega_S ^ omega_S - omega_T ^ omega_T)(X1, X2, X3, X4).
  Rational four_form(const std::array<RationalVector, 4>& vectors) const;

  /// sum_k dw_k ^ d(conj z_k)(X, Y), read off the complex coordinates z = x + iy, w = u + iv.
  ComplexRational holomorphic_form(const RationalVector& x, const RationalVector& y) const;
};

/// Builds the structure for rank n >= 1; throws std::invalid_argument for n = 0.
FlatStructure flat_structure(std::size_t n);

/// omega_a = a^T G for omega_a(X, Y) = g(aX, Y).
RationalMatrix form_from_endomorphism(const RationalMatrix& endo, const RationalMatrix& gram);

/// (alpha ^ beta)(X1..X4) for 2-forms given by coefficient matrices.
Rational wedge_two_forms(const RationalMatrix& alpha, const RationalMatrix& beta,
                         const std::array<RationalVector, 4>& vectors);

}  // namespace hsq
