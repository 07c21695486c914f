#pragma once

#include "hsq/lie_algebra.hpp"
#include "hsq/moment_map.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace hsq {

/// R+ in S^4 L+ for L+ = span(e_1..e_n), given by monomial coefficients in the e_i.
/// Keys are nondecreasing 0-based index quadruples. Real coefficients are exactly the
/// s_E-invariant elements for the standard real structure (s_E e_i = e_i, s_E e~_i = -e~_i).
struct QuarticData {
  std::size_t n = 1;
  std::map<std::array<std::size_t, 4>, Rational> monomials;

  /// Totally symmetric tensor component R_ijkl, so that sum R_ijkl e_i e_j e_k e_l = R+.
  Rational tensor(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;
  void validate() const;
};

/// R+ = c e^4 in complex dimension 1.
QuarticData e_fourth(const Rational& c = 1);

/// g = k + B^n with B^n the real points of E (x) H. Basis order: for each slot m the
/// vectors i e~_m (x) h, e~_m (x) h~; then a basis of k; then e_m (x) h, i e_m (x) h~.
/// For n = 1 and R+ = e^4 this is E1, E2, E3, E4, E5 of the four-dimensional example.
struct SymmetricHsResult {
  std::size_t n = 0;
  std::size_t k_dimension = 0;
  LieAlgebraData algebra;
  std::vector<std::string> labels;
  std::vector<JacobiViolation> jacobi;
  bool action_preserves_reality = false;  // k maps real points of E (x) H to real points
  bool accepted() const { return jacobi.empty() && action_preserves_reality; }

  RationalMatrix g;  // symmetric coefficients, zero on k
  AlternatingForm omega_i, omega_s, omega_t;
  RationalMatrix i_endo, s_endo, t_endo;  // on B^n, in the B^n part of the basis
  StructureRelations relations;
  std::vector<ClosednessEntry> closedness;

  /// span{ i(R_{s_E A, B} - R_{A, s_E B}) } compared with the span of the brackets.
  bool formula_span_equals_k = false;
  bool formula_span_equals_i_k = false;
};

SymmetricHsResult build_symmetric_hs(const QuarticData& q);

/// Nonzero scalars lambda with E'_i = lambda_i E_i turning `computed` into `target`, if any.
std::optional<RationalVector> diagonal_normalization(const LieAlgebraData& computed, const LieAlgebraData& target);

}  // namespace hsq
