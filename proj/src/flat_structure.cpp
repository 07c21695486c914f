#include "hsq/flat_structure.hpp"

#include "hsq/split_quaternion.hpp"

#include <stdexcept>

namespace hsq {

namespace {

Rational bilinear(const RationalMatrix& m, const RationalVector& x, const RationalVector& y) {
  return dot(x, m * y);
}

}  // namespace

RationalMatrix form_from_endomorphism(const RationalMatrix& endo, const RationalMatrix& gram) {
  return endo.transpose() * gram;
}

FlatStructure flat_structure(std::size_t n) {
  if (n == 0) throw std::invalid_argument("flat_structure: n must be positive");
  FlatStructure fs;
  fs.n = n;
  fs.i_endo = right_multiplication_matrix(-SplitQuaternion::i(), n);
  fs.s_endo = right_multiplication_matrix(SplitQuaternion::s(), n);
  fs.t_endo = right_multiplication_matrix(SplitQuaternion::t(), n);
  fs.gram = gram_matrix(n);
  fs.omega_i = form_from_endomorphism(fs.i_endo, fs.gram);
  fs.omega_s = form_from_endomorphism(fs.s_endo, fs.gram);
  fs.omega_t = form_from_endomorphism(fs.t_endo, fs.gram);
  return fs;
}

FlatPairing FlatStructure::eval(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != dimension() || y.size() != dimension())
    throw std::invalid_argument("flat_eval: vectors must have dimension 4n");
  return {bilinear(gram, x, y), bilinear(omega_i, x, y), bilinear(omega_s, x, y), bilinear(omega_t, x, y)};
}

Rational wedge_two_forms(const RationalMatrix& alpha, const RationalMatrix& beta,
                         const std::array<RationalVector, 4>& v) {
  // Sum over the (2,2)-shuffles of {0,1,2,3}.
  static constexpr int kShuffles[6][5] = {
      {0, 1, 2, 3, +1}, {0, 2, 1, 3, -1}, {0, 3, 1, 2, +1},
      {1, 2, 0, 3, +1}, {1, 3, 0, 2, -1}, {2, 3, 0, 1, +1}};
  Rational total = 0;
  for (const auto& sh : kShuffles) {
    total += sh[4] * bilinear(alpha, v[sh[0]], v[sh[1]]) * bilinear(beta, v[sh[2]], v[sh[3]]);
  }
  return total;
}

Rational FlatStructure::four_form(const std::array<RationalVector, 4>& vectors) const {
  for (const auto& x : vectors)
    if (x.size() != dimension()) throw std::invalid_argument("four_form: vectors must have dimension 4n");
  return wedge_two_forms(omega_i, omega_i, vectors) - wedge_two_forms(omega_s, omega_s, vectors) -
         wedge_two_forms(omega_t, omega_t, vectors);
}

ComplexRational FlatStructure::holomorphic_form(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != dimension() || y.size() != dimension())
    throw std::invalid_argument("holomorphic_form: vectors must have dimension 4n");
  ComplexRational total;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t o = 4 * k;
    const ComplexRational dw_x{x[o + 2], x[o + 3]}, dw_y{y[o + 2], y[o + 3]};
    const ComplexRational dzbar_x{x[o], -x[o + 1]}, dzbar_y{y[o], -y[o + 1]};
    total += dw_x * dzbar_y - dw_y * dzbar_x;
  }
  return total;
}

}  // namespace hsq
