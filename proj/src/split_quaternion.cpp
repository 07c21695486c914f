#include "hsq/split_quaternion.hpp"

#include <stdexcept>
#include <tuple>

namespace hsq {

SplitQuaternion SplitQuaternion::from_real(const RationalVector& coords, std::size_t offset) {
  return {coords.at(offset), coords.at(offset + 1), coords.at(offset + 2), coords.at(offset + 3)};
}

SplitQuaternion operator*(const SplitQuaternion& p, const SplitQuaternion& q) {
  const auto& [x, y, u, v] = std::tie(p.x_, p.y_, p.u_, p.v_);
  const auto& [a, b, c, d] = std::tie(q.x_, q.y_, q.u_, q.v_);
  return {x * a - y * b + u * c + v * d,
          x * b + y * a - u * d + v * c,
          x * c + u * a - y * d + v * b,
          x * d + v * a + y * c - u * b};
}

Rational inner(const SplitQuaternion& p, const SplitQuaternion& q) { return (p.conj() * q).real_part(); }

SquareClass classify_square(const SplitQuaternion& p) {
  const SplitQuaternion sq = p * p;
  if (sq == SplitQuaternion(-1)) return SquareClass::MinusOne;
  if (sq == SplitQuaternion(1)) return SquareClass::PlusOne;
  return SquareClass::Neither;
}

SquareClass classify_square_by_criterion(const SplitQuaternion& p) {
  if (p == SplitQuaternion(1) || p == SplitQuaternion(-1)) return SquareClass::PlusOne;
  if (!p.is_imaginary()) return SquareClass::Neither;
  const Rational q = p.y() * p.y() - p.u() * p.u() - p.v() * p.v();
  if (q == 1) return SquareClass::MinusOne;
  if (q == -1) return SquareClass::PlusOne;
  return SquareClass::Neither;
}

Rational inner(const BVector& xi, const BVector& eta) {
  if (xi.size() != eta.size()) throw std::invalid_argument("B^n inner product: length mismatch");
  Rational s = 0;
  for (std::size_t k = 0; k < xi.size(); ++k) s += inner(xi[k], eta[k]);
  return s;
}

BVector right_multiply(const BVector& xi, const SplitQuaternion& p) {
  BVector out;
  out.reserve(xi.size());
  for (const auto& e : xi) out.push_back(e * p);
  return out;
}

RationalVector to_real(const BVector& xi) {
  RationalVector out;
  out.reserve(4 * xi.size());
  for (const auto& e : xi) {
    out.push_back(e.x());
    out.push_back(e.y());
    out.push_back(e.u());
    out.push_back(e.v());
  }
  return out;
}

BVector from_real(const RationalVector& coords) {
  if (coords.size() % 4 != 0) throw std::invalid_argument("coordinate length must be a multiple of 4");
  BVector out;
  for (std::size_t k = 0; k < coords.size(); k += 4) out.push_back(SplitQuaternion::from_real(coords, k));
  return out;
}

RationalMatrix right_multiplication_matrix(const SplitQuaternion& q, std::size_t n) {
  RationalMatrix m(4 * n, 4 * n);
  for (std::size_t c = 0; c < 4 * n; ++c) {
    RationalVector basis(4 * n);
    basis[c] = 1;
    const RationalVector image = to_real(right_multiply(from_real(basis), q));
    for (std::size_t r = 0; r < 4 * n; ++r) m(r, c) = image[r];
  }
  return m;
}

RationalMatrix gram_matrix(std::size_t n) {
  RationalMatrix g(4 * n, 4 * n);
  for (std::size_t a = 0; a < 4 * n; ++a)
    for (std::size_t b = 0; b < 4 * n; ++b) {
      RationalVector ea(4 * n), eb(4 * n);
      ea[a] = 1;
      eb[b] = 1;
      g(a, b) = inner(from_real(ea), from_real(eb));
    }
  return g;
}

BMatrix BMatrix::identity(std::size_t n) {
  BMatrix m(n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = SplitQuaternion::one();
  return m;
}

BMatrix BMatrix::diagonal(const std::vector<SplitQuaternion>& entries) {
  BMatrix m(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) m(k, k) = entries[k];
  return m;
}

BMatrix BMatrix::conj_transpose() const {
  BMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c).conj();
  return t;
}

bool BMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

RationalMatrix BMatrix::to_real() const {
  RationalMatrix m(4 * n_, 4 * n_);
  for (std::size_t c = 0; c < 4 * n_; ++c) {
    RationalVector basis(4 * n_);
    basis[c] = 1;
    const RationalVector image = hsq::to_real((*this) * from_real(basis));
    for (std::size_t r = 0; r < 4 * n_; ++r) m(r, c) = image[r];
  }
  return m;
}

BMatrix operator*(const BMatrix& a, const BMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("BMatrix product: size mismatch");
  BMatrix p(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j)
      for (std::size_t k = 0; k < a.n_; ++k) p(i, j) += a(i, k) * b(k, j);
  return p;
}

BMatrix operator+(const BMatrix& a, const BMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("BMatrix sum: size mismatch");
  BMatrix s(a.n_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = a.data_[i] + b.data_[i];
  return s;
}

BVector operator*(const BMatrix& a, const BVector& xi) {
  if (a.n_ != xi.size()) throw std::invalid_argument("BMatrix action: size mismatch");
  BVector out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) out[i] += a(i, k) * xi[k];
  return out;
}

bool group_membership(const BMatrix& a, MembershipMode mode) {
  switch (mode) {
    case MembershipMode::Group:
      return a.conj_transpose() * a == BMatrix::identity(a.size());
    case MembershipMode::Algebra:
      return (a + a.conj_transpose()).is_zero();
  }
  return false;
}

BVector module_action(const BMatrix& a, const SplitQuaternion& p, const BVector& xi) {
  if (p.norm2() != 1) throw std::invalid_argument("module_action: |p|^2 must equal 1");
  if (!group_membership(a, MembershipMode::Group))
    throw std::invalid_argument("module_action: A is not in Sp(n,B)");
  return right_multiply(a * xi, p.conj());
}

ComplexPair to_complex_pair(const BVector& xi) {
  ComplexPair out;
  for (const auto& e : xi) {
    out.z.emplace_back(e.x(), e.y());
    out.w.emplace_back(e.u(), e.v());
  }
  return out;
}

BVector from_complex_pair(const ComplexPair& zw) {
  if (zw.z.size() != zw.w.size()) throw std::invalid_argument("complex pair: length mismatch");
  BVector out;
  for (std::size_t k = 0; k < zw.z.size(); ++k) {
    // z + w s with w = u + iv gives u s + v (is) = u s + v t.
    out.emplace_back(zw.z[k].re, zw.z[k].im, zw.w[k].re, zw.w[k].im);
  }
  return out;
}

BMatrix abelian_element(const std::vector<CirclePoint>& params, AbelianMode mode) {
  std::vector<SplitQuaternion> diag;
  for (const auto& [c, s] : params) {
    if (mode == AbelianMode::Torus) {
      if (c * c + s * s != 1) throw std::invalid_argument("torus parameter off the unit circle");
      diag.emplace_back(c, s, 0, 0);
    } else {
      if (c * c - s * s != 1) throw std::invalid_argument("split parameter off the unit hyperbola");
      diag.emplace_back(c, 0, s, 0);
    }
  }
  return BMatrix::diagonal(diag);
}

CirclePoint circle_point(const Rational& t) {
  const Rational d = 1 + t * t;
  return {(1 - t * t) / d, 2 * t / d};
}

CirclePoint hyperbola_point(const Rational& t) {
  const Rational d = 1 - t * t;
  if (sgn(d) == 0) throw std::invalid_argument("hyperbola parameter t = +-1 has no point");
  return {(1 + t * t) / d, 2 * t / d};
}

}  // namespace hsq
