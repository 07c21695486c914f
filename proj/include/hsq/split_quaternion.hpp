#pragma once

#include "hsq/matrix.hpp"
#include "hsq/rational.hpp"

#include <cstddef>
#include <vector>

namespace hsq {

/// x + iy + su + tv with i^2 = -1, s^2 = t^2 = 1, is = t = -si.
///
/// The squared norm is x^2 + y^2 - u^2 - v^2; the coefficients of s and t are
/// named u and v so the letters s and t stay reserved for the basis elements.
class SplitQuaternion {
 public:
  SplitQuaternion() = default;
  SplitQuaternion(Rational x, Rational y = 0, Rational u = 0, Rational v = 0)
      : x_(std::move(x)), y_(std::move(y)), u_(std::move(u)), v_(std::move(v)) {}

  static SplitQuaternion one() { return {1, 0, 0, 0}; }
  static SplitQuaternion i() { return {0, 1, 0, 0}; }
  static SplitQuaternion s() { return {0, 0, 1, 0}; }
  static SplitQuaternion t() { return {0, 0, 0, 1}; }
  static SplitQuaternion from_real(const RationalVector& coords, std::size_t offset = 0);

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }

  SplitQuaternion conj() const { return {x_, -y_, -u_, -v_}; }
  Rational norm2() const { return x_ * x_ + y_ * y_ - u_ * u_ - v_ * v_; }
  const Rational& real_part() const { return x_; }
  bool is_imaginary() const { return sgn(x_) == 0; }
  bool is_zero() const { return sgn(x_) == 0 && sgn(y_) == 0 && sgn(u_) == 0 && sgn(v_) == 0; }

  friend SplitQuaternion operator+(const SplitQuaternion& p, const SplitQuaternion& q) {
    return {p.x_ + q.x_, p.y_ + q.y_, p.u_ + q.u_, p.v_ + q.v_};
  }
  friend SplitQuaternion operator-(const SplitQuaternion& p, const SplitQuaternion& q) {
    return {p.x_ - q.x_, p.y_ - q.y_, p.u_ - q.u_, p.v_ - q.v_};
  }
  friend SplitQuaternion operator-(const SplitQuaternion& p) { return {-p.x_, -p.y_, -p.u_, -p.v_}; }
  friend SplitQuaternion operator*(const SplitQuaternion& p, const SplitQuaternion& q);
  friend SplitQuaternion operator*(const Rational& a, const SplitQuaternion& p) {
    return {a * p.x_, a * p.y_, a * p.u_, a * p.v_};
  }
  friend bool operator==(const SplitQuaternion& p, const SplitQuaternion& q) {
    return p.x_ == q.x_ && p.y_ == q.y_ && p.u_ == q.u_ && p.v_ == q.v_;
  }
  SplitQuaternion& operator+=(const SplitQuaternion& q) { return *this = *this + q; }

 private:
  Rational x_, y_, u_, v_;
};

/// <p, q> = Re(conj(p) q).
Rational inner(const SplitQuaternion& p, const SplitQuaternion& q);

enum class SquareClass { MinusOne, PlusOne, Neither };

/// Decides p^2 = -1 / +1 by squaring.
SquareClass classify_square(const SplitQuaternion& p);

/// Same decision from the closed-form criterion on the coefficients:
/// p^2 = -1 iff x = 0 and y^2 - u^2 - v^2 = 1; p^2 = 1 iff (x = 0 and y^2 - u^2 - v^2 = -1) or p = +-1.
SquareClass classify_square_by_criterion(const SplitQuaternion& p);

/// A point of B^n.
using BVector = std::vector<SplitQuaternion>;

/// <xi, eta> = Re(conj(xi)^T eta).
Rational inner(const BVector& xi, const BVector& eta);

/// Right scalar multiplication xi * p.
BVector right_multiply(const BVector& xi, const SplitQuaternion& p);

/// Coordinates (x, y, u, v) per slot, slots in order.
RationalVector to_real(const BVector& xi);
BVector from_real(const RationalVector& coords);

/// The real 4n x 4n matrix of xi -> xi q.
RationalMatrix right_multiplication_matrix(const SplitQuaternion& q, std::size_t n);

/// Gram matrix of <.,.> on R^{4n}: diag(1, 1, -1, -1) per slot.
RationalMatrix gram_matrix(std::size_t n);

/// n x n matrix with entries in B acting on B^n from the left.
class BMatrix {
 public:
  BMatrix() = default;
  explicit BMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static BMatrix identity(std::size_t n);
  static BMatrix diagonal(const std::vector<SplitQuaternion>& entries);

  std::size_t size() const { return n_; }
  SplitQuaternion& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const SplitQuaternion& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  BMatrix conj_transpose() const;
  bool is_zero() const;
  RationalMatrix to_real() const;

  friend BMatrix operator*(const BMatrix& a, const BMatrix& b);
  friend BMatrix operator+(const BMatrix& a, const BMatrix& b);
  friend BVector operator*(const BMatrix& a, const BVector& xi);
  friend bool operator==(const BMatrix& a, const BMatrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

 private:
  std::size_t n_ = 0;
  std::vector<SplitQuaternion> data_;
};

enum class MembershipMode { Group, Algebra };

/// Group: conj(A)^T A = 1 (Sp(n,B)). Algebra: A + conj(A)^T = 0 (sp(n,B)).
bool group_membership(const BMatrix& a, MembershipMode mode);

/// (A, p) . xi = A xi conj(p). Throws std::invalid_argument unless |p|^2 = 1 and A is in Sp(n,B).
BVector module_action(const BMatrix& a, const SplitQuaternion& p, const BVector& xi);

/// xi = z + w s, slot by slot: z = x + iy, w = u + iv.
struct ComplexPair {
  ComplexVector z;
  ComplexVector w;
  friend bool operator==(const ComplexPair&, const ComplexPair&) = default;
};

ComplexPair to_complex_pair(const BVector& xi);
BVector from_complex_pair(const ComplexPair& zw);

/// Rational point (c, s) on c^2 + s^2 = 1 (Torus) or c^2 - s^2 = 1 (Split).
struct CirclePoint {
  Rational c;
  Rational s;
};

enum class AbelianMode { Torus, Split };

/// diag(c_k + i s_k) in Torus mode, diag(c_k + s s_k) in Split mode.
/// Throws std::invalid_argument for parameters off the (pseudo-)circle.
BMatrix abelian_element(const std::vector<CirclePoint>& params, AbelianMode mode);

/// (1 - t^2, 2t) / (1 + t^2).
CirclePoint circle_point(const Rational& t);
/// (1 + t^2, 2t) / (1 - t^2), |t| != 1.
CirclePoint hyperbola_point(const Rational& t);

}  // namespace hsq
