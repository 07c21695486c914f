#pragma once

#include "hsq/rational.hpp"

namespace hsq {

/// rational + coeff * sqrt(radicand) with a fixed nonnegative rational radicand.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational rational, Rational coeff, Rational radicand);
  static QuadraticSurd from_rational(Rational r) { return {std::move(r), 0, 0}; }

  const Rational& rational_part() const { return rational_; }
  const Rational& coefficient() const { return coeff_; }
  const Rational& radicand() const { return radicand_; }

  /// True when the value is rational (no radical part, or a perfect-square radicand).
  bool is_rational() const;
  /// Exact value when is_rational().
  Rational to_rational() const;
  int sign() const;
  double to_double() const;

  QuadraticSurd conjugate() const { return {rational_, -coeff_, radicand_}; }

  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b);

 private:
  Rational rational_;
  Rational coeff_;
  Rational radicand_;
};

/// Exact square root when r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& out);

}  // namespace hsq
