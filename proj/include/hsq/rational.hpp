#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hsq {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Closest rational with denominator at most max_denominator (continued fractions).
Rational rational_approximation(double value, long max_denominator);

int sign(const Rational& value);

/// num / den in lowest terms; den must be nonzero.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Exact complex number with rational real and imaginary parts.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}

  ComplexRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator*(const Rational& s, const ComplexRational& a) {
    return {s * a.re, s * a.im};
  }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b);
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  ComplexRational& operator+=(const ComplexRational& o) { re += o.re; im += o.im; return *this; }
  ComplexRational& operator-=(const ComplexRational& o) { re -= o.re; im -= o.im; return *this; }
};

inline const ComplexRational kImaginaryUnit{0, 1};

using ComplexVector = std::vector<ComplexRational>;

std::string to_string(const ComplexRational& value);

}  // namespace hsq
