#include "hsq/quadratic_surd.hpp"

#include <cmath>
#include <stdexcept>

namespace hsq {

bool rational_sqrt(const Rational& r, Rational& out) {
  if (sgn(r) < 0) return false;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return false;
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
  out = Rational(num, den);
  out.canonicalize();
  return true;
}

QuadraticSurd::QuadraticSurd(Rational rational, Rational coeff, Rational radicand)
    : rational_(std::move(rational)), coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
  if (sgn(radicand_) < 0) throw std::invalid_argument("negative radicand");
  if (sgn(radicand_) == 0) coeff_ = 0;
  if (sgn(coeff_) == 0) radicand_ = 0;
}

bool QuadraticSurd::is_rational() const {
  Rational root;
  return sgn(coeff_) == 0 || rational_sqrt(radicand_, root);
}

Rational QuadraticSurd::to_rational() const {
  if (sgn(coeff_) == 0) return rational_;
  Rational root;
  if (!rational_sqrt(radicand_, root)) throw std::domain_error("surd is irrational");
  return rational_ + coeff_ * root;
}

int QuadraticSurd::sign() const {
  const int sp = sgn(rational_), sq = sgn(coeff_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare rational^2 with coeff^2 * radicand.
  const Rational lhs = rational_ * rational_, rhs = coeff_ * coeff_ * radicand_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sp : sq;
}

double QuadraticSurd::to_double() const {
  return rational_.get_d() + coeff_.get_d() * std::sqrt(radicand_.get_d());
}

namespace {

const Rational& common_radicand(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (sgn(a.coefficient()) == 0) return b.radicand();
  if (sgn(b.coefficient()) != 0 && a.radicand() != b.radicand())
    throw std::invalid_argument("surds with different radicands");
  return a.radicand();
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  const Rational d = common_radicand(a, b);
  return {a.rational_ + b.rational_, a.coeff_ + b.coeff_, d};
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) {
  const Rational d = common_radicand(a, b);
  return {a.rational_ - b.rational_, a.coeff_ - b.coeff_, d};
}

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  const Rational d = common_radicand(a, b);
  return {a.rational_ * b.rational_ + a.coeff_ * b.coeff_ * d, a.rational_ * b.coeff_ + a.coeff_ * b.rational_, d};
}

bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) { return (a - b).sign() == 0; }

}  // namespace hsq
