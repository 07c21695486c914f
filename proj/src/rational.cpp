#include "hsq/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace hsq {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return Integer(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
  }
  Integer d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

Rational rational_approximation(double value, long max_denominator) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  // Continued-fraction convergents h/k.
  long double x = value;
  Integer h_prev = 1, h = static_cast<long>(std::floor(x));
  Integer k_prev = 0, k = 1;
  long double frac = x - std::floor(x);
  for (int iter = 0; iter < 64 && frac > 1e-18L; ++iter) {
    x = 1.0L / frac;
    const long a = static_cast<long>(std::floor(x));
    frac = x - std::floor(x);
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h; h = h_next;
    k_prev = k; k = k_next;
  }
  Rational r(h, k);
  r.canonicalize();
  return r;
}

int sign(const Rational& value) { return sgn(value); }

ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
  const Rational n = b.norm2();
  if (n == 0) throw std::domain_error("complex division by zero");
  const ComplexRational p = a * b.conj();
  return {p.re / n, p.im / n};
}

std::string to_string(const ComplexRational& value) {
  return to_string(value.re) + (sgn(value.im) < 0 ? " - " : " + ") + to_string(abs(value.im)) + "i";
}

}  // namespace hsq
