#include "hsq/lie_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hsq {

void LieAlgebraData::set_constant(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("structure constant index out of range");
  if (i == j && sgn(value) != 0) throw std::invalid_argument("[e_i, e_i] must vanish");
  c_[(i * dim_ + j) * dim_ + k] = value;
  c_[(j * dim_ + i) * dim_ + k] = -value;
}

void LieAlgebraData::set_bracket(std::size_t i, std::size_t j, const RationalVector& value) {
  if (value.size() != dim_) throw std::invalid_argument("bracket value has wrong dimension");
  for (std::size_t k = 0; k < dim_; ++k) set_constant(i, j, k, value[k]);
}

RationalVector LieAlgebraData::bracket(std::size_t i, std::size_t j) const {
  RationalVector out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = constant(i, j, k);
  return out;
}

RationalVector LieAlgebraData::bracket(const RationalVector& x, const RationalVector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("bracket arguments have wrong dimension");
  RationalVector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) out[k] += xy * constant(i, j, k);
    }
  }
  return out;
}

bool LieAlgebraData::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (constant(i, j, k) != -constant(j, i, k)) return false;
  return true;
}

bool LieAlgebraData::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

namespace {

/// Sorts indices in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b + 1 < idx.size() - a; ++b)
      if (idx[b] > idx[b + 1]) {
        std::swap(idx[b], idx[b + 1]);
        sign = -sign;
      }
  for (std::size_t a = 0; a + 1 < idx.size(); ++a)
    if (idx[a] == idx[a + 1]) return 0;
  return sign;
}

void check_compatible(const AlternatingForm& a, const AlternatingForm& b) {
  if (a.dimension() != b.dimension() || a.degree() != b.degree())
    throw std::invalid_argument("forms of different dimension or degree");
}

}  // namespace

AlternatingForm AlternatingForm::basis(std::size_t dim, std::size_t i) {
  AlternatingForm f(dim, 1);
  f.add_term({i}, 1);
  return f;
}

AlternatingForm AlternatingForm::from_matrix(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("form matrix must be square");
  AlternatingForm f(m.rows(), 2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) {
      if (m(i, j) != -m(j, i)) throw std::invalid_argument("form matrix must be antisymmetric");
      if (i < j) f.add_term({i, j}, m(i, j));
    }
  return f;
}

void AlternatingForm::add_term(std::vector<std::size_t> indices, const Rational& value) {
  if (indices.size() != degree_) throw std::invalid_argument("term has wrong degree");
  for (auto i : indices)
    if (i >= dim_) throw std::out_of_range("form index out of range");
  const int sign = sort_with_sign(indices);
  if (sign == 0 || sgn(value) == 0) return;
  Rational& slot = terms_[indices];
  slot += sign * value;
  if (sgn(slot) == 0) terms_.erase(indices);
}

Rational AlternatingForm::evaluate_basis(std::vector<std::size_t> indices) const {
  if (indices.size() != degree_) throw std::invalid_argument("wrong number of arguments");
  const int sign = sort_with_sign(indices);
  if (sign == 0) return 0;
  const auto it = terms_.find(indices);
  return it == terms_.end() ? Rational(0) : sign * it->second;
}

Rational AlternatingForm::evaluate(const std::vector<RationalVector>& vectors) const {
  if (vectors.size() != degree_) throw std::invalid_argument("wrong number of arguments");
  for (const auto& v : vectors)
    if (v.size() != dim_) throw std::invalid_argument("argument has wrong dimension");
  Rational total = 0;
  for (const auto& [idx, coeff] : terms_) {
    RationalMatrix minor(degree_, degree_);
    for (std::size_t a = 0; a < degree_; ++a)
      for (std::size_t b = 0; b < degree_; ++b) minor(a, b) = vectors[a][idx[b]];
    total += coeff * determinant(minor);
  }
  return total;
}

RationalMatrix AlternatingForm::to_matrix() const {
  if (degree_ != 2) throw std::invalid_argument("to_matrix needs a 2-form");
  RationalMatrix m(dim_, dim_);
  for (const auto& [idx, coeff] : terms_) {
    m(idx[0], idx[1]) = coeff;
    m(idx[1], idx[0]) = -coeff;
  }
  return m;
}

AlternatingForm operator+(const AlternatingForm& a, const AlternatingForm& b) {
  check_compatible(a, b);
  AlternatingForm out = a;
  for (const auto& [idx, coeff] : b.terms_) out.add_term(idx, coeff);
  return out;
}

AlternatingForm operator-(const AlternatingForm& a, const AlternatingForm& b) { return a + Rational(-1) * b; }

AlternatingForm operator*(const Rational& s, const AlternatingForm& a) {
  AlternatingForm out(a.dim_, a.degree_);
  for (const auto& [idx, coeff] : a.terms_) out.add_term(idx, s * coeff);
  return out;
}

AlternatingForm wedge(const AlternatingForm& a, const AlternatingForm& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("forms on different spaces");
  AlternatingForm out(a.dimension(), a.degree() + b.degree());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      std::vector<std::size_t> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(idx, ca * cb);
    }
  return out;
}

std::string to_string(const AlternatingForm& f, const std::string& label) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, coeff] : f.terms()) {
    const Rational mag = abs(coeff);
    if (first) {
      if (sgn(coeff) < 0) os << "-";
    } else {
      os << (sgn(coeff) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << to_string(Rational(mag)) << " ";
    for (std::size_t a = 0; a < idx.size(); ++a) os << (a ? "^" : "") << label << idx[a] + 1;
  }
  return os.str();
}

std::vector<JacobiViolation> jacobi_check(const LieAlgebraData& l) {
  std::vector<JacobiViolation> out;
  const std::size_t m = l.dimension();
  auto e = [m](std::size_t i) {
    RationalVector v(m);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        RationalVector r = l.bracket(l.bracket(i, j), e(k));
        r = add(r, l.bracket(l.bracket(j, k), e(i)));
        r = add(r, l.bracket(l.bracket(k, i), e(j)));
        if (!is_zero(r)) out.push_back({i, j, k, r});
      }
  return out;
}

namespace {

std::vector<RationalVector> span_basis(const std::vector<RationalVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  const RowEchelon re = row_reduce(RationalMatrix::from_columns(vectors, dim).transpose());
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < re.pivots.size(); ++i) out.push_back(re.reduced.row(i));
  return out;
}

}  // namespace

std::optional<std::size_t> nilpotency_step(const LieAlgebraData& l) {
  const std::size_t m = l.dimension();
  std::vector<RationalVector> current;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector v(m);
    v[i] = 1;
    current.push_back(v);
  }
  for (std::size_t step = 1;; ++step) {
    std::vector<RationalVector> brackets;
    for (std::size_t i = 0; i < m; ++i) {
      RationalVector e(m);
      e[i] = 1;
      for (const auto& v : current) brackets.push_back(l.bracket(e, v));
    }
    std::vector<RationalVector> next = span_basis(brackets, m);
    if (next.empty()) return step;
    if (next.size() == current.size()) return std::nullopt;
    current = std::move(next);
  }
}

AlternatingForm ce_differential(const LieAlgebraData& l, const AlternatingForm& phi) {
  const std::size_t m = l.dimension();
  if (phi.dimension() != m) throw std::invalid_argument("form and algebra have different dimensions");
  const std::size_t p = phi.degree();
  AlternatingForm out(m, p + 1);
  if (p + 1 > m) return out;
  std::vector<std::size_t> idx(p + 1);
  for (std::size_t i = 0; i <= p; ++i) idx[i] = i;
  for (;;) {
    Rational value = 0;
    for (std::size_t a = 0; a <= p; ++a)
      for (std::size_t b = a + 1; b <= p; ++b) {
        std::vector<std::size_t> rest;
        for (std::size_t c = 0; c <= p; ++c)
          if (c != a && c != b) rest.push_back(idx[c]);
        const int sign = (a + b) % 2 == 0 ? 1 : -1;
        for (std::size_t k = 0; k < m; ++k) {
          const Rational& ck = l.constant(idx[a], idx[b], k);
          if (sgn(ck) == 0) continue;
          std::vector<std::size_t> args{k};
          args.insert(args.end(), rest.begin(), rest.end());
          value += sign * ck * phi.evaluate_basis(args);
        }
      }
    out.add_term(idx, value);
    std::size_t i = p + 1;
    while (i > 0 && idx[i - 1] == m - (p + 1) + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j <= p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<ClosednessEntry> closedness_report(const LieAlgebraData& l, const std::vector<NamedForm>& forms) {
  std::vector<ClosednessEntry> out;
  for (const auto& f : forms) out.push_back({f.name, f.form, ce_differential(l, f.form)});
  return out;
}

EndoResult endo_from_pair(const RationalMatrix& g, const AlternatingForm& omega, const std::vector<RationalVector>& basis) {
  if (!g.is_square() || g.rows() != omega.dimension() || omega.degree() != 2)
    throw std::invalid_argument("endo_from_pair: incompatible metric and form");
  if (!(g == g.transpose())) throw std::invalid_argument("endo_from_pair: metric must be symmetric");
  const RationalMatrix b = RationalMatrix::from_columns(basis, g.rows());
  const RationalMatrix gw = b.transpose() * g * b;
  const RationalMatrix ow = b.transpose() * omega.to_matrix() * b;
  EndoResult out;
  const auto ginv = inverse(gw);
  if (!ginv) return out;
  out.status = EndoStatus::Ok;
  out.endo = *ginv * ow.transpose();
  out.square = out.endo * out.endo;
  const RationalMatrix one = RationalMatrix::identity(gw.rows());
  out.squares_to_minus_one = out.square == -one;
  out.squares_to_one = out.square == one;
  out.identity_holds = ow == out.endo.transpose() * gw;
  const RationalMatrix pulled = out.endo.transpose() * gw * out.endo;
  out.preserves_metric = pulled == gw;
  out.reverses_metric = pulled == -gw;
  return out;
}

RationalMatrix symmetric_product(std::size_t dim, std::size_t i, std::size_t j) {
  RationalMatrix m(dim, dim);
  m(i, j) += 1;
  m(j, i) += 1;
  return m;
}

LieAlgebraData five_dim_example() {
  LieAlgebraData l(5);
  l.set_constant(0, 1, 2, 1);  // [E1,E2] = E3
  l.set_constant(2, 0, 3, 1);  // [E3,E1] = E4
  l.set_constant(2, 1, 4, 1);  // [E3,E2] = E5
  return l;
}

FourDimExampleForms four_dim_example_forms() {
  const std::size_t m = 5;
  auto e = [m](std::size_t i) { return AlternatingForm::basis(m, i - 1); };
  FourDimExampleForms out;
  out.g = symmetric_product(m, 0, 4) - symmetric_product(m, 1, 3);
  const AlternatingForm e14 = wedge(e(1), e(4)), e25 = wedge(e(2), e(5));
  const AlternatingForm e15 = wedge(e(1), e(5)), e24 = wedge(e(2), e(4));
  out.printed = {{"omega_I", e14 - e25}, {"omega_S", e15 - e24}, {"omega_T", e14 + e25}};
  out.variants = {{"omega_I'", e14 + e25}, {"omega_S'", e15 + e24}, {"omega_T'", e14 - e25}};
  return out;
}

LieAlgebraData heisenberg_algebra() {
  LieAlgebraData l(3);
  l.set_constant(0, 1, 2, 1);
  return l;
}

}  // namespace hsq
