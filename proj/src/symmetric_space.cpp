#include "hsq/symmetric_space.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsq {

Rational QuarticData::tensor(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  std::array<std::size_t, 4> key{i, j, k, l};
  std::sort(key.begin(), key.end());
  const auto it = monomials.find(key);
  if (it == monomials.end()) return 0;
  long orderings = 24;
  for (std::size_t a = 0; a < 4;) {
    std::size_t b = a;
    while (b < 4 && key[b] == key[a]) ++b;
    for (std::size_t f = 2; f <= b - a; ++f) orderings /= static_cast<long>(f);
    a = b;
  }
  return it->second / orderings;
}

void QuarticData::validate() const {
  if (n == 0) throw std::invalid_argument("QuarticData: n must be positive");
  for (const auto& [key, c] : monomials) {
    if (!std::is_sorted(key.begin(), key.end())) throw std::invalid_argument("QuarticData: monomial keys must be sorted");
    if (key[3] >= n) throw std::invalid_argument("QuarticData: index out of range");
  }
}

QuarticData e_fourth(const Rational& c) {
  QuarticData q;
  q.n = 1;
  q.monomials[{0, 0, 0, 0}] = c;
  return q;
}

namespace {

using Complex = ComplexRational;
const Complex kI = kImaginaryUnit;

/// Element of E (x) H: coefficient of f_r (x) h_c with f = (e_1..e_n, e~_1..e~_n), h_0 = h, h_1 = h~.
struct Tensor {
  std::size_t n;
  std::vector<Complex> m;
  explicit Tensor(std::size_t n_) : n(n_), m(4 * n_) {}
  Complex& at(std::size_t r, std::size_t c) { return m[2 * r + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return m[2 * r + c]; }
};

/// Complex symmetric n x n matrix Q for sum Q_kl e_k e_l in S^2 L+.
using SymTensor = std::vector<Complex>;

// Real coordinates on B^n: index 4m + t with t = 0: i e~(x)h, 1: e~(x)h~, 2: e(x)h, 3: i e(x)h~.
Tensor to_tensor(const RationalVector& p, std::size_t n) {
  Tensor x(n);
  for (std::size_t m = 0; m < n; ++m) {
    x.at(n + m, 0) = Complex(0, p[4 * m]);
    x.at(n + m, 1) = Complex(p[4 * m + 1]);
    x.at(m, 0) = Complex(p[4 * m + 2]);
    x.at(m, 1) = Complex(0, p[4 * m + 3]);
  }
  return x;
}

/// Real coordinates of a real element; false when x is not fixed by the real structure.
bool from_tensor(const Tensor& x, RationalVector& p) {
  const std::size_t n = x.n;
  p.assign(4 * n, 0);
  for (std::size_t m = 0; m < n; ++m) {
    const Complex& a = x.at(n + m, 0);
    const Complex& b = x.at(n + m, 1);
    const Complex& c = x.at(m, 0);
    const Complex& d = x.at(m, 1);
    if (sgn(a.re) != 0 || sgn(b.im) != 0 || sgn(c.im) != 0 || sgn(d.re) != 0) return false;
    p[4 * m] = a.im;
    p[4 * m + 1] = b.re;
    p[4 * m + 2] = c.re;
    p[4 * m + 3] = d.im;
  }
  return true;
}

Complex omega_e(std::size_t r, std::size_t s, std::size_t n) {
  if (r < n && s == r + n) return Complex(1);
  if (s < n && r == s + n) return Complex(-1);
  return Complex(0);
}

Complex omega_h(std::size_t c, std::size_t d) {
  if (c == 0 && d == 1) return Complex(1);
  if (c == 1 && d == 0) return Complex(-1);
  return Complex(0);
}

Complex metric(const Tensor& x, const Tensor& y) {
  Complex total;
  const std::size_t n = x.n;
  for (std::size_t r = 0; r < 2 * n; ++r)
    for (std::size_t c = 0; c < 2; ++c) {
      if (x.at(r, c).is_zero()) continue;
      for (std::size_t s = 0; s < 2 * n; ++s)
        for (std::size_t d = 0; d < 2; ++d) {
          const Complex w = omega_e(r, s, n) * omega_h(c, d);
          if (!w.is_zero()) total += x.at(r, c) * y.at(s, d) * w;
        }
    }
  return total;
}

/// R_{A,B} = sum R_ijkl omega(e_i, A) omega(e_j, B) e_k e_l for A, B in E given by 2n coefficients.
SymTensor contract(const QuarticData& q, const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const std::size_t n = q.n;
  SymTensor out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex ab = a[n + i] * b[n + j];
      if (ab.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out[k * n + l] += q.tensor(i, j, k, l) * ab;
    }
  return out;
}

/// [x, y] = sum omega^H(h_c, h_d) x_{rc} y_{sd} R_{f_r, f_s}.
SymTensor bracket(const QuarticData& q, const Tensor& x, const Tensor& y) {
  const std::size_t n = q.n;
  SymTensor out(n * n);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t d = 0; d < 2; ++d) {
      const Complex w = omega_h(c, d);
      if (w.is_zero()) continue;
      std::vector<Complex> a(2 * n), b(2 * n);
      for (std::size_t r = 0; r < 2 * n; ++r) {
        a[r] = x.at(r, c);
        b[r] = w * y.at(r, d);
      }
      const SymTensor part = contract(q, a, b);
      for (std::size_t t = 0; t < n * n; ++t) out[t] += part[t];
    }
  return out;
}

/// (uv).w = u omega(v,w) + v omega(u,w), applied to the E factor.
Tensor act(const SymTensor& k, const Tensor& x) {
  const std::size_t n = x.n;
  Tensor out(n);
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Complex& kab = k[a * n + b];
        if (kab.is_zero()) continue;
        // e_a e_b . w = e_a w~_b + e_b w~_a, where w~_j = omega(e_j, w) is the e~_j coefficient.
        out.at(a, c) += kab * x.at(n + b, c);
        out.at(b, c) += kab * x.at(n + a, c);
      }
  return out;
}

Tensor apply_h(const std::array<std::array<Complex, 2>, 2>& mat, const Tensor& x) {
  Tensor out(x.n);
  for (std::size_t r = 0; r < 2 * x.n; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t d = 0; d < 2; ++d) out.at(r, c) += mat[c][d] * x.at(r, d);
  return out;
}

RationalVector vectorize(const SymTensor& k, std::size_t n) {
  RationalVector v;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      v.push_back(k[a * n + b].re);
      v.push_back(k[a * n + b].im);
    }
  return v;
}

SymTensor unvectorize(const RationalVector& v, std::size_t n) {
  SymTensor k(n * n);
  std::size_t idx = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      k[a * n + b] = Complex(v[idx], v[idx + 1]);
      k[b * n + a] = k[a * n + b];
      idx += 2;
    }
  return k;
}

std::size_t span_rank(const std::vector<RationalVector>& vs, std::size_t dim) {
  return vs.empty() ? 0 : rank(RationalMatrix::from_columns(vs, dim));
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b, std::size_t dim) {
  std::vector<RationalVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = span_rank(both, dim);
  return r == span_rank(a, dim) && r == span_rank(b, dim);
}

}  // namespace

SymmetricHsResult build_symmetric_hs(const QuarticData& q) {
  q.validate();
  const std::size_t n = q.n;
  const std::size_t bdim = 4 * n;
  const std::size_t vdim = n * (n + 1);
  SymmetricHsResult out;
  out.n = n;

  std::vector<Tensor> real_basis;
  for (std::size_t i = 0; i < bdim; ++i) {
    RationalVector p(bdim);
    p[i] = 1;
    real_basis.push_back(to_tensor(p, n));
  }

  // k: the first independent brackets of real basis vectors, in order.
  std::vector<std::vector<SymTensor>> brackets(bdim, std::vector<SymTensor>(bdim));
  std::vector<RationalVector> k_basis;
  for (std::size_t a = 0; a < bdim; ++a)
    for (std::size_t b = 0; b < bdim; ++b) {
      brackets[a][b] = bracket(q, real_basis[a], real_basis[b]);
      if (a >= b) continue;
      RationalVector v = vectorize(brackets[a][b], n);
      if (is_zero(v)) continue;
      std::vector<RationalVector> trial = k_basis;
      trial.push_back(v);
      if (span_rank(trial, vdim) == trial.size()) k_basis = std::move(trial);
    }
  const std::size_t kd = k_basis.size();
  out.k_dimension = kd;
  const std::size_t dim = kd + bdim;

  // Position in g of B^n coordinate 4m + t, and of k basis element j.
  auto gpos = [&](std::size_t i) {
    const std::size_t m = i / 4, t = i % 4;
    return t < 2 ? 2 * m + t : 2 * n + kd + 2 * m + (t - 2);
  };
  auto kpos = [&](std::size_t j) { return 2 * n + j; };
  out.labels.resize(dim);
  for (std::size_t i = 0; i < bdim; ++i) {
    static const char* names[] = {"ie~%h", "e~%h~", "e%h", "ie%h~"};
    std::string label = names[i % 4];
    const std::string slot = n == 1 ? "" : std::to_string(i / 4 + 1);
    std::string expanded;
    for (char ch : label) expanded += ch == '%' ? slot + "(x)" : std::string(1, ch);
    out.labels[gpos(i)] = expanded;
  }
  for (std::size_t j = 0; j < kd; ++j) out.labels[kpos(j)] = "k" + std::to_string(j + 1);

  out.algebra = LieAlgebraData(dim);
  const RationalMatrix kmat = kd == 0 ? RationalMatrix() : RationalMatrix::from_columns(k_basis, vdim);
  for (std::size_t a = 0; a < bdim; ++a)
    for (std::size_t b = a + 1; b < bdim; ++b) {
      const RationalVector v = vectorize(brackets[a][b], n);
      if (is_zero(v)) continue;
      const auto coords = solve(kmat, v);
      if (!coords) throw std::logic_error("bracket outside the span of k");
      for (std::size_t j = 0; j < kd; ++j)
        if (sgn((*coords)[j]) != 0) out.algebra.set_constant(gpos(a), gpos(b), kpos(j), (*coords)[j]);
    }
  out.action_preserves_reality = true;
  for (std::size_t j = 0; j < kd; ++j) {
    const SymTensor kj = unvectorize(k_basis[j], n);
    for (std::size_t b = 0; b < bdim; ++b) {
      RationalVector image;
      if (!from_tensor(act(kj, real_basis[b]), image)) {
        out.action_preserves_reality = false;
        continue;
      }
      for (std::size_t i = 0; i < bdim; ++i)
        if (sgn(image[i]) != 0) out.algebra.set_constant(kpos(j), gpos(b), gpos(i), image[i]);
    }
  }
  out.jacobi = jacobi_check(out.algebra);

  // Endomorphisms act on the H factor; the metric is omega^E (x) omega^H.
  const std::array<std::array<Complex, 2>, 2> ih{{{Complex(0), kI}, {kI, Complex(0)}}};
  const std::array<std::array<Complex, 2>, 2> sh{{{Complex(1), Complex(0)}, {Complex(0), Complex(-1)}}};
  const std::array<std::array<Complex, 2>, 2> th{{{Complex(0), -kI}, {kI, Complex(0)}}};
  auto real_matrix = [&](const std::array<std::array<Complex, 2>, 2>& mat) {
    RationalMatrix r(bdim, bdim);
    for (std::size_t b = 0; b < bdim; ++b) {
      RationalVector image;
      if (!from_tensor(apply_h(mat, real_basis[b]), image)) throw std::logic_error("H-endomorphism breaks reality");
      for (std::size_t i = 0; i < bdim; ++i) r(i, b) = image[i];
    }
    return r;
  };
  out.i_endo = real_matrix(ih);
  out.s_endo = real_matrix(sh);
  out.t_endo = real_matrix(th);

  RationalMatrix gb(bdim, bdim);
  for (std::size_t a = 0; a < bdim; ++a)
    for (std::size_t b = 0; b < bdim; ++b) {
      const Complex v = metric(real_basis[a], real_basis[b]);
      if (sgn(v.im) != 0) throw std::logic_error("metric is not real on real points");
      gb(a, b) = v.re;
    }
  out.relations = check_relations(out.i_endo, out.s_endo, out.t_endo, gb);

  out.g = RationalMatrix(dim, dim);
  for (std::size_t a = 0; a < bdim; ++a)
    for (std::size_t b = 0; b < bdim; ++b) out.g(gpos(a), gpos(b)) = gb(a, b);
  auto form = [&](const RationalMatrix& endo) {
    // omega(X, Y) = g(AX, Y)
    const RationalMatrix wb = endo.transpose() * gb;
    AlternatingForm f(dim, 2);
    for (std::size_t a = 0; a < bdim; ++a)
      for (std::size_t b = 0; b < bdim; ++b)
        if (gpos(a) < gpos(b)) f.add_term({gpos(a), gpos(b)}, wb(a, b));
    return f;
  };
  out.omega_i = form(out.i_endo);
  out.omega_s = form(out.s_endo);
  out.omega_t = form(out.t_endo);
  out.closedness = closedness_report(out.algebra, {{"omega_I", out.omega_i}, {"omega_S", out.omega_s}, {"omega_T", out.omega_t}});

  // span{ i(R_{sA,B} - R_{A,sB}) } over a real basis of E.
  std::vector<std::vector<Complex>> e_basis;
  for (std::size_t r = 0; r < 2 * n; ++r)
    for (const Complex& c : {Complex(1), kI}) {
      std::vector<Complex> v(2 * n);
      v[r] = c;
      e_basis.push_back(v);
    }
  auto s_e = [n](const std::vector<Complex>& v) {
    std::vector<Complex> out(2 * n);
    for (std::size_t r = 0; r < 2 * n; ++r) out[r] = r < n ? v[r].conj() : -v[r].conj();
    return out;
  };
  std::vector<RationalVector> formula;
  for (const auto& a : e_basis)
    for (const auto& b : e_basis) {
      SymTensor d = contract(q, s_e(a), b);
      const SymTensor d2 = contract(q, a, s_e(b));
      for (std::size_t t = 0; t < n * n; ++t) d[t] = kI * (d[t] - d2[t]);
      const RationalVector v = vectorize(d, n);
      if (!is_zero(v)) formula.push_back(v);
    }
  std::vector<RationalVector> i_k;
  for (const auto& v : k_basis) {
    SymTensor kk = unvectorize(v, n);
    for (auto& c : kk) c = kI * c;
    i_k.push_back(vectorize(kk, n));
  }
  out.formula_span_equals_k = same_span(formula, k_basis, vdim);
  out.formula_span_equals_i_k = same_span(formula, i_k, vdim);
  return out;
}

std::optional<RationalVector> diagonal_normalization(const LieAlgebraData& computed, const LieAlgebraData& target) {
  const std::size_t m = computed.dimension();
  if (target.dimension() != m) return std::nullopt;
  std::vector<std::optional<Rational>> lambda(m);
  for (;;) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          for (std::size_t k = 0; k < m; ++k) {
            const Rational& t = target.constant(i, j, k);
            const Rational& c = computed.constant(i, j, k);
            if (sgn(t) == 0 || lambda[k] || !lambda[i] || !lambda[j]) continue;
            if (sgn(c) == 0) return std::nullopt;
            lambda[k] = *lambda[i] * *lambda[j] * c / t;
            progress = true;
          }
    }
    const auto free = std::find_if(lambda.begin(), lambda.end(), [](const auto& x) { return !x.has_value(); });
    if (free == lambda.end()) break;
    *free = Rational(1);
  }
  RationalVector out;
  for (const auto& x : lambda) out.push_back(*x);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (out[i] * out[j] * computed.constant(i, j, k) != out[k] * target.constant(i, j, k)) return std::nullopt;
  return out;
}

}  // namespace hsq
