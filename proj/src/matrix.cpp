#include "hsq/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hsq {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  RationalMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RationalMatrix operator-(const RationalMatrix& a) {
  RationalMatrix r = a;
  for (auto& x : r.data_) x = -x;
  return r;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  RationalMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

RationalMatrix operator*(const Rational& s, RationalMatrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  RationalVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon row_reduce(RationalMatrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(lead_row, j);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  RationalMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

Inertia inertia(const RationalMatrix& symmetric) {
  if (!symmetric.is_square() || !(symmetric == symmetric.transpose()))
    throw std::invalid_argument("inertia requires a symmetric matrix");
  RationalMatrix a = symmetric;
  const std::size_t n = a.rows();
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t d = k;
    while (d < n && sgn(a(d, d)) == 0) ++d;
    if (d == n) {
      // Zero diagonal: a nonzero a(i,j) becomes a diagonal entry 2a(i,j) after
      // adding index j onto index i.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(a(i, j)) != 0) { pi = i; pj = j; break; }
      if (pi == n) {
        out.zero += n - k;
        return out;
      }
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      d = pi;
    }
    if (d != k) swap_index(d, k);
    const Rational pivot = a(k, k);
    (sgn(pivot) > 0 ? out.positive : out.negative)++;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      const Rational f = a(r, k) / pivot;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
    for (std::size_t r = k + 1; r < n; ++r) a(k, r) = 0;
  }
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  RationalVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RationalVector subtract(const RationalVector& a, const RationalVector& b) {
  RationalVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RationalVector scale(const Rational& s, const RationalVector& v) {
  RationalVector r = v;
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace hsq
