#include "hsq/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace hsq {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerVector IntegerMatrix::column(std::size_t c) const {
  IntegerVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntegerMatrix IntegerMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  IntegerMatrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix IntegerMatrix::to_rational() const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = Rational((*this)(r, c));
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("integer matrix product shape mismatch");
  IntegerMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
  return p;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const IntegerMatrix& m)
      : a_(m), p_(IntegerMatrix::identity(m.rows())), q_(IntegerMatrix::identity(m.cols())) {}

  SmithDecomposition run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!move_min_to(t)) break;
      for (;;) {
        clear_column(t);
        clear_row(t);
        if (column_clear(t) && row_clear(t)) {
          if (fix_divisibility(t)) continue;
          break;
        }
      }
      if (a_(t, t) < 0) negate_row(t);
    }
    SmithDecomposition out;
    for (std::size_t t = 0; t < steps; ++t) {
      out.factors.push_back(a_(t, t));
      if (a_(t, t) != 0) ++out.rank;
    }
    out.left = std::move(p_);
    out.right = std::move(q_);
    return out;
  }

 private:
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    for (std::size_t c = 0; c < p_.cols(); ++c) std::swap(p_(i, c), p_(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (std::size_t r = 0; r < q_.rows(); ++r) std::swap(q_(r, i), q_(r, j));
  }
  // row_i -= f * row_j
  void row_axpy(std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) -= f * a_(j, c);
    for (std::size_t c = 0; c < p_.cols(); ++c) p_(i, c) -= f * p_(j, c);
  }
  // col_i -= f * col_j
  void col_axpy(std::size_t i, std::size_t j, const Integer& f) {
    for (std::size_t r = 0; r < a_.rows(); ++r) a_(r, i) -= f * a_(r, j);
    for (std::size_t r = 0; r < q_.rows(); ++r) q_(r, i) -= f * q_(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    for (std::size_t c = 0; c < p_.cols(); ++c) p_(i, c) = -p_(i, c);
  }

  bool move_min_to(std::size_t t) {
    std::size_t br = a_.rows(), bc = a_.cols();
    for (std::size_t r = t; r < a_.rows(); ++r)
      for (std::size_t c = t; c < a_.cols(); ++c) {
        if (a_(r, c) == 0) continue;
        if (br == a_.rows() || abs(a_(r, c)) < abs(a_(br, bc))) { br = r; bc = c; }
      }
    if (br == a_.rows()) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  void clear_column(std::size_t t) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t r = t + 1; r < a_.rows(); ++r) {
        if (a_(r, t) == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), a_(r, t).get_mpz_t(), a_(t, t).get_mpz_t());
        row_axpy(r, t, f);
        if (a_(r, t) != 0) {
          swap_rows(t, r);
          changed = true;
        }
      }
    }
  }

  void clear_row(std::size_t t) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        if (a_(t, c) == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), a_(t, c).get_mpz_t(), a_(t, t).get_mpz_t());
        col_axpy(c, t, f);
        if (a_(t, c) != 0) {
          swap_cols(t, c);
          changed = true;
        }
      }
    }
  }

  bool column_clear(std::size_t t) const {
    for (std::size_t r = t + 1; r < a_.rows(); ++r)
      if (a_(r, t) != 0) return false;
    return true;
  }
  bool row_clear(std::size_t t) const {
    for (std::size_t c = t + 1; c < a_.cols(); ++c)
      if (a_(t, c) != 0) return false;
    return true;
  }

  // Adds a row whose entries are not all divisible by the pivot; returns true if it did.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t r = t + 1; r < a_.rows(); ++r)
      for (std::size_t c = t + 1; c < a_.cols(); ++c) {
        if (!mpz_divisible_p(a_(r, c).get_mpz_t(), a_(t, t).get_mpz_t())) {
          row_axpy(t, r, -1);
          return true;
        }
      }
    return false;
  }

  IntegerMatrix a_;
  IntegerMatrix p_;
  IntegerMatrix q_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) { return SmithReducer(m).run(); }

Integer integer_determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Rational d = determinant(m.to_rational());
  return d.get_num();
}

KernelBases integral_kernel_basis(const IntegerMatrix& u) {
  KernelBases out;
  out.rational = kernel_basis(u.to_rational());
  const SmithDecomposition snf = smith_normal_form(u);
  for (std::size_t c = snf.rank; c < u.cols(); ++c) out.integral.push_back(snf.right.column(c));
  return out;
}

bool extends_to_lattice_basis(const IntegerMatrix& columns) {
  if (columns.cols() == 0) return true;
  const SmithDecomposition snf = smith_normal_form(columns);
  if (snf.rank != columns.cols()) return false;
  for (const auto& f : snf.factors)
    if (f != 1) return false;
  return true;
}

}  // namespace hsq
