#include "hsq/linear_program.hpp"

#include <stdexcept>

namespace hsq {

namespace {

struct Tableau {
  std::vector<RationalVector> rows;  // each row: coefficients then rhs
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;

  const Rational& rhs(std::size_t r) const { return rows[r][ncols]; }

  void pivot(std::size_t r, std::size_t c) {
    RationalVector& pr = rows[r];
    const Rational inv = 1 / pr[c];
    for (auto& x : pr)
      if (sgn(x) != 0) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      RationalVector& ri = rows[i];
      for (std::size_t j = 0; j <= ncols; ++j)
        if (sgn(pr[j]) != 0) ri[j] -= f * pr[j];
    }
    basis[r] = c;
  }
};

enum class SimplexOutcome { Optimal, Unbounded };

// Maximizes cost . columns over the tableau's current feasible basis, only letting
// columns with allowed[j] enter. Bland's rule.
SimplexOutcome run_simplex(Tableau& t, const RationalVector& cost, const std::vector<bool>& allowed,
                           std::size_t* unbounded_column) {
  std::vector<bool> in_basis(t.ncols, false);
  for (;;) {
    std::fill(in_basis.begin(), in_basis.end(), false);
    for (auto b : t.basis) in_basis[b] = true;
    std::size_t entering = t.ncols;
    for (std::size_t j = 0; j < t.ncols && entering == t.ncols; ++j) {
      if (!allowed[j] || in_basis[j]) continue;
      Rational reduced = cost[j];
      for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (sgn(t.rows[i][j]) != 0 && sgn(cost[t.basis[i]]) != 0) reduced -= cost[t.basis[i]] * t.rows[i][j];
      if (sgn(reduced) > 0) entering = j;
    }
    if (entering == t.ncols) return SimplexOutcome::Optimal;
    std::size_t leaving = t.rows.size();
    Rational best;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (sgn(t.rows[i][entering]) <= 0) continue;
      Rational ratio = t.rhs(i) / t.rows[i][entering];
      if (leaving == t.rows.size() || ratio < best || (ratio == best && t.basis[i] < t.basis[leaving])) {
        leaving = i;
        best = std::move(ratio);
      }
    }
    if (leaving == t.rows.size()) {
      *unbounded_column = entering;
      return SimplexOutcome::Unbounded;
    }
    t.pivot(leaving, entering);
  }
}

Rational lhs(const LinearConstraint& c, const RationalVector& x) {
  Rational s = 0;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (sgn(c.coeffs[j]) != 0) s += c.coeffs[j] * x[j];
  return s;
}

LpResult solve_impl(const LinearProgram& lp, bool want_certificate);

std::optional<FarkasCertificate> farkas_for(const LinearProgram& lp) {
  const std::size_t m = lp.constraints.size();
  LinearProgram dual;
  dual.num_vars = m;
  dual.nonnegative.assign(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    switch (lp.constraints[i].relation) {
      case Relation::GreaterEqual: dual.nonnegative[i] = true; break;
      case Relation::LessEqual: {
        RationalVector e(m);
        e[i] = 1;
        dual.add(std::move(e), Relation::LessEqual, 0);
        break;
      }
      case Relation::Equal: break;
    }
  }
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    RationalVector row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = lp.constraints[i].coeffs[j];
    dual.add(std::move(row), Relation::Equal, 0);
  }
  // Nonnegative primal variables relax sum y_i a_ij = 0 to <= 0.
  if (!lp.nonnegative.empty())
    for (std::size_t j = 0; j < lp.num_vars; ++j)
      if (lp.nonnegative[j]) dual.constraints[dual.constraints.size() - lp.num_vars + j].relation = Relation::LessEqual;
  RationalVector b(m);
  for (std::size_t i = 0; i < m; ++i) b[i] = lp.constraints[i].rhs;
  dual.add(std::move(b), Relation::Equal, 1);
  const LpResult r = solve_impl(dual, false);
  if (r.status == LpStatus::Infeasible) return std::nullopt;
  return FarkasCertificate{r.point};
}

LpResult solve_impl(const LinearProgram& lp, bool want_certificate) {
  const std::size_t nv = lp.num_vars;
  for (const auto& c : lp.constraints)
    if (c.coeffs.size() != nv) throw std::invalid_argument("constraint length does not match num_vars");
  auto is_nonneg = [&](std::size_t j) { return !lp.nonnegative.empty() && lp.nonnegative[j]; };

  // Column layout: structural (+ and, for free variables, -), slacks, artificials.
  std::vector<std::size_t> plus_col(nv), minus_col(nv, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nv; ++j) {
    plus_col[j] = ncols++;
    if (!is_nonneg(j)) minus_col[j] = ncols++;
  }
  const std::size_t structural = ncols;
  const std::size_t m = lp.constraints.size();
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (lp.constraints[i].relation != Relation::Equal) slack_col[i] = ncols++;
  const std::size_t first_artificial = ncols;

  std::vector<RationalVector> rows(m);
  std::vector<Rational> rhs(m);
  std::vector<bool> needs_artificial(m, true);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    RationalVector row(first_artificial);
    for (std::size_t j = 0; j < nv; ++j) {
      row[plus_col[j]] = c.coeffs[j];
      if (minus_col[j] != SIZE_MAX) row[minus_col[j]] = -c.coeffs[j];
    }
    if (c.relation == Relation::GreaterEqual) row[slack_col[i]] = -1;
    if (c.relation == Relation::LessEqual) row[slack_col[i]] = 1;
    rhs[i] = c.rhs;
    if (sgn(rhs[i]) < 0) {
      for (auto& x : row) x = -x;
      rhs[i] = -rhs[i];
    }
    if (slack_col[i] != SIZE_MAX && row[slack_col[i]] == 1) needs_artificial[i] = false;
    rows[i] = std::move(row);
  }
  std::size_t artificial_count = 0;
  for (bool b : needs_artificial) artificial_count += b ? 1 : 0;
  ncols = first_artificial + artificial_count;

  Tableau t;
  t.ncols = ncols;
  t.basis.resize(m);
  std::size_t next_art = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector full(ncols + 1);
    for (std::size_t j = 0; j < first_artificial; ++j) full[j] = rows[i][j];
    full[ncols] = rhs[i];
    if (needs_artificial[i]) {
      full[next_art] = 1;
      t.basis[i] = next_art++;
    } else {
      t.basis[i] = slack_col[i];
    }
    t.rows.push_back(std::move(full));
  }

  std::size_t unbounded_col = 0;
  if (artificial_count > 0) {
    RationalVector phase1(ncols);
    for (std::size_t j = first_artificial; j < ncols; ++j) phase1[j] = -1;
    std::vector<bool> all(ncols, true);
    run_simplex(t, phase1, all, &unbounded_col);
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (t.basis[i] >= first_artificial) infeasibility += t.rhs(i);
    if (sgn(infeasibility) > 0) {
      LpResult out;
      out.status = LpStatus::Infeasible;
      if (want_certificate) {
        out.certificate = farkas_for(lp);
        if (!out.certificate || !verify_certificate(lp, *out.certificate))
          throw std::logic_error("simplex: infeasible system without a valid Farkas certificate");
      }
      return out;
    }
    // Drive remaining (zero-valued) artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_artificial) { ++i; continue; }
      std::size_t col = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j)
        if (sgn(t.rows[i][j]) != 0) { col = j; break; }
      if (col == first_artificial) {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        t.pivot(i, col);
        ++i;
      }
    }
  }

  std::vector<bool> allowed(ncols, false);
  for (std::size_t j = 0; j < first_artificial; ++j) allowed[j] = true;
  RationalVector cost(ncols);
  if (lp.objective) {
    if (lp.objective->size() != nv) throw std::invalid_argument("objective length does not match num_vars");
    for (std::size_t j = 0; j < nv; ++j) {
      cost[plus_col[j]] = (*lp.objective)[j];
      if (minus_col[j] != SIZE_MAX) cost[minus_col[j]] = -(*lp.objective)[j];
    }
  }
  const SimplexOutcome outcome = run_simplex(t, cost, allowed, &unbounded_col);

  RationalVector col_value(ncols);
  for (std::size_t i = 0; i < t.rows.size(); ++i) col_value[t.basis[i]] = t.rhs(i);
  auto to_vars = [&](const RationalVector& cols) {
    RationalVector x(nv);
    for (std::size_t j = 0; j < nv; ++j) {
      x[j] = cols[plus_col[j]];
      if (minus_col[j] != SIZE_MAX) x[j] -= cols[minus_col[j]];
    }
    return x;
  };

  LpResult out;
  out.point = to_vars(col_value);
  if (!satisfies(lp, out.point)) throw std::logic_error("simplex: basic solution violates constraints");
  if (outcome == SimplexOutcome::Unbounded) {
    out.status = LpStatus::Unbounded;
    RationalVector dir(ncols);
    dir[unbounded_col] = 1;
    for (std::size_t i = 0; i < t.rows.size(); ++i) dir[t.basis[i]] = -t.rows[i][unbounded_col];
    out.ray = to_vars(dir);
    return out;
  }
  (void)structural;
  out.status = LpStatus::Optimal;
  if (lp.objective) {
    Rational v = 0;
    for (std::size_t j = 0; j < nv; ++j) v += (*lp.objective)[j] * out.point[j];
    out.objective_value = v;
  }
  return out;
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp) { return solve_impl(lp, true); }

bool satisfies(const LinearProgram& lp, const RationalVector& x) {
  if (x.size() != lp.num_vars) return false;
  for (std::size_t j = 0; j < lp.num_vars; ++j)
    if (!lp.nonnegative.empty() && lp.nonnegative[j] && sgn(x[j]) < 0) return false;
  for (const auto& c : lp.constraints) {
    const Rational v = lhs(c, x);
    switch (c.relation) {
      case Relation::GreaterEqual: if (v < c.rhs) return false; break;
      case Relation::LessEqual: if (v > c.rhs) return false; break;
      case Relation::Equal: if (v != c.rhs) return false; break;
    }
  }
  return true;
}

bool verify_certificate(const LinearProgram& lp, const FarkasCertificate& cert) {
  const auto& y = cert.multipliers;
  if (y.size() != lp.constraints.size()) return false;
  Rational bound = 0;
  RationalVector combo(lp.num_vars);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const auto& c = lp.constraints[i];
    if (c.relation == Relation::GreaterEqual && sgn(y[i]) < 0) return false;
    if (c.relation == Relation::LessEqual && sgn(y[i]) > 0) return false;
    for (std::size_t j = 0; j < lp.num_vars; ++j) combo[j] += y[i] * c.coeffs[j];
    bound += y[i] * c.rhs;
  }
  // For nonnegative x_j a nonpositive combined coefficient still yields sum <= 0.
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    const bool nonneg = !lp.nonnegative.empty() && lp.nonnegative[j];
    if (nonneg ? sgn(combo[j]) > 0 : sgn(combo[j]) != 0) return false;
  }
  return sgn(bound) > 0;
}

}  // namespace hsq
