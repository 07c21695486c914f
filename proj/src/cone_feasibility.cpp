#include "hsq/cone_feasibility.hpp"

#include "hsq/matrix.hpp"
#include "hsq/quadratic_surd.hpp"
#include "hsq/split_quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsq {

Rational AffineForm::operator()(const RationalVector& x) const {
  Rational v = constant;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (sgn(coeffs[j]) != 0) v += coeffs[j] * x[j];
  return v;
}

bool ConeConstraint::contains(const RationalVector& x) const {
  const Rational a = apex(x);
  if (sgn(a) < 0) return false;
  const Rational f = first(x), s = second(x);
  return a * a >= f * f + s * s;
}

bool ConeConstraint::on_boundary(const RationalVector& x) const {
  const Rational a = apex(x);
  if (sgn(a) < 0) return false;
  const Rational f = first(x), s = second(x);
  return a * a == f * f + s * s;
}

bool SocSystem::satisfied_by(const RationalVector& x) const {
  if (x.size() != num_vars) return false;
  LinearProgram lp;
  lp.num_vars = num_vars;
  lp.constraints = linear;
  if (!satisfies(lp, x)) return false;
  return std::all_of(cones.begin(), cones.end(), [&](const ConeConstraint& c) { return c.contains(x); });
}

std::string to_string(Feasibility f) {
  switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::Infeasible: return "infeasible";
    case Feasibility::Unknown: return "unknown";
  }
  return "unknown";
}

FeasibilityVerdict rational_lp_feasible(const LinearProgram& lp) {
  LinearProgram plain = lp;
  plain.objective.reset();
  const LpResult r = solve_lp(plain);
  FeasibilityVerdict v;
  v.method = "exact-simplex";
  if (r.status == LpStatus::Infeasible) {
    v.status = Feasibility::Infeasible;
    v.farkas = r.certificate;
  } else {
    v.status = Feasibility::Feasible;
    v.witness = r.point;
  }
  return v;
}

namespace {

// Appends `form (relation) 0` to lp, with extra zero-padded variables.
void add_form(LinearProgram& lp, const AffineForm& form, Relation rel, std::size_t total_vars) {
  RationalVector coeffs(total_vars);
  std::copy(form.coeffs.begin(), form.coeffs.end(), coeffs.begin());
  lp.add(std::move(coeffs), rel, -form.constant);
}

AffineForm combine(const AffineForm& a, const Rational& fa, const AffineForm& b, const Rational& fb) {
  AffineForm out{RationalVector(a.coeffs.size()), fa * a.constant + fb * b.constant};
  for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] = fa * a.coeffs[j] + fb * b.coeffs[j];
  return out;
}

LinearProgram base_program(const SocSystem& sys, std::size_t total_vars) {
  LinearProgram lp;
  lp.num_vars = total_vars;
  for (const auto& c : sys.linear) {
    RationalVector coeffs(total_vars);
    std::copy(c.coeffs.begin(), c.coeffs.end(), coeffs.begin());
    lp.add(std::move(coeffs), c.relation, c.rhs);
  }
  return lp;
}

// |first| <= apex, |second| <= apex, |first +- second| <= (3/2) apex.
LinearProgram outer_relaxation(const SocSystem& sys) {
  LinearProgram lp = base_program(sys, sys.num_vars);
  const Rational three_halves(3, 2);
  for (const auto& c : sys.cones) {
    for (int sgn_f : {-1, 1}) {
      add_form(lp, combine(c.apex, 1, c.first, sgn_f), Relation::GreaterEqual, sys.num_vars);
      add_form(lp, combine(c.apex, 1, c.second, sgn_f), Relation::GreaterEqual, sys.num_vars);
      for (int sgn_s : {-1, 1}) {
        AffineForm f = combine(c.first, sgn_f, c.second, sgn_s);
        add_form(lp, combine(c.apex, three_halves, f, -1), Relation::GreaterEqual, sys.num_vars);
      }
    }
  }
  return lp;
}

std::vector<std::pair<Rational, Rational>> polygon_vertices(std::size_t m) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (std::size_t j = 0; j < m; ++j) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    const double half = phi / 2.0;
    if (std::abs(std::cos(half)) < 1e-12) {
      pts.emplace_back(-1, 0);
      continue;
    }
    const CirclePoint p = circle_point(rational_approximation(std::tan(half), 10000));
    pts.emplace_back(p.c, p.s);
  }
  return pts;
}

// Each cone is replaced by apex >= sum mu_j, (first, second) = sum mu_j p_j with mu >= 0,
// the cone over the convex hull of rational points on the unit circle.
FeasibilityVerdict inner_polygon(const SocSystem& sys, std::size_t m) {
  const auto pts = polygon_vertices(m);
  const std::size_t total = sys.num_vars + sys.cones.size() * pts.size();
  LinearProgram lp = base_program(sys, total);
  lp.nonnegative.assign(total, false);
  for (std::size_t k = 0; k < sys.cones.size(); ++k) {
    const auto& c = sys.cones[k];
    const std::size_t off = sys.num_vars + k * pts.size();
    RationalVector apex(total), first(total), second(total);
    std::copy(c.apex.coeffs.begin(), c.apex.coeffs.end(), apex.begin());
    std::copy(c.first.coeffs.begin(), c.first.coeffs.end(), first.begin());
    std::copy(c.second.coeffs.begin(), c.second.coeffs.end(), second.begin());
    for (std::size_t j = 0; j < pts.size(); ++j) {
      lp.nonnegative[off + j] = true;
      apex[off + j] = -1;
      first[off + j] = -pts[j].first;
      second[off + j] = -pts[j].second;
    }
    lp.add(std::move(apex), Relation::GreaterEqual, -c.apex.constant);
    lp.add(std::move(first), Relation::Equal, -c.first.constant);
    lp.add(std::move(second), Relation::Equal, -c.second.constant);
  }
  const LpResult r = solve_lp(lp);
  FeasibilityVerdict v;
  v.method = "inner-polygon:" + std::to_string(m);
  if (r.status == LpStatus::Infeasible) return v;
  RationalVector x(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(sys.num_vars));
  if (!sys.satisfied_by(x)) throw std::logic_error("inner polygon witness failed exact verification");
  v.status = Feasibility::Feasible;
  v.witness = std::move(x);
  return v;
}

// ---- numeric fallback -------------------------------------------------------

using DVec = std::vector<double>;

DVec to_doubles(const RationalVector& v) {
  DVec d(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) d[i] = v[i].get_d();
  return d;
}

double eval(const DVec& coeffs, double constant, const DVec& x) {
  double s = constant;
  for (std::size_t j = 0; j < x.size(); ++j) s += coeffs[j] * x[j];
  return s;
}

// Least-norm dx with A dx = r for a k x m matrix A (k <= 3), via (A A^T) y = r.
DVec least_norm(const std::vector<DVec>& a, const DVec& r) {
  const std::size_t k = a.size();
  std::vector<DVec> gram(k, DVec(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double s = 0;
      for (std::size_t c = 0; c < a[i].size(); ++c) s += a[i][c] * a[j][c];
      gram[i][j] = s + (i == j ? 1e-14 : 0.0);
    }
    gram[i][k] = r[i];
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < k; ++i)
      if (std::abs(gram[i][c]) > std::abs(gram[p][c])) p = i;
    std::swap(gram[p], gram[c]);
    if (std::abs(gram[c][c]) < 1e-300) continue;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c) continue;
      const double f = gram[i][c] / gram[c][c];
      for (std::size_t j = c; j <= k; ++j) gram[i][j] -= f * gram[c][j];
    }
  }
  DVec y(k);
  for (std::size_t i = 0; i < k; ++i) y[i] = std::abs(gram[i][i]) < 1e-300 ? 0.0 : gram[i][k] / gram[i][i];
  DVec dx(a.empty() ? 0 : a[0].size());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < dx.size(); ++c) dx[c] += y[i] * a[i][c];
  return dx;
}

std::optional<RationalVector> polish(const SocSystem& sys, const DVec& x) {
  for (long den : {1L, 2L, 12L, 1000L, 1000000L}) {
    RationalVector q(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) q[j] = rational_approximation(x[j], den);
    std::vector<const LinearConstraint*> eqs;
    for (const auto& c : sys.linear)
      if (c.relation == Relation::Equal) eqs.push_back(&c);
    if (!eqs.empty()) {
      RationalMatrix e(eqs.size(), sys.num_vars);
      RationalVector resid(eqs.size());
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        for (std::size_t j = 0; j < sys.num_vars; ++j) e(i, j) = eqs[i]->coeffs[j];
        resid[i] = eqs[i]->rhs - dot(eqs[i]->coeffs, q);
      }
      const auto y = solve(e * e.transpose(), resid);
      if (!y) continue;
      q = add(q, e.transpose() * *y);
    }
    if (sys.satisfied_by(q)) return q;
  }
  return std::nullopt;
}

std::optional<RationalVector> alternating_projections(const SocSystem& sys, const SocOptions& opt) {
  DVec x(sys.num_vars, 0.0);
  struct Row { DVec a; double b; Relation rel; };
  std::vector<Row> rows;
  for (const auto& c : sys.linear) rows.push_back({to_doubles(c.coeffs), c.rhs.get_d(), c.relation});
  struct Cone { DVec a0, a1, a2; double c0, c1, c2; };
  std::vector<Cone> cones;
  for (const auto& c : sys.cones)
    cones.push_back({to_doubles(c.apex.coeffs), to_doubles(c.first.coeffs), to_doubles(c.second.coeffs),
                     c.apex.constant.get_d(), c.first.constant.get_d(), c.second.constant.get_d()});
  for (std::size_t iter = 0; iter < opt.max_iterations; ++iter) {
    double worst = 0;
    for (const auto& r : rows) {
      const double v = eval(r.a, 0.0, x) - r.b;
      const bool violated = r.rel == Relation::Equal ? std::abs(v) > 0
                            : r.rel == Relation::GreaterEqual ? v < 0 : v > 0;
      if (!violated) continue;
      worst = std::max(worst, std::abs(v));
      const DVec dx = least_norm({r.a}, {-v});
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += dx[j];
    }
    for (const auto& c : cones) {
      const double t = eval(c.a0, c.c0, x), f = eval(c.a1, c.c1, x), s = eval(c.a2, c.c2, x);
      const double nv = std::hypot(f, s);
      if (nv <= t) continue;
      worst = std::max(worst, nv - t);
      double tt = 0, ff = 0, ss = 0;
      if (nv > -t) {
        tt = (t + nv) / 2;
        ff = tt * f / nv;
        ss = tt * s / nv;
      }
      const DVec dx = least_norm({c.a0, c.a1, c.a2}, {tt - t, ff - f, ss - s});
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += dx[j];
    }
    if (worst < opt.tolerance) return polish(sys, x);
  }
  return std::nullopt;
}

}  // namespace

FeasibilityVerdict soc_feasible(const SocSystem& sys, const SocOptions& options) {
  for (const auto& c : sys.linear)
    if (c.coeffs.size() != sys.num_vars) throw std::invalid_argument("soc_feasible: constraint length mismatch");
  if (options.outer_relaxation) {
    const LpResult outer = solve_lp(outer_relaxation(sys));
    if (outer.status == LpStatus::Infeasible) {
      FeasibilityVerdict v;
      v.status = Feasibility::Infeasible;
      v.farkas = outer.certificate;
      v.method = "outer-polyhedral";
      return v;
    }
  }
  for (std::size_t m : options.inner_polygons) {
    FeasibilityVerdict v = inner_polygon(sys, m);
    if (v.status == Feasibility::Feasible) return v;
  }
  if (options.numeric_fallback) {
    if (auto x = alternating_projections(sys, options)) {
      FeasibilityVerdict v;
      v.status = Feasibility::Feasible;
      v.witness = std::move(*x);
      v.method = "alternating-projections+polish";
      return v;
    }
  }
  FeasibilityVerdict v;
  v.method = "undecided";
  return v;
}

std::vector<std::pair<Rational, Rational>> sweep_directions(std::size_t count) {
  std::vector<std::pair<Rational, Rational>> dirs{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t j = 1; dirs.size() < count; ++j) {
    // Base-2 radical inverse of j.
    double frac = 0, base = 0.5;
    for (std::size_t k = j; k > 0; k >>= 1, base /= 2)
      if (k & 1) frac += base;
    const double half = std::numbers::pi * frac;
    if (std::abs(std::cos(half)) < 1e-12) continue;
    const CirclePoint p = circle_point(rational_approximation(std::tan(half), 10000));
    std::pair<Rational, Rational> d{p.c, p.s};
    if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) dirs.push_back(std::move(d));
  }
  dirs.resize(std::min(dirs.size(), count));
  return dirs;
}

namespace {

// Replaces cone k by first = theta_1 apex, second = theta_2 apex, apex >= 0.
void pin_to_ray(SocSystem& sys, std::size_t k, const std::pair<Rational, Rational>& theta) {
  const ConeConstraint c = sys.cones[k];
  auto push = [&](const AffineForm& f, Relation rel) {
    sys.linear.push_back({f.coeffs, rel, -f.constant});
  };
  push(combine(c.first, 1, c.apex, -theta.first), Relation::Equal);
  push(combine(c.second, 1, c.apex, -theta.second), Relation::Equal);
  push(c.apex, Relation::GreaterEqual);
}

// A certificate that apex_k >= |(first_k, second_k)| + eps on the feasible set:
// first_k, second_k are combinations sum rho_j (first_j, second_j) (+ equalities) and
// apex_k - sum |rho_j| apex_j - eps is a nonnegative combination of the inequalities
// (+ equalities). Returns eps (> 0) when found.
std::optional<Rational> exclusion_margin(const SocSystem& sys, std::size_t k) {
  const std::size_t m = sys.num_vars;
  const std::size_t width = m + 1;  // coefficients then constant
  std::vector<AffineForm> ineq, eq;
  for (const auto& c : sys.linear) {
    AffineForm f{c.coeffs, -c.rhs};
    if (c.relation == Relation::LessEqual) f = combine(f, -1, f, 0);
    (c.relation == Relation::Equal ? eq : ineq).push_back(std::move(f));
  }
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < sys.cones.size(); ++j)
    if (j != k) others.push_back(j);
  // Variables: rho+ (n_o), rho- (n_o), nu (ineq), eta0, eta1, eta2 (eq each), eps.
  const std::size_t no = others.size();
  const std::size_t n_vars = 2 * no + ineq.size() + 3 * eq.size() + 1;
  const std::size_t rho_p = 0, rho_m = no, nu = 2 * no, eta = nu + ineq.size(), eps = n_vars - 1;
  LinearProgram lp;
  lp.num_vars = n_vars;
  lp.nonnegative.assign(n_vars, false);
  for (std::size_t j = 0; j < 2 * no + ineq.size(); ++j) lp.nonnegative[j] = true;
  lp.nonnegative[eps] = true;
  auto component = [&](const AffineForm& f, std::size_t c) -> const Rational& {
    return c < m ? f.coeffs[c] : f.constant;
  };
  const ConeConstraint& target = sys.cones[k];
  for (std::size_t comp = 0; comp < 3; ++comp) {
    const AffineForm& lhs = comp == 0 ? target.apex : comp == 1 ? target.first : target.second;
    for (std::size_t c = 0; c < width; ++c) {
      RationalVector row(n_vars);
      for (std::size_t o = 0; o < no; ++o) {
        const ConeConstraint& cj = sys.cones[others[o]];
        if (comp == 0) {
          row[rho_p + o] = component(cj.apex, c);
          row[rho_m + o] = component(cj.apex, c);
        } else {
          const AffineForm& f = comp == 1 ? cj.first : cj.second;
          row[rho_p + o] = component(f, c);
          row[rho_m + o] = -component(f, c);
        }
      }
      if (comp == 0)
        for (std::size_t i = 0; i < ineq.size(); ++i) row[nu + i] = component(ineq[i], c);
      for (std::size_t e = 0; e < eq.size(); ++e) row[eta + comp * eq.size() + e] = component(eq[e], c);
      if (comp == 0 && c == m) row[eps] = 1;
      lp.add(std::move(row), Relation::Equal, component(lhs, c));
    }
  }
  RationalVector cap(n_vars);
  cap[eps] = 1;
  lp.add(cap, Relation::LessEqual, 1);
  lp.objective = cap;
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal || sgn(r.objective_value) <= 0) return std::nullopt;
  return r.objective_value;
}

}  // namespace

FeasibilityVerdict boundary_meet(const SocSystem& sys, std::size_t cone_index, const BoundaryOptions& options) {
  if (cone_index >= sys.cones.size()) throw std::out_of_range("boundary_meet: cone index out of range");
  const FeasibilityVerdict whole = soc_feasible(sys);
  if (whole.status == Feasibility::Infeasible) {
    FeasibilityVerdict v = whole;
    v.method = "empty-feasible-set:" + whole.method;
    return v;
  }
  if (auto eps = exclusion_margin(sys, cone_index)) {
    FeasibilityVerdict v;
    v.status = Feasibility::Infeasible;
    v.exclusion_margin = *eps;
    v.method = "cone-combination-bound";
    return v;
  }
  const auto dirs = sweep_directions(options.resolution);
  for (std::size_t d = 0; d < dirs.size(); ++d) {
    SocSystem pinned = sys;
    pin_to_ray(pinned, cone_index, dirs[d]);
    pinned.cones.erase(pinned.cones.begin() + static_cast<std::ptrdiff_t>(cone_index));
    const FeasibilityVerdict r = soc_feasible(pinned, options.soc);
    if (r.status != Feasibility::Feasible) continue;
    if (!sys.satisfied_by(r.witness) || !sys.cones[cone_index].on_boundary(r.witness))
      throw std::logic_error("boundary sweep witness failed exact verification");
    FeasibilityVerdict v = r;
    v.method = "direction-sweep";
    v.resolution = d + 1;
    return v;
  }
  FeasibilityVerdict v;
  v.method = "direction-sweep";
  v.resolution = dirs.size();
  return v;
}

namespace {

// With walls[0..k-2] pinned to the given rays, intersects lines through a feasible point
// with the quadric apex^2 = first^2 + second^2 of the last wall. Directions that are null
// for that quadric make the equation linear, so the intersection stays rational.
std::optional<RationalVector> meet_last_wall(const SocSystem& sys, const std::vector<std::size_t>& walls,
                                             const std::vector<std::pair<Rational, Rational>>& thetas,
                                             const std::vector<std::pair<Rational, Rational>>& nulls,
                                             const SocOptions& soc) {
  SocSystem pinned = sys;
  for (std::size_t i = 0; i + 1 < walls.size(); ++i) pin_to_ray(pinned, walls[i], thetas[i]);
  std::vector<ConeConstraint> kept;
  for (std::size_t j = 0; j < sys.cones.size(); ++j)
    if (std::find(walls.begin(), walls.end() - 1, j) == walls.end() - 1) kept.push_back(sys.cones[j]);
  pinned.cones = std::move(kept);
  const FeasibilityVerdict start = soc_feasible(pinned, soc);
  if (start.status != Feasibility::Feasible) return std::nullopt;
  const RationalVector& x0 = start.witness;

  std::vector<RationalVector> eq_rows;
  for (const auto& c : pinned.linear)
    if (c.relation == Relation::Equal) eq_rows.push_back(c.coeffs);
  std::vector<RationalVector> space;
  if (eq_rows.empty()) {
    for (std::size_t i = 0; i < sys.num_vars; ++i) {
      RationalVector e(sys.num_vars);
      e[i] = 1;
      space.push_back(e);
    }
  } else {
    RationalMatrix eq(eq_rows.size(), sys.num_vars);
    for (std::size_t r = 0; r < eq_rows.size(); ++r)
      for (std::size_t c = 0; c < sys.num_vars; ++c) eq(r, c) = eq_rows[r][c];
    space = kernel_basis(eq);
  }
  if (space.empty()) return std::nullopt;

  const ConeConstraint& last = sys.cones[walls.back()];
  std::vector<RationalVector> lines = space;
  RationalMatrix image(3, space.size());
  for (std::size_t c = 0; c < space.size(); ++c) {
    image(0, c) = dot(last.apex.coeffs, space[c]);
    image(1, c) = dot(last.first.coeffs, space[c]);
    image(2, c) = dot(last.second.coeffs, space[c]);
  }
  for (const auto& [cs, sn] : nulls) {
    const auto coef = solve(image, {1, cs, sn});
    if (!coef) continue;
    RationalVector v(sys.num_vars);
    for (std::size_t c = 0; c < space.size(); ++c) v = add(v, scale((*coef)[c], space[c]));
    lines.push_back(v);
  }

  auto check = [&](const RationalVector& x) {
    if (!sys.satisfied_by(x)) return false;
    for (auto w : walls)
      if (!sys.cones[w].on_boundary(x)) return false;
    return true;
  };
  const Rational a0 = last.apex(x0), f0 = last.first(x0), s0 = last.second(x0);
  for (const auto& v : lines) {
    const Rational av = dot(last.apex.coeffs, v), fv = dot(last.first.coeffs, v), sv = dot(last.second.coeffs, v);
    const Rational qa = av * av - fv * fv - sv * sv;
    const Rational qb = 2 * (a0 * av - f0 * fv - s0 * sv);
    const Rational qc = a0 * a0 - f0 * f0 - s0 * s0;
    std::vector<Rational> roots;
    if (sgn(qa) == 0) {
      if (sgn(qb) != 0) roots.push_back(-qc / qb);
    } else {
      Rational root;
      if (rational_sqrt(qb * qb - 4 * qa * qc, root)) {
        roots.push_back((-qb + root) / (2 * qa));
        roots.push_back((-qb - root) / (2 * qa));
      }
    }
    for (const auto& t : roots) {
      const RationalVector x = add(x0, scale(t, v));
      if (check(x)) return x;
    }
  }
  return std::nullopt;
}

}  // namespace

FeasibilityVerdict joint_boundary_meet(const SocSystem& sys, const std::vector<std::size_t>& walls,
                                       const BoundaryOptions& options) {
  for (auto w : walls)
    if (w >= sys.cones.size()) throw std::out_of_range("joint_boundary_meet: cone index out of range");
  auto attempt = [&](const std::vector<std::pair<Rational, Rational>>& thetas) -> std::optional<RationalVector> {
    SocSystem pinned = sys;
    for (std::size_t i = 0; i < walls.size(); ++i) pin_to_ray(pinned, walls[i], thetas[i]);
    std::vector<ConeConstraint> kept;
    for (std::size_t j = 0; j < sys.cones.size(); ++j)
      if (std::find(walls.begin(), walls.end(), j) == walls.end()) kept.push_back(sys.cones[j]);
    pinned.cones = std::move(kept);
    const FeasibilityVerdict r = soc_feasible(pinned, options.soc);
    if (r.status != Feasibility::Feasible) return std::nullopt;
    return r.witness;
  };
  auto accept = [&](const RationalVector& x, std::size_t tried) {
    if (!sys.satisfied_by(x)) throw std::logic_error("joint boundary witness failed exact verification");
    for (auto w : walls)
      if (!sys.cones[w].on_boundary(x)) throw std::logic_error("joint boundary witness is off a wall");
    FeasibilityVerdict v;
    v.status = Feasibility::Feasible;
    v.witness = x;
    v.method = "joint-direction-sweep";
    v.resolution = tried;
    return v;
  };
  std::size_t tried = 0;
  // Shared direction for all walls (coincident walls, common vertices).
  const auto dirs = sweep_directions(options.resolution);
  for (const auto& d : dirs) {
    ++tried;
    if (auto x = attempt(std::vector<std::pair<Rational, Rational>>(walls.size(), d))) return accept(*x, tried);
  }
  // Pin all but the last wall to rays and meet the last wall along lines.
  {
    const std::size_t rest = walls.size() - 1;
    const auto lead = sweep_directions(rest <= 1 ? options.resolution : rest == 2 ? 16 : 6);
    const auto nulls = sweep_directions(16);
    std::vector<std::size_t> idx(rest, 0);
    for (;;) {
      std::vector<std::pair<Rational, Rational>> thetas;
      for (auto i : idx) thetas.push_back(lead[i]);
      ++tried;
      if (auto x = meet_last_wall(sys, walls, thetas, nulls, options.soc)) return accept(*x, tried);
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == lead.size()) idx[pos++] = 0;
      if (pos == idx.size()) break;
    }
  }
  // Independent directions from a small nested set.
  const std::size_t per_wall = walls.size() <= 2 ? 16 : walls.size() <= 3 ? 8 : 4;
  const auto small = sweep_directions(per_wall);
  std::vector<std::size_t> idx(walls.size(), 0);
  for (;;) {
    std::vector<std::pair<Rational, Rational>> thetas;
    bool all_same = true;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      thetas.push_back(small[idx[i]]);
      if (idx[i] != idx[0]) all_same = false;
    }
    if (!all_same) {
      ++tried;
      if (auto x = attempt(thetas)) return accept(*x, tried);
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == small.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  FeasibilityVerdict v;
  v.method = "joint-direction-sweep";
  v.resolution = tried;
  return v;
}

bool positively_spanning(const IntegerMatrix& u) {
  const std::size_t n = u.rows();
  LinearProgram lp;
  lp.num_vars = n;
  for (std::size_t k = 0; k < u.cols(); ++k) {
    RationalVector row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rational(u(i, k));
    lp.add(std::move(row), Relation::GreaterEqual, 0);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      RationalVector obj(n);
      obj[i] = s;
      lp.objective = obj;
      if (solve_lp(lp).status == LpStatus::Unbounded) return false;
    }
  }
  return true;
}

}  // namespace hsq
