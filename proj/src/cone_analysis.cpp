#include "hsq/cone_analysis.hpp"

#include "hsq/lattice.hpp"
#include "hsq/linear_program.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace hsq {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(DegeneracyVerdict::Status s) {
  switch (s) {
    case DegeneracyVerdict::Status::Degenerate: return "degenerate";
    case DegeneracyVerdict::Status::NondegenerateAtSampled: return "nondegenerate-at-sampled-strata";
    case DegeneracyVerdict::Status::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(SmoothnessVerdict::Status s) {
  switch (s) {
    case SmoothnessVerdict::Status::NecessaryConditionHolds: return "necessary-condition-holds";
    case SmoothnessVerdict::Status::Fails: return "fails";
  }
  return "?";
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t d, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  if (size > d) return out;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == d - size + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

ConnectednessVerdict connectedness_test(const ToricConfig& cfg, const AnalysisOptions& options) {
  cfg.validate();
  const SocSystem sys = cone_system(cfg);
  BoundaryOptions bo;
  bo.resolution = options.sweep_resolution;
  ConnectednessVerdict out;
  bool unknown = false;
  for (std::size_t k = 0; k < cfg.d; ++k) {
    out.walls.push_back(boundary_meet(sys, k, bo));
    const Feasibility f = out.walls.back().status;
    if (f == Feasibility::Infeasible && !out.missing_wall) out.missing_wall = k;
    if (f == Feasibility::Unknown) unknown = true;
  }
  out.status = out.missing_wall ? Verdict::No : unknown ? Verdict::Unknown : Verdict::Yes;
  return out;
}

bool compactness_test(const ToricConfig& cfg) {
  cfg.validate();
  return positively_spanning(cfg.u);
}

std::vector<Stratum> enumerate_strata(const ToricConfig& cfg, const AnalysisOptions& options) {
  cfg.validate();
  const std::size_t cap = std::min(cfg.d, options.stratum_cap == 0 ? cfg.n + 1 : options.stratum_cap);
  const SocSystem base = cone_system(cfg);
  std::vector<Stratum> out;
  std::set<std::vector<std::size_t>> open{{}};  // strata not known to be empty at the previous size
  for (std::size_t size = 1; size <= cap; ++size) {
    std::set<std::vector<std::size_t>> next;
    for (const auto& j : subsets_of_size(cfg.d, size)) {
      bool all_faces_open = true;
      for (std::size_t drop = 0; drop < j.size() && all_faces_open; ++drop) {
        std::vector<std::size_t> face = j;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        all_faces_open = open.count(face) > 0;
      }
      if (!all_faces_open) continue;
      SocSystem sys = base;
      add_vertex_equalities(sys, cfg, j);
      FeasibilityVerdict f = soc_feasible(sys);
      if (f.status == Feasibility::Infeasible) continue;
      next.insert(j);
      out.push_back({j, std::move(f), extends_to_lattice_basis(cfg.u.select_columns(j))});
    }
    open = std::move(next);
  }
  return out;
}

FreenessVerdict freeness_test(const ToricConfig& cfg, const AnalysisOptions& options) {
  cfg.validate();
  FreenessVerdict out;
  if (cfg.d > options.max_d) {
    out.note = "stratum enumeration skipped: d exceeds max_d";
    return out;
  }
  out.strata = enumerate_strata(cfg, options);
  bool unresolved = false;
  for (const auto& s : out.strata) {
    if (s.lattice_basis) continue;
    if (s.feasibility.status == Feasibility::Feasible) {
      if (!out.violating) out.violating = s.j;
    } else {
      unresolved = true;
    }
  }
  out.status = out.violating ? Verdict::No : unresolved ? Verdict::Unknown : Verdict::Yes;
  return out;
}

namespace {

Rational cone_discriminant(const ConeValues& v, std::size_t k) { return v.a[k] * v.a[k] - v.b[k].norm2(); }

bool in_k(const ToricConfig& cfg, const ConePoint& p) { return incidence(cfg, p).in_k; }

bool zeta_equations_hold(const ToricConfig& cfg, const ConeValues& v, const RationalVector& zeta,
                         const RationalVector& s) {
  for (std::size_t k = 0; k < cfg.d; ++k) {
    Rational us = 0;
    for (std::size_t i = 0; i < cfg.n; ++i) us += s[i] * Rational(cfg.u(i, k));
    if (4 * zeta[k] * zeta[k] * cone_discriminant(v, k) != us) return false;
  }
  return true;
}

}  // namespace

bool verify_degeneracy_witness(const ToricConfig& cfg, const DegeneracyWitness& w) {
  if (w.point.a.size() != cfg.n || w.point.b.size() != cfg.n || !in_k(cfg, w.point)) return false;
  const SocSystem sys = cone_system(cfg);
  const RationalVector x = to_variables(w.point);
  if (w.kind == DegeneracyWitness::Kind::Walls) {
    std::set<std::size_t> distinct(w.walls.begin(), w.walls.end());
    if (distinct.size() < cfg.n + 1) return false;
    for (auto k : distinct)
      if (k >= cfg.d || !sys.cones[k].on_boundary(x)) return false;
    return true;
  }
  if (w.zeta.size() != cfg.d || w.s.size() != cfg.n || is_zero(w.zeta)) return false;
  if (!is_zero(cfg.u.to_rational() * w.zeta)) return false;
  return zeta_equations_hold(cfg, cone_values(cfg, w.point), w.zeta, w.s);
}

std::optional<DegeneracyWitness> pointwise_degeneracy(const ToricConfig& cfg, const ConePoint& p,
                                                      std::uint64_t seed, std::size_t zeta_samples) {
  const TorusData td = build_torus_data(cfg);
  const ConeValues v = cone_values(cfg, p);
  const std::size_t m = td.dimension();
  if (m == 0) return std::nullopt;
  auto make = [&](RationalVector zeta, RationalVector s) -> std::optional<DegeneracyWitness> {
    DegeneracyWitness w;
    w.kind = DegeneracyWitness::Kind::ZetaS;
    w.point = p;
    w.zeta = std::move(zeta);
    w.s = std::move(s);
    if (!verify_degeneracy_witness(cfg, w)) throw std::logic_error("degeneracy witness failed exact verification");
    return w;
  };
  if (m == 1) {
    // Unknowns (t^2, s): 4 t^2 zeta_k^2 D_k - <s, u_k> = 0.
    const RationalVector& z0 = td.kernel_basis[0];
    RationalMatrix sys(cfg.d, 1 + cfg.n);
    for (std::size_t k = 0; k < cfg.d; ++k) {
      sys(k, 0) = 4 * z0[k] * z0[k] * cone_discriminant(v, k);
      for (std::size_t i = 0; i < cfg.n; ++i) sys(k, 1 + i) = -Rational(cfg.u(i, k));
    }
    for (const auto& vec : kernel_basis(sys)) {
      if (sgn(vec[0]) == 0) continue;
      RationalVector s(cfg.n);
      for (std::size_t i = 0; i < cfg.n; ++i) s[i] = vec[1 + i] / vec[0];
      return make(z0, s);
    }
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const RationalMatrix ut = cfg.u.to_rational().transpose();
  for (std::size_t trial = 0; trial < m + zeta_samples; ++trial) {
    RationalVector c(m);
    if (trial < m) {
      c[trial] = 1;
    } else {
      for (auto& x : c) x = coeff(rng);
    }
    RationalVector zeta(cfg.d);
    for (std::size_t j = 0; j < m; ++j) zeta = add(zeta, scale(c[j], td.kernel_basis[j]));
    if (is_zero(zeta)) continue;
    RationalVector rhs(cfg.d);
    for (std::size_t k = 0; k < cfg.d; ++k) rhs[k] = 4 * zeta[k] * zeta[k] * cone_discriminant(v, k);
    if (auto s = solve(ut, rhs)) return make(zeta, *s);
  }
  return std::nullopt;
}

DegeneracyVerdict degeneracy_test(const ToricConfig& cfg, const AnalysisOptions& options,
                                  const std::vector<Stratum>* strata) {
  cfg.validate();
  DegeneracyVerdict out;
  if (cfg.d > options.max_d) {
    out.method = "skipped: d exceeds max_d";
    return out;
  }
  const SocSystem sys = cone_system(cfg);
  auto found = [&](DegeneracyWitness w, const std::string& method) {
    if (!verify_degeneracy_witness(cfg, w)) throw std::logic_error("degeneracy witness failed exact verification");
    out.status = DegeneracyVerdict::Status::Degenerate;
    out.witness = std::move(w);
    out.method = method;
    return out;
  };

  std::vector<Stratum> own;
  if (!strata) {
    own = enumerate_strata(cfg, options);
    strata = &own;
  }
  std::vector<ConePoint> samples;
  for (const auto& s : *strata) {
    if (s.feasibility.status != Feasibility::Feasible) continue;
    const ConePoint p = from_variables(s.feasibility.witness, cfg.n);
    samples.push_back(p);
    if (s.j.size() >= cfg.n + 1) {
      DegeneracyWitness w;
      w.point = p;
      w.walls = s.j;
      return found(std::move(w), "vertex-stratum");
    }
  }

  // Walls through some point of K, then (n+1)-subsets of them.
  BoundaryOptions bo;
  bo.resolution = options.sweep_resolution;
  std::vector<std::size_t> live_walls;
  for (std::size_t k = 0; k < cfg.d; ++k) {
    const FeasibilityVerdict f = boundary_meet(sys, k, bo);
    if (f.status == Feasibility::Infeasible) continue;
    live_walls.push_back(k);
    if (f.status == Feasibility::Feasible) samples.push_back(from_variables(f.witness, cfg.n));
  }
  BoundaryOptions jo;
  jo.resolution = options.joint_resolution;
  for (const auto& idx : subsets_of_size(live_walls.size(), cfg.n + 1)) {
    if (out.wall_subsets_tested == options.max_wall_subsets) {
      ++out.wall_subsets_skipped;
      continue;
    }
    ++out.wall_subsets_tested;
    std::vector<std::size_t> walls;
    for (auto i : idx) walls.push_back(live_walls[i]);
    const FeasibilityVerdict f = joint_boundary_meet(sys, walls, jo);
    if (f.status == Feasibility::Feasible) {
      DegeneracyWitness w;
      w.point = from_variables(f.witness, cfg.n);
      w.walls = walls;
      return found(std::move(w), "joint-wall-sweep");
    }
  }

  // Pointwise (zeta, s) search over strata points, wall points, an interior point and random points of K.
  const CIntVerdict cint = cint_probe(cfg);
  if (cint.point) samples.push_back(*cint.point);
  if (!samples.empty()) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> num(-8, 8);
    const std::size_t bases = samples.size();
    for (std::size_t i = 0; i < options.samples; ++i) {
      const RationalVector base = to_variables(samples[rng() % bases]);
      RationalVector dir(base.size());
      for (auto& x : dir) x = Rational(num(rng), 4);
      Rational step = 1;
      for (int halving = 0; halving < 8; ++halving, step /= 2) {
        const RationalVector x = add(base, scale(step, dir));
        if (sys.satisfied_by(x)) {
          samples.push_back(from_variables(x, cfg.n));
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    ++out.points_tested;
    if (auto w = pointwise_degeneracy(cfg, samples[i], options.seed + i, options.samples))
      return found(std::move(*w), build_torus_data(cfg).dimension() == 1 ? "pointwise-exact" : "pointwise-sampled");
  }
  out.status = DegeneracyVerdict::Status::NondegenerateAtSampled;
  out.method = build_torus_data(cfg).dimension() <= 1 ? "pointwise-exact" : "pointwise-sampled";
  return out;
}

SmoothnessVerdict smoothness_test(const ToricConfig& cfg, const ConePoint& p) {
  SmoothnessVerdict out;
  out.incidence = incidence(cfg, p);
  if (!out.incidence.in_k) throw std::invalid_argument("smoothness_test: point is not in K");
  const auto& l = out.incidence.l;
  const auto& j = out.incidence.j;
  out.too_many_walls = l.size() > 3 * cfg.n;
  std::vector<std::size_t> free_walls;  // L \ J
  for (auto k : l)
    if (std::find(j.begin(), j.end(), k) == j.end()) free_walls.push_back(k);
  const std::size_t r = free_walls.size();

  // n_{L,J}: first r coordinates of ker [U_{L\J} | U_J].
  std::vector<std::size_t> cols = free_walls;
  cols.insert(cols.end(), j.begin(), j.end());
  std::vector<RationalVector> spanning;
  if (r > 0) {
    for (const auto& v : kernel_basis(cfg.u.select_columns(cols).to_rational()))
      spanning.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
  }
  std::vector<RationalVector> basis;
  if (!spanning.empty()) {
    const RowEchelon re = row_reduce(RationalMatrix::from_columns(spanning, r).transpose());
    for (std::size_t i = 0; i < re.pivots.size(); ++i) basis.push_back(re.reduced.row(i));
  }

  const ConeValues v = cone_values(cfg, p);
  std::vector<RationalVector> columns;
  for (const auto& c : basis) {
    RationalVector real_c(2 * r), real_d(2 * r), imag_d(2 * r);
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t k = free_walls[i];
      const ComplexRational bc = c[i] * v.b[k];
      real_c[2 * i] = bc.re;
      real_c[2 * i + 1] = bc.im;
      real_d[2 * i] = v.a[k] * c[i];
      imag_d[2 * i + 1] = v.a[k] * c[i];
    }
    columns.push_back(std::move(real_c));
    columns.push_back(std::move(real_d));
    columns.push_back(std::move(imag_d));
  }
  out.domain_dimension = columns.size();
  out.rank = columns.empty() ? 0 : rank(RationalMatrix::from_columns(columns, 2 * r));
  const bool injective = out.rank == out.domain_dimension;
  out.status = injective && !out.too_many_walls ? SmoothnessVerdict::Status::NecessaryConditionHolds
                                                : SmoothnessVerdict::Status::Fails;
  return out;
}

namespace {

/// max t <= 1 such that (apex - t, first, second) lies in the outer polygonal relaxation of every cone.
std::optional<Rational> outer_margin(const SocSystem& sys) {
  const std::size_t m = sys.num_vars;
  LinearProgram lp;
  lp.num_vars = m + 1;
  for (const auto& c : sys.linear) {
    RationalVector row = c.coeffs;
    row.push_back(0);
    lp.add(std::move(row), c.relation, c.rhs);
  }
  const Rational three_halves(3, 2);
  for (const auto& c : sys.cones) {
    // l0 = apex - t; require coef0 * l0 - e1 * first - e2 * second >= 0.
    auto push = [&](const Rational& coef0, int e1, int e2) {
      RationalVector row(m + 1);
      for (std::size_t i = 0; i < m; ++i)
        row[i] = coef0 * c.apex.coeffs[i] - e1 * c.first.coeffs[i] - e2 * c.second.coeffs[i];
      row[m] = -coef0;
      lp.add(std::move(row), Relation::GreaterEqual, -(coef0 * c.apex.constant - e1 * c.first.constant - e2 * c.second.constant));
    };
    for (int e : {1, -1}) {
      push(1, e, 0);
      push(1, 0, e);
      push(three_halves, e, e);
      push(three_halves, e, -e);
    }
  }
  RationalVector cap(m + 1);
  cap[m] = 1;
  lp.add(cap, Relation::LessEqual, 1);
  lp.objective = cap;
  const LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return r.objective_value;
}

SocSystem shifted(const SocSystem& sys, const Rational& t) {
  SocSystem out = sys;
  for (auto& c : out.cones) c.apex.constant -= t;
  return out;
}

}  // namespace

CIntVerdict cint_probe(const ToricConfig& cfg) {
  cfg.validate();
  const SocSystem sys = cone_system(cfg);
  CIntVerdict out;
  const auto t = outer_margin(sys);
  if (!t || sgn(*t) <= 0) {
    out.status = Verdict::No;
    out.outer_margin = t ? *t : Rational(0);
    out.method = "outer-relaxation-margin";
    return out;
  }
  out.outer_margin = *t;
  auto accept = [&](const FeasibilityVerdict& f, const std::string& method) {
    const ConePoint p = from_variables(f.witness, cfg.n);
    const Incidence inc = incidence(cfg, p);
    if (!inc.in_k || !inc.l.empty()) return false;
    out.status = Verdict::Yes;
    out.point = p;
    out.method = method;
    return true;
  };
  Rational margin = *t;
  for (int halving = 0; halving < 12; ++halving, margin /= 2) {
    const FeasibilityVerdict f = soc_feasible(shifted(sys, margin), SocOptions{{4, 8, 16}, false, false});
    if (f.status == Feasibility::Feasible && accept(f, "inner-polygon-margin")) return out;
  }
  const FeasibilityVerdict f = soc_feasible(shifted(sys, *t / 1024));
  if (f.status == Feasibility::Feasible && accept(f, "numeric-margin")) return out;
  out.method = "inconclusive";
  return out;
}

}  // namespace hsq
