#include "hsq/moment_map.hpp"

#include "hsq/flat_structure.hpp"

#include <cmath>
#include <stdexcept>

namespace hsq {

bool MomentValue::is_zero() const {
  for (const auto& x : mu_i)
    if (sgn(x) != 0) return false;
  for (const auto& x : mu_c)
    if (!x.is_zero()) return false;
  return true;
}

TorusInvariants torus_invariants(const ComplexPair& zw) {
  if (zw.z.size() != zw.w.size()) throw std::invalid_argument("z and w must have the same length");
  TorusInvariants inv;
  for (std::size_t k = 0; k < zw.z.size(); ++k) {
    inv.half_norm_sum.push_back((zw.z[k].norm2() + zw.w[k].norm2()) / 2);
    inv.zbar_w.push_back(zw.z[k].conj() * zw.w[k]);
  }
  return inv;
}

namespace {

void check_length(const ToricConfig& cfg, const ComplexPair& zw) {
  if (zw.z.size() != cfg.d || zw.w.size() != cfg.d) throw std::invalid_argument("z and w must have d entries");
}

}  // namespace

MomentValue moment_map(const ToricConfig& cfg, const ComplexPair& zw) {
  check_length(cfg, zw);
  const TorusData td = build_torus_data(cfg);
  const TorusInvariants inv = torus_invariants(zw);
  RationalVector re(cfg.d), im(cfg.d), real_part(cfg.d);
  for (std::size_t k = 0; k < cfg.d; ++k) {
    const ComplexRational ip = kImaginaryUnit * inv.zbar_w[k];
    real_part[k] = inv.half_norm_sum[k];
    re[k] = ip.re;
    im[k] = ip.im;
  }
  MomentValue m;
  m.mu_i = add(td.projector * real_part, td.c1);
  const RationalVector mre = add(td.projector * re, td.c2);
  const RationalVector mim = add(td.projector * im, td.c3);
  for (std::size_t k = 0; k < cfg.d; ++k) m.mu_c.emplace_back(mre[k], mim[k]);
  return m;
}

std::optional<ConePoint> level_witness(const ToricConfig& cfg, const TorusInvariants& inv) {
  if (inv.half_norm_sum.size() != cfg.d || inv.zbar_w.size() != cfg.d)
    throw std::invalid_argument("invariants must have d entries");
  const RationalMatrix ut = cfg.u.to_rational().transpose();
  RationalVector ra(cfg.d), rre(cfg.d), rim(cfg.d);
  for (std::size_t k = 0; k < cfg.d; ++k) {
    const ComplexRational rhs = kImaginaryUnit * inv.zbar_w[k] + cfg.lambda_c(k);
    ra[k] = inv.half_norm_sum[k] + cfg.lambda1[k];
    rre[k] = rhs.re;
    rim[k] = rhs.im;
  }
  const auto a = solve(ut, ra);
  const auto bre = solve(ut, rre);
  const auto bim = solve(ut, rim);
  if (!a || !bre || !bim) return std::nullopt;
  ConePoint p;
  p.a = *a;
  for (std::size_t i = 0; i < cfg.n; ++i) p.b.emplace_back((*bre)[i], (*bim)[i]);
  return p;
}

std::optional<ConePoint> level_witness(const ToricConfig& cfg, const ComplexPair& zw) {
  check_length(cfg, zw);
  return level_witness(cfg, torus_invariants(zw));
}

TorusInvariants FiberOrbit::invariants() const {
  TorusInvariants inv;
  const QuadraticSurd half = QuadraticSurd::from_rational(Rational(1, 2));
  for (const auto& c : coords) {
    const QuadraticSurd s = half * (c.z_mod2 + c.w_mod2);
    if (!s.is_rational()) throw std::logic_error("fiber moduli do not sum to a rational");
    inv.half_norm_sum.push_back(s.to_rational());
    inv.zbar_w.push_back(c.zbar_w);
  }
  return inv;
}

std::optional<ComplexPair> FiberOrbit::rational_representative() const {
  ComplexPair zw;
  for (const auto& c : coords) {
    if (!c.z_mod2.is_rational() || !c.w_mod2.is_rational()) return std::nullopt;
    Rational root;
    const Rational zm = c.z_mod2.to_rational();
    if (sgn(zm) != 0) {
      if (!rational_sqrt(zm, root)) return std::nullopt;
      zw.z.emplace_back(root);
      zw.w.push_back(Rational(1) / root * c.zbar_w);
    } else {
      if (!rational_sqrt(c.w_mod2.to_rational(), root)) return std::nullopt;
      zw.z.emplace_back(0);
      zw.w.emplace_back(root);
    }
  }
  return zw;
}

std::vector<std::array<double, 4>> FiberOrbit::approximate_representative() const {
  std::vector<std::array<double, 4>> out;
  for (const auto& c : coords) {
    const double zm = c.z_mod2.to_double();
    if (c.z_mod2.sign() != 0) {
      const double z = std::sqrt(zm);
      out.push_back({z, 0.0, to_double(c.zbar_w.re) / z, to_double(c.zbar_w.im) / z});
    } else {
      out.push_back({0.0, 0.0, std::sqrt(c.w_mod2.to_double()), 0.0});
    }
  }
  return out;
}

std::vector<FiberOrbit> fiber_enumerate(const ToricConfig& cfg, const ConePoint& p) {
  const Incidence inc = incidence(cfg, p);
  if (!inc.in_k) throw std::invalid_argument("fiber_enumerate: point is not in K");
  const ConeValues v = cone_values(cfg, p);
  // Per coordinate, the admissible (|z|^2, |w|^2) pairs.
  std::vector<std::vector<FiberCoordinate>> choices(cfg.d);
  for (std::size_t k = 0; k < cfg.d; ++k) {
    const Rational disc = v.a[k] * v.a[k] - v.b[k].norm2();
    const ComplexRational zbar_w = -(kImaginaryUnit * v.b[k]);
    if (sgn(disc) == 0) {
      const auto r = QuadraticSurd::from_rational(v.a[k]);
      choices[k].push_back({r, r, zbar_w, 0});
    } else {
      const QuadraticSurd plus(v.a[k], 1, disc), minus(v.a[k], -1, disc);
      choices[k].push_back({plus, minus, zbar_w, +1});
      choices[k].push_back({minus, plus, zbar_w, -1});
    }
  }
  std::vector<FiberOrbit> orbits(1);
  for (std::size_t k = 0; k < cfg.d; ++k) {
    std::vector<FiberOrbit> next;
    for (const auto& orbit : orbits)
      for (const auto& c : choices[k]) {
        FiberOrbit o = orbit;
        o.coords.push_back(c);
        next.push_back(std::move(o));
      }
    orbits = std::move(next);
  }
  return orbits;
}

const char* to_string(InducedStatus s) {
  switch (s) {
    case InducedStatus::Ok: return "ok";
    case InducedStatus::DegenerateAtPoint: return "degenerate-at-point";
    case InducedStatus::NotOnLevelSet: return "not-on-level-set";
  }
  return "?";
}

StructureRelations check_relations(const RationalMatrix& i, const RationalMatrix& s, const RationalMatrix& t,
                                   const RationalMatrix& gram) {
  const RationalMatrix one = RationalMatrix::identity(gram.rows());
  StructureRelations r;
  r.i_squared = i * i == -one;
  r.s_squared = s * s == one;
  r.t_squared = t * t == one;
  r.is_t = i * s == t;
  r.si_minus_t = s * i == -t;
  r.g_i = i.transpose() * gram * i == gram;
  r.g_s = s.transpose() * gram * s == -gram;
  r.g_t = t.transpose() * gram * t == -gram;
  return r;
}

InducedStructure induced_structure(const ToricConfig& cfg, const ComplexPair& zw) {
  check_length(cfg, zw);
  InducedStructure out;
  if (!moment_map(cfg, zw).is_zero()) return out;

  const std::size_t dim = 4 * cfg.d;
  const FlatStructure flat = flat_structure(cfg.d);
  const BVector xi = from_complex_pair(zw);
  // Fundamental field of e_k: slot k of i * xi.
  std::vector<RationalVector> slot_fields;
  for (std::size_t k = 0; k < cfg.d; ++k) {
    BVector x(cfg.d);
    x[k] = SplitQuaternion::i() * xi[k];
    slot_fields.push_back(to_real(x));
  }
  const TorusData td = build_torus_data(cfg);
  std::vector<RationalVector> orbit;
  for (const auto& zeta : td.kernel_basis) {
    RationalVector x(dim);
    for (std::size_t k = 0; k < cfg.d; ++k) x = add(x, scale(zeta[k], slot_fields[k]));
    orbit.push_back(std::move(x));
  }
  out.orbit_dimension = orbit.size();

  const std::size_t m = orbit.size();
  RationalMatrix orbit_gram(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) orbit_gram(a, b) = dot(orbit[a], flat.gram * orbit[b]);

  RationalMatrix dmu(3 * m, dim), constraints(4 * m, dim);
  const std::array<const RationalMatrix*, 4> forms{&flat.gram, &flat.omega_i, &flat.omega_s, &flat.omega_t};
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t f = 0; f < 4; ++f) {
      const RationalVector row = forms[f]->transpose() * orbit[a];
      for (std::size_t c = 0; c < dim; ++c) {
        constraints(f * m + a, c) = row[c];
        if (f > 0) dmu((f - 1) * m + a, c) = row[c];
      }
    }
  out.moment_rank = m == 0 ? 0 : rank(dmu);
  if (m > 0 && sgn(determinant(orbit_gram)) == 0) {
    out.status = InducedStatus::DegenerateAtPoint;
    return out;
  }

  out.basis = m == 0 ? RationalMatrix::identity(dim) : RationalMatrix::from_columns(kernel_basis(constraints), dim);
  const RationalMatrix& b = out.basis;
  const RationalMatrix bt = b.transpose();
  out.gram = bt * flat.gram * b;
  out.omega_i = bt * flat.omega_i * b;
  out.omega_s = bt * flat.omega_s * b;
  out.omega_t = bt * flat.omega_t * b;
  const auto ginv = inverse(out.gram);
  if (!ginv) {
    out.status = InducedStatus::DegenerateAtPoint;
    return out;
  }
  out.i_endo = *ginv * out.omega_i.transpose();
  out.s_endo = *ginv * out.omega_s.transpose();
  out.t_endo = *ginv * out.omega_t.transpose();

  const auto btb_inv = inverse(bt * b);
  out.restriction_matches = true;
  const std::array<std::pair<const RationalMatrix*, const RationalMatrix*>, 3> pairs{
      {{&flat.i_endo, &out.i_endo}, {&flat.s_endo, &out.s_endo}, {&flat.t_endo, &out.t_endo}}};
  for (const auto& [ambient, recovered] : pairs) {
    const RationalMatrix image = *ambient * b;
    const RationalMatrix restricted = *btb_inv * bt * image;
    if (!(b * restricted == image) || !(restricted == *recovered)) out.restriction_matches = false;
  }
  out.relations = check_relations(out.i_endo, out.s_endo, out.t_endo, out.gram);
  out.status = InducedStatus::Ok;
  return out;
}

}  // namespace hsq
