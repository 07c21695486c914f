#include "hsq/toric_config.hpp"

namespace hsq {

void ToricConfig::validate() const {
  if (n == 0) throw ConfigError("n must be positive");
  if (d < n) throw ConfigError("d >= n is required");
  if (u.rows() != n || u.cols() != d) throw ConfigError("u must hold d vectors of length n");
  if (lambda1.size() != d) throw ConfigError("lambda1 must have d entries");
  if (lambda2.size() != d) throw ConfigError("lambda2 must have d entries");
  if (lambda3.size() != d) throw ConfigError("lambda3 must have d entries");
  if (rank(u.to_rational()) != n) throw ConfigError("the vectors u_k must span R^n");
}

ToricConfig example_family(std::size_t n, const Rational& lambda) {
  if (n == 0) throw ConfigError("example_family: n must be positive");
  if (sgn(lambda) <= 0) throw ConfigError("example_family: lambda must be positive");
  ToricConfig cfg;
  cfg.n = n;
  cfg.d = n + 1;
  cfg.u = IntegerMatrix(n, n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    cfg.u(k, k) = 1;
    cfg.u(k, n) = 1;
  }
  cfg.lambda1.assign(n + 1, 0);
  cfg.lambda1[n] = -lambda;
  cfg.lambda2.assign(n + 1, 0);
  cfg.lambda3.assign(n + 1, 0);
  return cfg;
}

TorusData build_torus_data(const ToricConfig& cfg) {
  cfg.validate();
  TorusData td;
  const KernelBases kb = integral_kernel_basis(cfg.u);
  td.kernel_basis = kb.rational;
  td.lattice_basis = kb.integral;
  // P = I - U^T (U U^T)^{-1} U; U has full row rank after validation.
  const RationalMatrix u = cfg.u.to_rational();
  const auto inv = inverse(u * u.transpose());
  td.projector = RationalMatrix::identity(cfg.d) - u.transpose() * (*inv) * u;
  for (std::size_t k = 0; k < cfg.d; ++k) td.alpha.push_back(td.projector.column(k));
  td.c1 = td.projector * cfg.lambda1;
  td.c2 = td.projector * cfg.lambda2;
  td.c3 = td.projector * cfg.lambda3;
  return td;
}

ConeValues cone_values(const ToricConfig& cfg, const ConePoint& p) {
  if (p.a.size() != cfg.n || p.b.size() != cfg.n) throw std::invalid_argument("cone point has wrong dimension");
  ConeValues v;
  for (std::size_t k = 0; k < cfg.d; ++k) {
    Rational ak = -cfg.lambda1[k];
    ComplexRational bk = -cfg.lambda_c(k);
    for (std::size_t i = 0; i < cfg.n; ++i) {
      const Rational uik(cfg.u(i, k));
      ak += p.a[i] * uik;
      bk += uik * p.b[i];
    }
    v.a.push_back(std::move(ak));
    v.b.push_back(std::move(bk));
  }
  return v;
}

Incidence incidence(const ToricConfig& cfg, const ConePoint& p) {
  const ConeValues v = cone_values(cfg, p);
  Incidence inc;
  inc.in_k = true;
  for (std::size_t k = 0; k < cfg.d; ++k) {
    const Rational ak2 = v.a[k] * v.a[k];
    const Rational bk2 = v.b[k].norm2();
    if (sgn(v.a[k]) < 0 || ak2 < bk2) inc.in_k = false;
    if (sgn(v.a[k]) >= 0 && ak2 == bk2) inc.l.push_back(k);
    if (sgn(v.a[k]) == 0 && v.b[k].is_zero()) inc.j.push_back(k);
  }
  return inc;
}

SocSystem cone_system(const ToricConfig& cfg) {
  const std::size_t n = cfg.n;
  SocSystem sys;
  sys.num_vars = 3 * n;
  for (std::size_t k = 0; k < cfg.d; ++k) {
    ConeConstraint c{{RationalVector(3 * n), -cfg.lambda1[k]},
                     {RationalVector(3 * n), -cfg.lambda2[k]},
                     {RationalVector(3 * n), -cfg.lambda3[k]}};
    for (std::size_t i = 0; i < n; ++i) {
      const Rational uik(cfg.u(i, k));
      c.apex.coeffs[i] = uik;
      c.first.coeffs[n + i] = uik;
      c.second.coeffs[2 * n + i] = uik;
    }
    sys.cones.push_back(std::move(c));
  }
  return sys;
}

RationalVector to_variables(const ConePoint& p) {
  const std::size_t n = p.a.size();
  RationalVector x(3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = p.a[i];
    x[n + i] = p.b[i].re;
    x[2 * n + i] = p.b[i].im;
  }
  return x;
}

ConePoint from_variables(const RationalVector& x, std::size_t n) {
  if (x.size() != 3 * n) throw std::invalid_argument("variable vector has wrong dimension");
  ConePoint p;
  for (std::size_t i = 0; i < n; ++i) {
    p.a.push_back(x[i]);
    p.b.emplace_back(x[n + i], x[2 * n + i]);
  }
  return p;
}

void add_vertex_equalities(SocSystem& sys, const ToricConfig& cfg, const std::vector<std::size_t>& indices) {
  const SocSystem full = cone_system(cfg);
  for (auto k : indices) {
    const ConeConstraint& c = full.cones.at(k);
    for (const AffineForm* f : {&c.apex, &c.first, &c.second}) sys.linear.push_back({f->coeffs, Relation::Equal, -f->constant});
  }
}

}  // namespace hsq
