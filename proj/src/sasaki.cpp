#include "hsq/sasaki.hpp"

#include "hsq/flat_structure.hpp"
#include "hsq/quadratic_surd.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

namespace hsq {

namespace {

BVector random_vector(std::size_t slots, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  BVector v(slots);
  for (auto& q : v) q = SplitQuaternion(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                                         Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
  return v;
}

void canonicalize(BVector& v) {
  for (auto& q : v) {
    Rational x = q.x(), y = q.y(), u = q.u(), w = q.v();
    x.canonicalize();
    y.canonicalize();
    u.canonicalize();
    w.canonicalize();
    q = SplitQuaternion(x, y, u, w);
  }
}

BVector axpy(const Rational& a, const BVector& x, const BVector& y) {
  BVector out = y;
  for (std::size_t k = 0; k < y.size(); ++k) out[k] = out[k] + a * x[k];
  return out;
}

BVector tangential(const BVector& xi, const BVector& z) { return axpy(-inner(z, xi) / inner(xi, xi), xi, z); }

bool equal(const BVector& a, const BVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

BVector negate(const BVector& v) {
  BVector out = v;
  for (auto& q : out) q = -q;
  return out;
}

std::optional<Rational> scale_between(const SplitQuaternion& value, const SplitQuaternion& unit) {
  const Rational n = unit.norm2();
  if (sgn(n) == 0) return std::nullopt;
  const Rational k = inner(unit, value) / n;
  if (!(k * unit == value)) return std::nullopt;
  return k;
}

std::optional<Rational> bracket_scale(const std::array<SplitQuaternion, 3>& q) {
  auto comm = [](const SplitQuaternion& a, const SplitQuaternion& b) { return a * b - b * a; };
  const auto k12 = scale_between(comm(q[0], q[1]), -q[2]);
  const auto k23 = scale_between(comm(q[1], q[2]), q[0]);
  const auto k31 = scale_between(comm(q[2], q[0]), -q[1]);
  if (!k12 || !k23 || !k31 || *k12 != *k23 || *k23 != *k31 || sgn(*k12) <= 0) return std::nullopt;
  return *k12;
}

std::vector<SasakiAssignment> search_assignments() {
  const std::array<SplitQuaternion, 3> units{SplitQuaternion::i(), SplitQuaternion::s(), SplitQuaternion::t()};
  std::array<std::size_t, 3> perm{0, 1, 2};
  std::vector<SasakiAssignment> out;
  do {
    for (int signs = 0; signs < 8; ++signs) {
      std::array<SplitQuaternion, 3> q;
      for (std::size_t a = 0; a < 3; ++a) q[a] = (signs >> a) & 1 ? -units[perm[a]] : units[perm[a]];
      if (q[0].norm2() != 1 || q[1].norm2() != -1 || q[2].norm2() != -1) continue;
      if (auto k = bracket_scale(q)) out.push_back({q, *k});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<BVector> pseudo_sphere_points(std::size_t n, std::size_t count, std::uint64_t seed) {
  const std::size_t slots = n + 1;
  BVector base(slots);
  base[0] = SplitQuaternion::one();
  std::vector<BVector> out{base};
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    const BVector d = random_vector(slots, rng);
    const Rational q = inner(d, d);
    if (sgn(q) == 0) continue;
    BVector p = axpy(-2 * inner(base, d) / q, d, base);
    canonicalize(p);
    if (inner(p, p) != 1) throw std::logic_error("pseudo-sphere point construction failed");
    out.push_back(std::move(p));
  }
  out.resize(count);
  return out;
}

std::vector<BVector> positive_norm_points(std::size_t n, std::size_t count, std::uint64_t seed) {
  const std::size_t slots = n + 1;
  std::vector<BVector> out;
  for (int r : {1, 2}) {
    BVector p(slots);
    p[0] = SplitQuaternion(r);
    out.push_back(p);
  }
  std::mt19937_64 rng(seed);
  while (out.size() < count) {
    BVector p = random_vector(slots, rng);
    canonicalize(p);
    if (sgn(inner(p, p)) > 0) out.push_back(std::move(p));
  }
  out.resize(count);
  return out;
}

std::string to_string(const SasakiAssignment& a) {
  auto name = [](const SplitQuaternion& q) -> std::string {
    if (q == SplitQuaternion::i()) return "i";
    if (q == -SplitQuaternion::i()) return "-i";
    if (q == SplitQuaternion::s()) return "s";
    if (q == -SplitQuaternion::s()) return "-s";
    if (q == SplitQuaternion::t()) return "t";
    if (q == -SplitQuaternion::t()) return "-t";
    return "?";
  };
  return "(" + name(a.q[0]) + ", " + name(a.q[1]) + ", " + name(a.q[2]) + "), kappa = " + hsq::to_string(a.kappa);
}

BVector phi(const BVector& xi, const SplitQuaternion& q, const BVector& y) {
  return tangential(xi, right_multiply(y, q));
}

SasakiReport sasaki_check(std::size_t n, const std::vector<BVector>& points) {
  SasakiReport rep;
  rep.n = n;
  rep.valid = search_assignments();
  if (rep.valid.empty()) throw NoConsistentAssignment("no signed permutation of (i, s, t) satisfies the length and bracket relations");
  rep.chosen = rep.valid.front();
  const auto& q = rep.chosen.q;
  const std::size_t slots = n + 1;
  const RationalMatrix gram = gram_matrix(slots);
  for (const auto& qa : q) {
    const RationalMatrix r = right_multiplication_matrix(qa, slots);
    if (!(r.transpose() * gram + gram * r).is_zero()) rep.killing = false;
  }
  const std::array<Rational, 3> expected{1, -1, -1};
  for (const auto& xi : points) {
    if (xi.size() != slots || inner(xi, xi) != 1) throw std::invalid_argument("sasaki_check: point is not on the pseudo-sphere");
    ++rep.points_checked;
    std::array<BVector, 3> f;
    for (std::size_t a = 0; a < 3; ++a) f[a] = right_multiply(xi, q[a]);
    for (std::size_t a = 0; a < 3; ++a) {
      if (sgn(inner(xi, f[a])) != 0) rep.tangent = false;
      if (inner(f[a], f[a]) != expected[a]) rep.lengths = false;
      for (std::size_t b = a + 1; b < 3; ++b)
        if (sgn(inner(f[a], f[b])) != 0) rep.orthogonal = false;
    }
    // Commutators of the linear fields: [X_p, X_q](xi) = xi (pq - qp).
    auto comm = [&](std::size_t a, std::size_t b) { return right_multiply(xi, q[a] * q[b] - q[b] * q[a]); };
    const Rational& k = rep.chosen.kappa;
    auto scaled = [&](const Rational& s, const BVector& v) { return axpy(s, v, BVector(slots)); };
    if (!equal(comm(0, 1), scaled(-k, f[2])) || !equal(comm(1, 2), scaled(k, f[0])) || !equal(comm(2, 0), scaled(-k, f[1])))
      rep.brackets = false;
    auto ph = [&](std::size_t a, std::size_t b) { return phi(xi, q[a], f[b]); };
    if (!equal(ph(0, 1), f[2]) || !equal(ph(1, 0), negate(f[2])) || !equal(ph(1, 2), negate(f[0])) ||
        !equal(ph(2, 1), f[0]) || !equal(ph(2, 0), f[1]) || !equal(ph(0, 2), negate(f[1])))
      rep.phi_relations = false;
  }
  return rep;
}

namespace {

/// Column j is the image of the j-th real basis vector under Y -> Phi(Y) - g(xi^a, Y) psi + (1/r) dr(Y) xi^a,
/// with psi = factor * p; factor = 1 gives the Euler field r d/dr.
RationalMatrix cone_endomorphism(const BVector& p, const SplitQuaternion& q, const Rational& psi_factor) {
  const std::size_t dim = 4 * p.size();
  const Rational r2 = inner(p, p);
  const BVector pq = right_multiply(p, q);
  RationalMatrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    RationalVector e(dim);
    e[j] = 1;
    const BVector y = from_real(e);
    const BVector y_tan = tangential(p, y);
    BVector image = tangential(p, right_multiply(y_tan, q));
    image = axpy(-inner(pq, y) / r2 * psi_factor, p, image);
    image = axpy(inner(p, y) / r2, pq, image);
    const RationalVector col = to_real(image);
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = col[i];
  }
  return m;
}

}  // namespace

ConeCompareReport cone_compare(std::size_t n, const std::vector<BVector>& points) {
  ConeCompareReport rep;
  const std::size_t slots = n + 1;
  const FlatStructure flat = flat_structure(slots);
  const std::array<const RationalMatrix*, 3> target{&flat.i_endo, &flat.s_endo, &flat.t_endo};
  for (const auto& p : points)
    if (p.size() != slots || sgn(inner(p, p)) <= 0) throw std::invalid_argument("cone_compare: points need positive norm");

  for (const auto& cand : search_assignments()) {
    bool ok = true;
    for (const auto& p : points) {
      for (std::size_t a = 0; a < 3 && ok; ++a) ok = cone_endomorphism(p, cand.q[a], 1) == *target[a];
      if (!ok) break;
    }
    if (ok) {
      rep.assignment = cand;
      rep.euler_field_agrees = true;
      break;
    }
  }
  rep.points_checked = points.size();
  if (!rep.euler_field_agrees) return rep;

  // psi = d/dr = p / r: exact where r = 1, numeric elsewhere.
  rep.unit_radial_agrees_at_r1 = true;
  for (const auto& p : points) {
    const Rational r2 = inner(p, p);
    Rational r;
    const bool rational_r = rational_sqrt(r2, r);
    if (r2 == 1) {
      for (std::size_t a = 0; a < 3; ++a)
        if (!(cone_endomorphism(p, rep.assignment.q[a], 1) == *target[a])) rep.unit_radial_agrees_at_r1 = false;
      continue;
    }
    ++rep.unit_radial_points;
    const double inv_r = rational_r ? 1.0 / to_double(r) : 1.0 / std::sqrt(to_double(r2));
    for (std::size_t a = 0; a < 3; ++a) {
      // The two variants differ by g(xi^a, Y) (1 - 1/r) p.
      const RationalMatrix diff = cone_endomorphism(p, rep.assignment.q[a], 0) - cone_endomorphism(p, rep.assignment.q[a], 1);
      for (std::size_t i = 0; i < diff.rows(); ++i)
        for (std::size_t j = 0; j < diff.cols(); ++j)
          rep.unit_radial_max_mismatch = std::max(rep.unit_radial_max_mismatch, std::abs(to_double(diff(i, j)) * (1.0 - inv_r)));
    }
  }
  return rep;
}

}  // namespace hsq
