#pragma once

#include "hsq/cone_analysis.hpp"
#include "hsq/moment_map.hpp"
#include "hsq/split_quaternion.hpp"
#include "hsq/toric_config.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace hsq::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long range = 9, long max_den = 6) {
  std::uniform_int_distribution<long> num(-range, range), den(1, max_den);
  return make_rational(num(rng), den(rng));
}

inline SplitQuaternion random_quaternion(Rng& rng) {
  return {random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
}

inline RationalVector random_vector(Rng& rng, std::size_t size, long range = 9) {
  RationalVector v;
  for (std::size_t k = 0; k < size; ++k) v.push_back(random_rational(rng, range));
  return v;
}

inline RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng);
  return m;
}

inline ComplexPair random_pair(Rng& rng, std::size_t d, long range = 4) {
  ComplexPair zw{ComplexVector(d), ComplexVector(d)};
  for (std::size_t k = 0; k < d; ++k) {
    zw.z[k] = {random_rational(rng, range, 3), random_rational(rng, range, 3)};
    zw.w[k] = {random_rational(rng, range, 3), random_rational(rng, range, 3)};
  }
  return zw;
}

inline IntegerMatrix random_full_rank(Rng& rng, std::size_t n, std::size_t d) {
  std::uniform_int_distribution<long> entry(-2, 2);
  while (true) {
    IntegerMatrix u(n, d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < d; ++k) u(i, k) = entry(rng);
    if (rank(u.to_rational()) == n) return u;
  }
}

// (a_k, b_k) values on or inside the cone a >= |b|, using Pythagorean triples for wall points.
inline std::pair<Rational, ComplexRational> cone_value(Rng& rng, bool on_wall) {
  static const long triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {0, 1, 1}, {1, 0, 1}, {0, 0, 0}};
  std::uniform_int_distribution<int> pick(0, 5), sign(0, 1), scale(1, 3);
  const auto& t = triples[pick(rng)];
  const Rational f = make_rational(scale(rng), 2);
  const ComplexRational b{f * (sign(rng) ? t[0] : -t[0]), f * (sign(rng) ? t[1] : -t[1])};
  Rational a = f * t[2];
  if (!on_wall) a += make_rational(scale(rng), 3);
  return {a, b};
}

// A configuration together with a point p0 of K where the walls in `walls` pass through p0.
struct PlantedConfig {
  ToricConfig cfg;
  ConePoint point;
};

inline PlantedConfig planted_config(Rng& rng, std::size_t n, std::size_t d, double wall_probability = 0.3) {
  PlantedConfig out;
  ToricConfig& cfg = out.cfg;
  cfg.d = d;
  cfg.n = n;
  cfg.u = random_full_rank(rng, n, d);
  out.point.a = random_vector(rng, n, 4);
  for (std::size_t i = 0; i < n; ++i) out.point.b.emplace_back(random_rational(rng, 4), random_rational(rng, 4));
  std::bernoulli_distribution wall(wall_probability);
  cfg.lambda1.resize(d);
  cfg.lambda2.resize(d);
  cfg.lambda3.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto [alpha, beta] = cone_value(rng, wall(rng));
    Rational ua = 0;
    ComplexRational ub;
    for (std::size_t i = 0; i < n; ++i) {
      ua += Rational(cfg.u(i, k)) * out.point.a[i];
      ub += Rational(cfg.u(i, k)) * out.point.b[i];
    }
    cfg.lambda1[k] = ua - alpha;
    cfg.lambda2[k] = ub.re - beta.re;
    cfg.lambda3[k] = ub.im - beta.im;
  }
  return out;
}

// Random points of K near p, found by rejection.
inline std::vector<ConePoint> points_near(Rng& rng, const ToricConfig& cfg, const ConePoint& p, std::size_t count) {
  std::vector<ConePoint> out{p};
  for (std::size_t tries = 0; out.size() < count && tries < 200 * count; ++tries) {
    ConePoint q = p;
    for (auto& x : q.a) x += random_rational(rng, 3, 4);
    for (auto& x : q.b) x += ComplexRational(random_rational(rng, 1, 4), random_rational(rng, 1, 4));
    if (incidence(cfg, q).in_k) out.push_back(q);
  }
  return out;
}

}  // namespace hsq::testing
