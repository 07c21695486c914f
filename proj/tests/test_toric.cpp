#include "hsq/moment_map.hpp"
#include "hsq/toric_config.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <tuple>

using namespace hsq;
using namespace hsq::testing;

namespace {

ToricConfig model_case() {
  ToricConfig cfg;
  cfg.d = cfg.n = 1;
  cfg.u = IntegerMatrix{{1}};
  cfg.lambda1 = cfg.lambda2 = cfg.lambda3 = {0};
  return cfg;
}

std::size_t expected_orbits(const ToricConfig& cfg, const ConePoint& p) {
  return std::size_t{1} << (cfg.d - incidence(cfg, p).l.size());
}

}  // namespace

TEST(ToricConfig, ValidationNamesTheViolation) {
  ToricConfig cfg = model_case();
  EXPECT_NO_THROW(cfg.validate());
  cfg.lambda1 = {};
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = model_case();
  cfg.u = IntegerMatrix{{0}};
  EXPECT_THROW(cfg.validate(), ConfigError);
  EXPECT_THROW(example_family(0, 1), ConfigError);
  EXPECT_THROW(example_family(1, 0), ConfigError);
}

TEST(ToricConfig, ExampleFamilyShape) {
  const ToricConfig cfg = example_family(2, 3);
  EXPECT_EQ(cfg.d, 3u);
  EXPECT_EQ(cfg.u, (IntegerMatrix{{1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(cfg.lambda1, (RationalVector{0, 0, -3}));
}

TEST(ToricConfig, TorusDataSpansTheKernel) {
  Rng rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const PlantedConfig pc = planted_config(rng, 2, 4);
    const TorusData t = build_torus_data(pc.cfg);
    EXPECT_EQ(t.dimension(), 2u);
    const RationalMatrix u = pc.cfg.u.to_rational();
    for (const auto& v : t.kernel_basis) EXPECT_TRUE(is_zero(u * v));
    EXPECT_EQ(t.projector * t.projector, t.projector);
    EXPECT_EQ(t.projector.transpose(), t.projector);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_TRUE(is_zero(u * t.alpha[k]));
  }
}

TEST(ToricConfig, VariablesRoundTrip) {
  Rng rng(52);
  const PlantedConfig pc = planted_config(rng, 2, 3);
  EXPECT_EQ(from_variables(to_variables(pc.point), 2), pc.point);
  EXPECT_TRUE(cone_system(pc.cfg).satisfied_by(to_variables(pc.point)));
  EXPECT_TRUE(incidence(pc.cfg, pc.point).in_k);
}

TEST(MomentMap, ZeroExactlyWhenLevelEquationsAreSolvable) {
  Rng rng(53);
  std::size_t zeros = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const PlantedConfig pc = planted_config(rng, 1 + trial % 2, 2 + trial % 3);
    const ComplexPair zw = random_pair(rng, pc.cfg.d, 2);
    const bool zero = moment_map(pc.cfg, zw).is_zero();
    EXPECT_EQ(zero, level_witness(pc.cfg, zw).has_value());
    zeros += zero;
  }
  // Fiber representatives always lie on the zero level.
  for (int trial = 0; trial < 100; ++trial) {
    const PlantedConfig pc = planted_config(rng, 1, 2);
    for (const auto& orbit : fiber_enumerate(pc.cfg, pc.point)) {
      if (const auto rep = orbit.rational_representative()) {
        EXPECT_TRUE(moment_map(pc.cfg, *rep).is_zero());
        ++zeros;
      }
    }
  }
  EXPECT_GT(zeros, 0u);
}

TEST(MomentMap, TorusInvariants) {
  ComplexPair zw{{ComplexRational(1, 1)}, {ComplexRational(2, -1)}};
  const TorusInvariants inv = torus_invariants(zw);
  EXPECT_EQ(inv.half_norm_sum[0], make_rational(7, 2));
  EXPECT_EQ(inv.zbar_w[0], ComplexRational(1, -3));
}

TEST(Fibers, OrbitCountAndRoundTripOnRandomConfigs) {
  Rng rng(54);
  std::size_t with_walls = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::size_t> pick_n(1, 2);
    const std::size_t n = pick_n(rng);
    std::uniform_int_distribution<std::size_t> pick_d(n, 4);
    const PlantedConfig pc = planted_config(rng, n, pick_d(rng));
    for (const auto& p : points_near(rng, pc.cfg, pc.point, 20)) {
      const auto orbits = fiber_enumerate(pc.cfg, p);
      ASSERT_EQ(orbits.size(), expected_orbits(pc.cfg, p));
      with_walls += !incidence(pc.cfg, p).l.empty();
      std::set<std::vector<int>> signs;
      for (const auto& o : orbits) {
        const auto back = level_witness(pc.cfg, o.invariants());
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, p);
        std::vector<int> s;
        for (const auto& c : o.coords) s.push_back(c.sign);
        signs.insert(s);
      }
      EXPECT_EQ(signs.size(), orbits.size());
    }
  }
  EXPECT_GT(with_walls, 0u);
}

TEST(Fibers, RejectsPointsOutsideK) {
  const ToricConfig cfg = model_case();
  EXPECT_THROW(fiber_enumerate(cfg, {{1}, {ComplexRational(2)}}), std::invalid_argument);
}

TEST(Fibers, ModelCaseMatchesGridOracle) {
  // Orbits of T^1 on B are classified by (|z|^2, |w|^2, conj(z) w); count them over a grid
  // that is closed under (z, w) -> (conj w, conj z), which swaps the two roots.
  const ToricConfig cfg = model_case();
  std::vector<Rational> values;
  for (int k = -9; k <= 9; k += 2) values.push_back(make_rational(k, 2));
  using Key = std::tuple<Rational, Rational, Rational>;
  std::map<Key, std::set<std::tuple<Rational, Rational, Rational, Rational>>> grid;
  std::size_t samples = 0, on_wall = 0;
  for (const auto& x : values)
    for (const auto& y : values)
      for (const auto& u : values)
        for (const auto& v : values) {
          ComplexPair zw{{ComplexRational(x, y)}, {ComplexRational(u, v)}};
          const auto p = level_witness(cfg, zw);
          ASSERT_TRUE(p.has_value());
          const Incidence inc = incidence(cfg, *p);
          ASSERT_TRUE(inc.in_k);
          on_wall += !inc.l.empty();
          ++samples;
          const ComplexRational zbw = zw.z[0].conj() * zw.w[0];
          grid[{p->a[0], p->b[0].re, p->b[0].im}].insert({zw.z[0].norm2(), zw.w[0].norm2(), zbw.re, zbw.im});
        }
  EXPECT_EQ(samples, 10000u);
  EXPECT_GT(on_wall, 0u);
  for (const auto& [key, orbits] : grid) {
    const ConePoint p{{std::get<0>(key)}, {ComplexRational(std::get<1>(key), std::get<2>(key))}};
    const std::size_t expected = incidence(cfg, p).l.empty() ? 2 : 1;
    EXPECT_EQ(orbits.size(), expected);
    EXPECT_EQ(fiber_enumerate(cfg, p).size(), expected);
  }
}

TEST(Fibers, CanonicalRepresentative) {
  // a = 1/8 gives moduli 1/4 and 9/4, both rational squares.
  const ToricConfig cfg = example_family(1, 1);
  const ConePoint p{{make_rational(1, 8)}, {ComplexRational(0)}};
  const auto orbits = fiber_enumerate(cfg, p);
  ASSERT_EQ(orbits.size(), 4u);
  std::size_t rational = 0;
  for (const auto& o : orbits) {
    const auto approx = o.approximate_representative();
    ASSERT_EQ(approx.size(), 2u);
    if (const auto rep = o.rational_representative()) {
      ++rational;
      for (std::size_t k = 0; k < 2; ++k) {
        if (!rep->z[k].is_zero()) {
          EXPECT_EQ(rep->z[k].im, 0);
          EXPECT_GT(rep->z[k].re, 0);
        } else {
          EXPECT_EQ(rep->w[k].im, 0);
        }
      }
      EXPECT_EQ(*level_witness(cfg, *rep), p);
    }
  }
  EXPECT_EQ(rational, 4u);
}

TEST(InducedStructure, ExampleFamilyInteriorPoint) {
  const ToricConfig cfg = example_family(1, 1);
  const ComplexPair zw{{ComplexRational(1, 1), ComplexRational(2)}, {ComplexRational(0), ComplexRational(0)}};
  ASSERT_EQ(*level_witness(cfg, zw), (ConePoint{{1}, {ComplexRational(0)}}));
  const InducedStructure s = induced_structure(cfg, zw);
  ASSERT_EQ(s.status, InducedStatus::Ok);
  EXPECT_EQ(s.dimension(), 4u);
  EXPECT_EQ(s.orbit_dimension, 1u);
  EXPECT_EQ(s.moment_rank, 3u);
  EXPECT_TRUE(s.restriction_matches);
  EXPECT_TRUE(s.relations.all());
  const RationalMatrix id = RationalMatrix::identity(4);
  EXPECT_EQ(s.i_endo * s.i_endo, -id);
  EXPECT_EQ(s.s_endo * s.s_endo, id);
  EXPECT_EQ(s.i_endo * s.s_endo, s.t_endo);
}

TEST(InducedStructure, RandomLevelPointsOfExampleFamily) {
  // Points with w = 0 and z1 != 0 on the zero level.
  const ToricConfig cfg = example_family(1, 2);
  Rng rng(55);
  std::size_t ok = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Rational r = random_rational(rng, 3, 2);
    if (sgn(r) == 0) continue;
    // The level needs |z2|^2 - |z1|^2 = 4.
    const ComplexPair zw{{ComplexRational(r), ComplexRational(r, 2)}, {ComplexRational(0), ComplexRational(0)}};
    ASSERT_TRUE(level_witness(cfg, zw).has_value());
    const InducedStructure s = induced_structure(cfg, zw);
    ASSERT_EQ(s.status, InducedStatus::Ok);
    ++ok;
    EXPECT_TRUE(s.relations.all());
    EXPECT_TRUE(s.restriction_matches);
  }
  EXPECT_GT(ok, 0u);
}

TEST(InducedStructure, TrivialGroupAndDegeneratePoint) {
  const InducedStructure flat = induced_structure(model_case(), {{ComplexRational(1)}, {ComplexRational(0)}});
  EXPECT_EQ(flat.status, InducedStatus::Ok);
  EXPECT_EQ(flat.dimension(), 4u);

  ToricConfig cfg;
  cfg.d = 2;
  cfg.n = 1;
  cfg.u = IntegerMatrix{{1, 1}};
  cfg.lambda1 = cfg.lambda2 = cfg.lambda3 = {0, 0};
  const ComplexPair origin{{ComplexRational(0), ComplexRational(0)}, {ComplexRational(0), ComplexRational(0)}};
  EXPECT_EQ(induced_structure(cfg, origin).status, InducedStatus::DegenerateAtPoint);
  const ComplexPair off{{ComplexRational(1), ComplexRational(0)}, {ComplexRational(0), ComplexRational(0)}};
  EXPECT_EQ(induced_structure(cfg, off).status, InducedStatus::NotOnLevelSet);
}
