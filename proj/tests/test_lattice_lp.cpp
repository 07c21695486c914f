#include "hsq/cone_feasibility.hpp"
#include "hsq/lattice.hpp"
#include "hsq/linear_program.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace hsq;
using namespace hsq::testing;

namespace {

IntegerMatrix random_integer(Rng& rng, std::size_t rows, std::size_t cols, long range = 4) {
  std::uniform_int_distribution<long> entry(-range, range);
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  return m;
}

// gcd of the maximal minors of an n x k matrix (k <= n), by brute force over row subsets.
Integer gcd_of_maximal_minors(const IntegerMatrix& m) {
  Integer g = 0;
  for (const auto& rows : subsets_of_size(m.rows(), m.cols())) {
    IntegerMatrix sub(m.cols(), m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) sub(r, c) = m(rows[r], c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(integer_determinant(sub))).get_mpz_t());
  }
  return g;
}

}  // namespace

TEST(Lattice, SmithNormalFormIsAValidDecomposition) {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    const IntegerMatrix m = random_integer(rng, dim(rng), dim(rng));
    const SmithDecomposition s = smith_normal_form(m);
    EXPECT_EQ(abs(integer_determinant(s.left)), 1);
    EXPECT_EQ(abs(integer_determinant(s.right)), 1);
    const IntegerMatrix diag = s.left * m * s.right;
    for (std::size_t r = 0; r < diag.rows(); ++r)
      for (std::size_t c = 0; c < diag.cols(); ++c) {
        if (r == c) {
          ASSERT_EQ(diag(r, c), s.factors[r]);
        } else {
          ASSERT_EQ(diag(r, c), 0);
        }
      }
    for (std::size_t k = 0; k + 1 < s.factors.size(); ++k) {
      if (s.factors[k + 1] == 0) continue;
      EXPECT_GT(s.factors[k], 0);
      EXPECT_TRUE(mpz_divisible_p(s.factors[k + 1].get_mpz_t(), s.factors[k].get_mpz_t()));
    }
    EXPECT_EQ(s.rank, rank(m.to_rational()));
  }
}

TEST(Lattice, KnownSmithForm) {
  const SmithDecomposition s = smith_normal_form(IntegerMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  EXPECT_EQ(s.factors, (IntegerVector{2, 6, 12}));
}

TEST(Lattice, LatticeBasisExtensionMatchesMinorOracle) {
  Rng rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<std::size_t> rows(1, 4);
    const std::size_t n = rows(rng);
    std::uniform_int_distribution<std::size_t> cols(1, n);
    const IntegerMatrix m = random_integer(rng, n, cols(rng), 2);
    EXPECT_EQ(extends_to_lattice_basis(m), gcd_of_maximal_minors(m) == 1);
  }
  EXPECT_TRUE(extends_to_lattice_basis(IntegerMatrix{{1}, {0}}));
  EXPECT_FALSE(extends_to_lattice_basis(IntegerMatrix{{2}, {0}}));
  EXPECT_FALSE(extends_to_lattice_basis(IntegerMatrix{{1, 1}, {1, -1}}));
}

TEST(Lattice, IntegralKernelIsSaturated) {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const IntegerMatrix u = random_integer(rng, 2, 4, 3);
    const KernelBases k = integral_kernel_basis(u);
    EXPECT_EQ(k.rational.size(), 4 - rank(u.to_rational()));
    ASSERT_EQ(k.integral.size(), k.rational.size());
    if (k.integral.empty()) continue;
    IntegerMatrix basis(4, k.integral.size());
    for (std::size_t c = 0; c < k.integral.size(); ++c) {
      RationalVector v;
      for (std::size_t r = 0; r < 4; ++r) {
        basis(r, c) = k.integral[c][r];
        v.push_back(Rational(k.integral[c][r]));
      }
      EXPECT_TRUE(is_zero(u.to_rational() * v));
    }
    // A Z-basis of ker ∩ Z^4 is a primitive system.
    EXPECT_TRUE(extends_to_lattice_basis(basis));
  }
}

TEST(LinearProgram, OptimumMatchesVertexEnumeration) {
  Rng rng(44);
  std::size_t optimal = 0;
  for (int trial = 0; trial < 200; ++trial) {
    LinearProgram lp;
    lp.num_vars = 2;
    for (int c = 0; c < 4; ++c) lp.add(random_vector(rng, 2, 4), Relation::LessEqual, random_rational(rng, 6) + 3);
    lp.add({1, 0}, Relation::LessEqual, 5);
    lp.add({-1, 0}, Relation::LessEqual, 5);
    lp.add({0, 1}, Relation::LessEqual, 5);
    lp.add({0, -1}, Relation::LessEqual, 5);
    lp.objective = random_vector(rng, 2, 4);
    const LpResult r = solve_lp(lp);
    // Oracle: the best feasible intersection point of two constraint lines.
    std::optional<Rational> best;
    for (std::size_t i = 0; i < lp.constraints.size(); ++i)
      for (std::size_t j = i + 1; j < lp.constraints.size(); ++j) {
        const RationalMatrix m{{lp.constraints[i].coeffs[0], lp.constraints[i].coeffs[1]},
                               {lp.constraints[j].coeffs[0], lp.constraints[j].coeffs[1]}};
        const auto inv = inverse(m);
        if (!inv) continue;
        const RationalVector x = *inv * RationalVector{lp.constraints[i].rhs, lp.constraints[j].rhs};
        if (!satisfies(lp, x)) continue;
        const Rational value = dot(*lp.objective, x);
        if (!best || value > *best) best = value;
      }
    if (!best) {
      ASSERT_EQ(r.status, LpStatus::Infeasible);
      ASSERT_TRUE(r.certificate.has_value());
      EXPECT_TRUE(verify_certificate(lp, *r.certificate));
      continue;
    }
    ASSERT_EQ(r.status, LpStatus::Optimal);
    EXPECT_TRUE(satisfies(lp, r.point));
    EXPECT_EQ(r.objective_value, *best);
    ++optimal;
  }
  EXPECT_GT(optimal, 100u);
}

TEST(LinearProgram, InfeasibleSystemsCarryFarkasCertificates) {
  Rng rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    LinearProgram lp;
    lp.num_vars = 3;
    const RationalVector a = random_vector(rng, 3);
    if (is_zero(a)) continue;
    const Rational b = random_rational(rng);
    lp.add(a, Relation::GreaterEqual, b + 1);
    lp.add(a, Relation::LessEqual, b);
    lp.add(random_vector(rng, 3), Relation::Equal, random_rational(rng));
    const LpResult r = solve_lp(lp);
    ASSERT_EQ(r.status, LpStatus::Infeasible);
    ASSERT_TRUE(r.certificate.has_value());
    EXPECT_TRUE(verify_certificate(lp, *r.certificate));
  }
}

TEST(LinearProgram, UnboundedRayImproves) {
  LinearProgram lp;
  lp.num_vars = 2;
  lp.add({1, -1}, Relation::LessEqual, 1);
  lp.objective = RationalVector{1, 0};
  lp.nonnegative = {true, true};
  const LpResult r = solve_lp(lp);
  ASSERT_EQ(r.status, LpStatus::Unbounded);
  EXPECT_GT(dot(*lp.objective, r.ray), 0);
  EXPECT_TRUE(satisfies(lp, add(r.point, scale(100, r.ray))));
}

TEST(ConeFeasibility, SweepDirectionsAreRationalUnitVectors) {
  const auto dirs = sweep_directions(64);
  ASSERT_EQ(dirs.size(), 64u);
  for (const auto& [c, s] : dirs) EXPECT_EQ(c * c + s * s, 1);
}

TEST(ConeFeasibility, FeasibleWitnessesVerifyExactly) {
  Rng rng(46);
  std::size_t feasible = 0;
  for (int trial = 0; trial < 60; ++trial) {
    SocSystem sys;
    sys.num_vars = 2;
    for (int c = 0; c < 2; ++c) {
      ConeConstraint cone;
      cone.apex = {{0, 0}, random_rational(rng, 4) + 5};
      cone.first = {{1, 0}, random_rational(rng, 4)};
      cone.second = {{0, 1}, random_rational(rng, 4)};
      sys.cones.push_back(cone);
    }
    const FeasibilityVerdict v = soc_feasible(sys);
    if (v.status == Feasibility::Feasible) {
      ++feasible;
      EXPECT_TRUE(sys.satisfied_by(v.witness));
    }
  }
  EXPECT_GT(feasible, 30u);
}

TEST(ConeFeasibility, DisjointDisksAreInfeasible) {
  SocSystem sys;
  sys.num_vars = 2;
  sys.cones.push_back({{{0, 0}, 1}, {{1, 0}, 0}, {{0, 1}, 0}});
  sys.cones.push_back({{{0, 0}, 1}, {{1, 0}, -5}, {{0, 1}, 0}});
  const FeasibilityVerdict v = soc_feasible(sys);
  EXPECT_EQ(v.status, Feasibility::Infeasible);
}

TEST(ConeFeasibility, TangentDisksMeetOnTheBoundary) {
  SocSystem sys;
  sys.num_vars = 2;
  sys.cones.push_back({{{0, 0}, 1}, {{1, 0}, 0}, {{0, 1}, 0}});
  sys.cones.push_back({{{0, 0}, 1}, {{1, 0}, -2}, {{0, 1}, 0}});
  const FeasibilityVerdict v = soc_feasible(sys, SocOptions{{4, 8}, true, false});
  ASSERT_NE(v.status, Feasibility::Infeasible);
  const FeasibilityVerdict wall = boundary_meet(sys, 0);
  ASSERT_EQ(wall.status, Feasibility::Feasible);
  EXPECT_TRUE(sys.cones[0].on_boundary(wall.witness));
  EXPECT_TRUE(sys.satisfied_by(wall.witness));
}

TEST(ConeFeasibility, PositiveSpanningMatchesSignPatterns) {
  EXPECT_TRUE(positively_spanning(IntegerMatrix{{1, -1}}));
  EXPECT_FALSE(positively_spanning(IntegerMatrix{{1, 1}}));
  EXPECT_TRUE(positively_spanning(IntegerMatrix{{1, 0, -1}, {0, 1, -1}}));
  EXPECT_FALSE(positively_spanning(IntegerMatrix{{1, 0, 1}, {0, 1, 1}}));
}

TEST(ConeFeasibility, OppositeConesMeetAtRationalPoints) {
  // The walls of a_1 >= |b_1| and a_2 >= |b_2| for u = (1, -1) meet along an ellipse.
  Rng rng(47);
  std::size_t met = 0;
  for (int trial = 0; trial < 60; ++trial) {
    ToricConfig cfg;
    cfg.n = 1;
    cfg.d = 2;
    cfg.u = IntegerMatrix{{1, -1}};
    cfg.lambda1 = random_vector(rng, 2);
    cfg.lambda2 = random_vector(rng, 2);
    cfg.lambda3 = random_vector(rng, 2);
    const SocSystem sys = cone_system(cfg);
    if (soc_feasible(sys).status != Feasibility::Feasible) continue;
    const FeasibilityVerdict v = joint_boundary_meet(sys, {0, 1}, BoundaryOptions{64, {}});
    if (v.status != Feasibility::Feasible) continue;
    EXPECT_TRUE(sys.cones[0].on_boundary(v.witness));
    EXPECT_TRUE(sys.cones[1].on_boundary(v.witness));
    ++met;
  }
  EXPECT_GT(met, 3u);
}
