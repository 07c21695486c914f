#include "hsq/lie_algebra.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace hsq;
using namespace hsq::testing;

namespace {

AlternatingForm random_form(Rng& rng, std::size_t dim, std::size_t degree) {
  AlternatingForm f(dim, degree);
  std::uniform_int_distribution<std::size_t> index(0, dim - 1);
  for (int term = 0; term < 4; ++term) {
    std::vector<std::size_t> idx;
    while (idx.size() < degree) {
      const std::size_t i = index(rng);
      if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
    }
    f.add_term(idx, random_rational(rng));
  }
  return f;
}

// A random nilpotent algebra: brackets of e_i, e_j land in span(e_k, k > max(i, j)).
LieAlgebraData random_nilpotent(Rng& rng, std::size_t dim) {
  while (true) {
    LieAlgebraData l(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j)
        for (std::size_t k = j + 1; k < dim; ++k) l.set_constant(i, j, k, random_rational(rng, 2, 1));
    if (jacobi_check(l).empty()) return l;
  }
}

RationalVector unit(std::size_t dim, std::size_t k) {
  RationalVector e(dim);
  e[k] = 1;
  return e;
}

}  // namespace

TEST(LieAlgebra, FiveDimensionalBracketTable) {
  const LieAlgebraData l = five_dim_example();
  EXPECT_EQ(l.bracket(0, 1), unit(5, 2));
  EXPECT_EQ(l.bracket(2, 0), unit(5, 3));
  EXPECT_EQ(l.bracket(2, 1), unit(5, 4));
  EXPECT_EQ(l.bracket(1, 0), scale(-1, unit(5, 2)));
  EXPECT_TRUE(is_zero(l.bracket(3, 4)));
  EXPECT_TRUE(l.is_antisymmetric());
  EXPECT_FALSE(l.is_abelian());
}

TEST(LieAlgebra, JacobiAndNilpotency) {
  const LieAlgebraData l = five_dim_example();
  EXPECT_TRUE(jacobi_check(l).empty());
  EXPECT_EQ(nilpotency_step(l), std::optional<std::size_t>(3));
  EXPECT_EQ(nilpotency_step(heisenberg_algebra()), std::optional<std::size_t>(2));
  EXPECT_EQ(nilpotency_step(LieAlgebraData(3)), std::optional<std::size_t>(1));
  LieAlgebraData solvable(2);
  solvable.set_bracket(0, 1, {0, 1});
  EXPECT_FALSE(nilpotency_step(solvable).has_value());
}

TEST(LieAlgebra, JacobiViolationIsReported) {
  LieAlgebraData l(3);
  l.set_bracket(0, 1, {1, 0, 0});
  l.set_bracket(0, 2, {0, 1, 0});
  const auto v = jacobi_check(l);
  ASSERT_FALSE(v.empty());
  EXPECT_FALSE(is_zero(v.front().residue));
}

TEST(LieAlgebra, RawWritesBreakAntisymmetry) {
  LieAlgebraData l(2);
  l.set_raw(0, 1, 0, 1);
  EXPECT_FALSE(l.is_antisymmetric());
}

TEST(LieAlgebra, BracketIsBilinear) {
  Rng rng(71);
  const LieAlgebraData l = five_dim_example();
  for (int trial = 0; trial < 50; ++trial) {
    const RationalVector x = random_vector(rng, 5), y = random_vector(rng, 5), z = random_vector(rng, 5);
    const Rational c = random_rational(rng);
    EXPECT_EQ(l.bracket(add(x, scale(c, z)), y), add(l.bracket(x, y), scale(c, l.bracket(z, y))));
    EXPECT_EQ(l.bracket(x, y), scale(-1, l.bracket(y, x)));
  }
}

TEST(AlternatingForm, WedgeIsGradedCommutativeAndAssociative) {
  Rng rng(72);
  for (int trial = 0; trial < 50; ++trial) {
    const AlternatingForm a = random_form(rng, 6, 1), b = random_form(rng, 6, 2), c = random_form(rng, 6, 2);
    EXPECT_EQ(wedge(a, b), wedge(b, a));
    EXPECT_EQ(wedge(a, a), AlternatingForm(6, 2));
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
    const AlternatingForm a2 = random_form(rng, 6, 1);
    EXPECT_EQ(wedge(a, a2), Rational(-1) * wedge(a2, a));
  }
}

TEST(AlternatingForm, EvaluationUsesDeterminantConvention) {
  Rng rng(73);
  const AlternatingForm f = wedge(AlternatingForm::basis(3, 0), AlternatingForm::basis(3, 1));
  for (int trial = 0; trial < 20; ++trial) {
    const RationalVector x = random_vector(rng, 3), y = random_vector(rng, 3);
    EXPECT_EQ(f.evaluate({x, y}), x[0] * y[1] - x[1] * y[0]);
  }
  const AlternatingForm top = wedge(f, AlternatingForm::basis(3, 2));
  const RationalMatrix m = random_matrix(rng, 3, 3);
  EXPECT_EQ(top.evaluate({m.column(0), m.column(1), m.column(2)}), determinant(m));
}

TEST(AlternatingForm, MatrixRoundTripAndPrinting) {
  Rng rng(74);
  const AlternatingForm f = random_form(rng, 5, 2);
  EXPECT_EQ(AlternatingForm::from_matrix(f.to_matrix()), f);
  EXPECT_EQ(f.to_matrix().transpose(), -f.to_matrix());
  AlternatingForm g(5, 2);
  g.add_term({0, 3}, 1);
  g.add_term({4, 1}, 1);
  EXPECT_EQ(to_string(g), "E1^E4 - E2^E5");
  EXPECT_EQ(to_string(AlternatingForm(5, 2)), "0");
}

TEST(ChevalleyEilenberg, PrintedExampleResidues) {
  const LieAlgebraData l = five_dim_example();
  AlternatingForm expected(5, 2);
  expected.add_term({0, 1}, -1);
  EXPECT_EQ(ce_differential(l, AlternatingForm::basis(5, 2)), expected);

  const FourDimExampleForms forms = four_dim_example_forms();
  const auto printed = closedness_report(l, forms.printed);
  ASSERT_EQ(printed.size(), 3u);
  EXPECT_TRUE(printed[0].closed());
  EXPECT_TRUE(printed[2].closed());
  EXPECT_FALSE(printed[1].closed());
  AlternatingForm residue(5, 3);
  residue.add_term({0, 1, 2}, -2);
  EXPECT_EQ(printed[1].residue, residue);
  const auto variants = closedness_report(l, forms.variants);
  EXPECT_TRUE(variants[1].closed());
}

TEST(ChevalleyEilenberg, SquareOfDifferentialVanishes) {
  Rng rng(75);
  std::vector<LieAlgebraData> algebras{five_dim_example(), heisenberg_algebra()};
  for (int k = 0; k < 3; ++k) algebras.push_back(random_nilpotent(rng, 6));
  for (const auto& l : algebras) {
    for (std::size_t degree = 1; degree + 2 <= l.dimension(); ++degree) {
      for (int trial = 0; trial < 5; ++trial) {
        const AlternatingForm f = random_form(rng, l.dimension(), degree);
        EXPECT_TRUE(ce_differential(l, ce_differential(l, f)).is_zero());
      }
    }
  }
}

TEST(ChevalleyEilenberg, LeibnizRule) {
  Rng rng(76);
  const LieAlgebraData l = five_dim_example();
  for (int trial = 0; trial < 20; ++trial) {
    const AlternatingForm a = random_form(rng, 5, 1), b = random_form(rng, 5, 2);
    EXPECT_EQ(ce_differential(l, wedge(a, b)),
              wedge(ce_differential(l, a), b) - wedge(a, ce_differential(l, b)));
  }
}

TEST(EndoFromPair, IdentityHoldsForRandomPairs) {
  Rng rng(77);
  std::size_t solved = 0;
  for (int trial = 0; trial < 40; ++trial) {
    RationalMatrix g = random_matrix(rng, 4, 4);
    g = g + g.transpose();
    const AlternatingForm omega = random_form(rng, 4, 2);
    std::vector<RationalVector> basis;
    for (std::size_t k = 0; k < 4; ++k) basis.push_back(unit(4, k));
    const EndoResult r = endo_from_pair(g, omega, basis);
    if (determinant(g) == 0) {
      EXPECT_EQ(r.status, EndoStatus::DegenerateMetric);
      continue;
    }
    ASSERT_EQ(r.status, EndoStatus::Ok);
    EXPECT_TRUE(r.identity_holds);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        ASSERT_EQ(omega.evaluate({unit(4, i), unit(4, j)}), dot(g * (r.endo * unit(4, i)), unit(4, j)));
    ++solved;
  }
  EXPECT_GT(solved, 30u);
}

TEST(EndoFromPair, PrintedFourDimensionalData) {
  const FourDimExampleForms forms = four_dim_example_forms();
  const std::vector<RationalVector> basis{unit(5, 0), unit(5, 1), unit(5, 3), unit(5, 4)};
  const EndoResult i = endo_from_pair(forms.g, forms.printed[0].form, basis);
  const EndoResult s = endo_from_pair(forms.g, forms.printed[1].form, basis);
  const EndoResult t = endo_from_pair(forms.g, forms.printed[2].form, basis);
  for (const auto* r : {&i, &s, &t}) {
    ASSERT_EQ(r->status, EndoStatus::Ok);
    EXPECT_TRUE(r->identity_holds);
  }
  // With this metric the printed omega_I and omega_S both give product structures and omega_T
  // gives the complex one.
  EXPECT_TRUE(i.squares_to_one);
  EXPECT_TRUE(s.squares_to_one);
  EXPECT_TRUE(t.squares_to_minus_one);
  EXPECT_TRUE(t.preserves_metric);
  EXPECT_TRUE(i.reverses_metric);

  const RationalMatrix degenerate(5, 5);
  EXPECT_EQ(endo_from_pair(degenerate, forms.printed[0].form, basis).status, EndoStatus::DegenerateMetric);
}
