#include "hsq/cone_analysis.hpp"
#include "hsq/flat_structure.hpp"
#include "hsq/lie_algebra.hpp"
#include "hsq/moment_map.hpp"
#include "hsq/sasaki.hpp"
#include "hsq/split_quaternion.hpp"
#include "hsq/symmetric_space.hpp"
#include "support.hpp"

#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

using namespace hsq;
using namespace hsq::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) detail << "failed: " << what << "; ";
    pass = pass && condition;
  }
};

ToricConfig make_config(IntegerMatrix u, RationalVector l1, RationalVector l2, RationalVector l3) {
  ToricConfig cfg;
  cfg.n = u.rows();
  cfg.d = u.cols();
  cfg.u = std::move(u);
  cfg.lambda1 = std::move(l1);
  cfg.lambda2 = std::move(l2);
  cfg.lambda3 = std::move(l3);
  cfg.validate();
  return cfg;
}

void algebra_suite(Outcome& out) {
  Rng rng(1001);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto p = random_quaternion(rng), q = random_quaternion(rng), r = random_quaternion(rng);
    out.require((p * q) * r == p * (q * r), "associativity");
    out.require((p * q).conj() == q.conj() * p.conj(), "conjugation reverses products");
    out.require((p * q).norm2() == p.norm2() * q.norm2(), "norm multiplicative");
  }
  std::size_t grid = 0;
  for (int x = -6; x <= 6; ++x)
    for (int y = -6; y <= 6; ++y)
      for (int u = -6; u <= 6; ++u)
        for (int v = -6; v <= 6; ++v) {
          const SplitQuaternion p(make_rational(x, 2), make_rational(y, 2), make_rational(u, 2), make_rational(v, 2));
          const SplitQuaternion sq = p * p;
          SquareClass direct = SquareClass::Neither;
          if (sq == -SplitQuaternion::one()) direct = SquareClass::MinusOne;
          if (sq == SplitQuaternion::one()) direct = SquareClass::PlusOne;
          out.require(classify_square_by_criterion(p) == direct, "square criterion");
          out.require(classify_square(p) == direct, "square by multiplication");
          ++grid;
        }
  out.detail << "10000 triples, " << grid << " grid points";
}

void flat_suite(Outcome& out) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const FlatStructure f = flat_structure(n);
    const std::size_t dim = 4 * n;
    const RationalMatrix id = RationalMatrix::identity(dim);
    out.require(f.i_endo * f.i_endo == -id && f.s_endo * f.s_endo == id && f.t_endo * f.t_endo == id, "squares");
    out.require(f.i_endo * f.s_endo == f.t_endo && f.s_endo * f.i_endo == -f.t_endo, "IS = T = -SI");
    out.require(f.i_endo.transpose() * f.gram * f.i_endo == f.gram, "g(IX, IY) = g(X, Y)");
    out.require(f.s_endo.transpose() * f.gram * f.s_endo == -f.gram, "g(SX, SY) = -g(X, Y)");
    out.require(f.t_endo.transpose() * f.gram * f.t_endo == -f.gram, "g(TX, TY) = -g(X, Y)");
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) {
        RationalVector x(dim), y(dim);
        x[a] = 1;
        y[b] = 1;
        const FlatPairing p = f.eval(x, y);
        out.require(p.omega_i == dot(f.gram * (f.i_endo * x), y), "omega_I = g(I., .)");
        out.require(p.omega_s == dot(f.gram * (f.s_endo * x), y), "omega_S = g(S., .)");
        out.require(p.omega_t == dot(f.gram * (f.t_endo * x), y), "omega_T = g(T., .)");
        // sum_k dw_k ^ dzbar_k from coordinates (x, y, u, v) per slot.
        ComplexRational expected;
        for (std::size_t k = 0; k < n; ++k) {
          const ComplexRational dw_x(x[4 * k + 2], x[4 * k + 3]), dw_y(y[4 * k + 2], y[4 * k + 3]);
          const ComplexRational dz_x(x[4 * k], -x[4 * k + 1]), dz_y(y[4 * k], -y[4 * k + 1]);
          expected += dw_x * dz_y - dw_y * dz_x;
        }
        out.require(ComplexRational(p.omega_s, p.omega_t) == expected, "omega_S + i omega_T");
      }
  }
  out.detail << "n = 1..4";
}

void model_case(Outcome& out) {
  const ToricConfig cfg = make_config({{1}}, {0}, {0}, {0});
  std::vector<Rational> values;
  for (int k = -9; k <= 9; k += 2) values.push_back(make_rational(k, 2));
  std::map<std::tuple<Rational, Rational, Rational>, std::set<std::tuple<Rational, Rational, Rational, Rational>>> grid;
  std::size_t samples = 0, on_wall = 0;
  for (const auto& x : values)
    for (const auto& y : values)
      for (const auto& u : values)
        for (const auto& v : values) {
          const ComplexPair zw{{ComplexRational(x, y)}, {ComplexRational(u, v)}};
          const auto p = level_witness(cfg, zw);
          out.require(p.has_value(), "level witness");
          if (!p) continue;
          const ConeValues cv = cone_values(cfg, *p);
          out.require(cv.a[0] >= 0 && cv.a[0] * cv.a[0] >= cv.b[0].norm2(), "image in a - c1 >= |b - c|");
          on_wall += cv.a[0] * cv.a[0] == cv.b[0].norm2();
          ++samples;
          const ComplexRational zbw = zw.z[0].conj() * zw.w[0];
          grid[{p->a[0], p->b[0].re, p->b[0].im}].insert({zw.z[0].norm2(), zw.w[0].norm2(), zbw.re, zbw.im});
        }
  std::size_t inside = 0, wall = 0;
  for (const auto& [key, orbits] : grid) {
    const ConePoint p{{std::get<0>(key)}, {ComplexRational(std::get<1>(key), std::get<2>(key))}};
    const bool boundary = !incidence(cfg, p).l.empty();
    const std::size_t expected = boundary ? 1 : 2;
    out.require(orbits.size() == expected, "grid oracle orbit count");
    out.require(fiber_enumerate(cfg, p).size() == expected, "fiber_enumerate count");
    (boundary ? wall : inside) += 1;
  }
  out.require(samples == 10000, "10^4 samples");
  out.require(on_wall > 0, "boundary attained");
  out.detail << samples << " grid points, " << inside << " interior and " << wall << " wall images";
}

void example_family_suite(Outcome& out) {
  for (std::size_t n : {1u, 2u}) {
    const ToricConfig cfg = example_family(n, 1);
    const FreenessVerdict f = freeness_test(cfg);
    out.require(f.status == Verdict::Yes, "freeness");
    const DegeneracyVerdict d = degeneracy_test(cfg, {}, &f.strata);
    out.require(d.status == DegeneracyVerdict::Status::NondegenerateAtSampled, "degeneracy verdict");
    for (const auto& s : f.strata) {
      if (s.feasibility.status != Feasibility::Feasible) continue;
      const ConePoint p = from_variables(s.feasibility.witness, cfg.n);
      out.require(!pointwise_degeneracy(cfg, p, 1, 32).has_value(), "nondegenerate at stratum");
    }
    const ConnectednessVerdict c = connectedness_test(cfg);
    out.require(c.status == Verdict::No, "not connected");
    out.require(c.missing_wall == std::optional<std::size_t>(n), "W_{n+1} misses K");
    out.require(c.walls[n].status == Feasibility::Infeasible, "exact emptiness of W_{n+1}");
    const CIntVerdict ci = cint_probe(cfg);
    out.require(ci.status == Verdict::Yes && ci.point.has_value(), "CInt point");
    if (ci.point) {
      out.require(incidence(cfg, *ci.point).l.empty(), "CInt point avoids walls");
      out.require(fiber_enumerate(cfg, *ci.point).size() == (std::size_t{1} << (n + 1)), "fiber count 2^{n+1}");
    }
    out.detail << "n = " << n << ": " << f.strata.size() << " strata; ";
  }
}

void fiber_law(Outcome& out) {
  Rng rng(1005);
  std::size_t points = 0, wall_points = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::size_t> pick_n(1, 2);
    const std::size_t n = pick_n(rng);
    std::uniform_int_distribution<std::size_t> pick_d(n, 4);
    const PlantedConfig pc = planted_config(rng, n, pick_d(rng));
    const auto pts = points_near(rng, pc.cfg, pc.point, 20);
    out.require(pts.size() == 20, "20 points of K");
    for (const auto& p : pts) {
      const Incidence inc = incidence(pc.cfg, p);
      const auto orbits = fiber_enumerate(pc.cfg, p);
      out.require(orbits.size() == (std::size_t{1} << (pc.cfg.d - inc.l.size())), "2^{d-|L|} orbits");
      for (const auto& o : orbits) {
        const auto back = level_witness(pc.cfg, o.invariants());
        out.require(back.has_value() && *back == p, "round trip");
      }
      ++points;
      wall_points += !inc.l.empty();
    }
  }
  out.detail << points << " points, " << wall_points << " on walls";
}

void compact_link(Outcome& out) {
  std::vector<ToricConfig> configs{make_config({{1, -1}}, {-2, -5}, {-1, -2}, {-3, -1})};
  Rng rng(1006);
  while (configs.size() < 6) {
    const ToricConfig cfg = make_config({{1, -1}}, random_vector(rng, 2), random_vector(rng, 2), random_vector(rng, 2));
    if (cint_probe(cfg).status == Verdict::Yes) configs.push_back(cfg);
  }
  for (const auto& cfg : configs) {
    out.require(compactness_test(cfg), "compact");
    const DegeneracyVerdict d = degeneracy_test(cfg);
    out.require(d.status == DegeneracyVerdict::Status::Degenerate, "degenerate");
    out.require(d.witness && verify_degeneracy_witness(cfg, *d.witness), "verified witness");
  }
  out.detail << configs.size() << " levels";
}

void wall_incidence(Outcome& out) {
  for (std::size_t n : {1u, 2u}) {
    // n + 1 copies of e_1 (same level), plus e_2 .. e_n.
    auto coincident = [n](std::size_t copies) {
      const std::size_t d = copies + n - 1;
      IntegerMatrix u(n, d);
      for (std::size_t k = 0; k < copies; ++k) u(0, k) = 1;
      for (std::size_t i = 1; i < n; ++i) u(i, copies + i - 1) = 1;
      RationalVector l1(d), l2(d), l3(d);
      for (std::size_t k = 0; k < copies; ++k) {
        l1[k] = -1;
        l2[k] = 3;
      }
      return make_config(u, l1, l2, l3);
    };
    const ToricConfig deg = coincident(n + 1);
    const DegeneracyVerdict d = degeneracy_test(deg);
    out.require(d.status == DegeneracyVerdict::Status::Degenerate, "n+1 coincident walls degenerate");
    out.require(d.witness && verify_degeneracy_witness(deg, *d.witness), "verified witness");

    const ToricConfig many = coincident(3 * n + 1);
    // a_1 - 1 = 5 = |b_1 - 3| on the common wall; the other coordinates well inside.
    ConePoint p{RationalVector(n, 10), ComplexVector(n)};
    p.a[0] = 4;
    p.b[0] = ComplexRational(6, 4);
    const SmoothnessVerdict s = smoothness_test(many, p);
    out.require(s.incidence.l.size() == 3 * n + 1, "3n+1 walls through the point");
    out.require(s.too_many_walls && s.status == SmoothnessVerdict::Status::Fails, "smoothness fails");
  }
  out.detail << "n = 1, 2";
}

void lie_suite(Outcome& out) {
  const LieAlgebraData l = five_dim_example();
  out.require(jacobi_check(l).empty(), "Jacobi");
  out.require(nilpotency_step(l) == std::optional<std::size_t>(3), "nilpotency step 3");
  AlternatingForm e12(5, 2);
  e12.add_term({0, 1}, -1);
  out.require(ce_differential(l, AlternatingForm::basis(5, 2)) == e12, "dE3 = -E1^E2");
  const FourDimExampleForms forms = four_dim_example_forms();
  const auto printed = closedness_report(l, forms.printed);
  const auto variants = closedness_report(l, forms.variants);
  out.require(printed[0].closed() && printed[2].closed(), "d omega_I = d omega_T = 0");
  out.require(printed[1].closed() != variants[1].closed(), "exactly one omega_S variant closed");
  out.detail << "d(" << to_string(printed[1].form) << ") = " << to_string(printed[1].residue) << ", d("
             << to_string(variants[1].form) << ") = " << to_string(variants[1].residue);
}

void symmetric_suite(Outcome& out) {
  const SymmetricHsResult r = build_symmetric_hs(e_fourth());
  out.require(r.accepted(), "accepted");
  LieAlgebraData target(5);
  target.set_bracket(0, 1, {0, 0, 1, 0, 0});
  target.set_bracket(2, 0, {0, 0, 0, 1, 0});
  target.set_bracket(2, 1, {0, 0, 0, 0, 1});
  const auto lambda = diagonal_normalization(r.algebra, target);
  out.require(lambda.has_value(), "normalization exists");
  if (lambda) {
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t k = 0; k < 5; ++k)
          out.require((*lambda)[i] * (*lambda)[j] * r.algebra.constant(i, j, k) == (*lambda)[k] * target.constant(i, j, k),
                      "rescaled table");
    out.detail << "E'_i = lambda_i E_i with lambda = (";
    for (std::size_t i = 0; i < 5; ++i) out.detail << (i ? ", " : "") << to_string((*lambda)[i]);
    out.detail << ")";
  }
}

void sasaki_suite(Outcome& out) {
  for (std::size_t n : {0u, 1u}) {
    const SasakiReport r = sasaki_check(n, pseudo_sphere_points(n, 100, 1010 + n));
    out.require(r.points_checked >= 100, "100 sphere points");
    out.require(r.lengths && r.orthogonal && r.brackets && r.tangent && r.killing, "field relations");
    const ConeCompareReport c = cone_compare(n, positive_norm_points(n, 20, 1020 + n));
    out.require(c.points_checked >= 20 && c.euler_field_agrees, "cone agrees with flat structure");
    out.detail << "n = " << n << ": " << to_string(r.chosen) << "; ";
  }
}

void induced_suite(Outcome& out) {
  const ToricConfig cfg = example_family(1, 1);
  out.require(cint_probe(cfg).status == Verdict::Yes, "CInt nonempty");
  // A CInt point whose fiber has rational representatives.
  const ConePoint p{{make_rational(1, 8)}, {ComplexRational(0)}};
  out.require(incidence(cfg, p).in_k && incidence(cfg, p).l.empty(), "point in CInt");
  std::size_t checked = 0;
  for (const auto& orbit : fiber_enumerate(cfg, p)) {
    const auto rep = orbit.rational_representative();
    if (!rep) continue;
    const InducedStructure s = induced_structure(cfg, *rep);
    out.require(s.status == InducedStatus::Ok, "nondegenerate quotient");
    out.require(s.dimension() == 4, "quotient dimension 4");
    out.require(s.relations.all(), "IST relations");
    out.require(s.restriction_matches, "agrees with restricted ambient structure");
    ++checked;
  }
  out.require(checked > 0, "rational fiber point");
  out.detail << checked << " orbits over a = 1/8, b = 0";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"algebra suite", algebra_suite},
      {"flat structure", flat_suite},
      {"model T^1 case", model_case},
      {"example family", example_family_suite},
      {"fiber-count law", fiber_law},
      {"compactness and degeneracy", compact_link},
      {"wall-incidence criteria", wall_incidence},
      {"Lie verifier", lie_suite},
      {"symmetric construction", symmetric_suite},
      {"Sasakian suite", sasaki_suite},
      {"induced structure", induced_suite},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    std::string detail = out.detail.str();
    while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
    std::cout << "criterion " << i + 1 << ": " << (out.pass ? "PASS" : "FAIL") << " " << criteria[i].first << " ("
              << detail << ")\n";
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
