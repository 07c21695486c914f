#include "hsq/flat_structure.hpp"
#include "hsq/lie_algebra.hpp"
#include "hsq/report.hpp"
#include "hsq/sasaki.hpp"
#include "hsq/split_quaternion.hpp"
#include "hsq/symmetric_space.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <random>

using namespace hsq;

namespace {

struct Check {
  std::string name;
  bool ok;
};

int print_checks(const std::vector<Check>& checks) {
  bool all = true;
  for (const auto& c : checks) {
    std::cout << (c.ok ? "ok   " : "FAIL ") << c.name << "\n";
    all = all && c.ok;
  }
  return all ? 0 : 2;
}

SplitQuaternion random_quaternion(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  auto r = [&] { return make_rational(num(rng), den(rng)); };
  return {r(), r(), r(), r()};
}

int verify_core(std::uint64_t seed, std::size_t samples) {
  std::mt19937_64 rng(seed);
  bool assoc = true, conj = true, norm = true;
  for (std::size_t k = 0; k < samples; ++k) {
    const auto p = random_quaternion(rng), q = random_quaternion(rng), r = random_quaternion(rng);
    assoc = assoc && (p * q) * r == p * (q * r);
    conj = conj && (p * q).conj() == q.conj() * p.conj();
    norm = norm && (p * q).norm2() == p.norm2() * q.norm2();
  }
  bool grid = true;
  for (int x = -6; x <= 6; ++x)
    for (int y = -6; y <= 6; ++y)
      for (int u = -6; u <= 6; ++u)
        for (int v = -6; v <= 6; ++v) {
          const SplitQuaternion p(make_rational(x, 2), make_rational(y, 2), make_rational(u, 2), make_rational(v, 2));
          grid = grid && classify_square(p) == classify_square_by_criterion(p);
        }
  std::vector<Check> checks{{"associativity", assoc},
                            {"conjugation reverses products", conj},
                            {"norm is multiplicative", norm},
                            {"square classification matches criterion", grid}};
  for (std::size_t n = 1; n <= 4; ++n) {
    const FlatStructure f = flat_structure(n);
    checks.push_back({"flat structure relations, n = " + std::to_string(n),
                      check_relations(f.i_endo, f.s_endo, f.t_endo, f.gram).all()});
  }
  return print_checks(checks);
}

int verify_lie() {
  const LieAlgebraData l = five_dim_example();
  const FourDimExampleForms forms = four_dim_example_forms();
  std::vector<Check> checks{{"jacobi identity", jacobi_check(l).empty()},
                            {"nilpotency step 3", nilpotency_step(l) == std::optional<std::size_t>(3)}};
  AlternatingForm e3(5, 1);
  e3.add_term({2}, 1);
  std::cout << "d E3 = " << to_string(ce_differential(l, e3)) << "\n";
  for (const auto& group : {forms.printed, forms.variants}) {
    for (const auto& entry : closedness_report(l, group)) {
      std::cout << entry.name << " = " << to_string(entry.form) << ": d = " << to_string(entry.residue) << "\n";
    }
  }
  const auto printed = closedness_report(l, forms.printed);
  checks.push_back({"printed omega_I closed", printed[0].closed()});
  checks.push_back({"printed omega_T closed", printed[2].closed()});
  const auto variants = closedness_report(l, forms.variants);
  checks.push_back({"one omega_S variant closed", printed[1].closed() || variants[1].closed()});
  const SymmetricHsResult hs = build_symmetric_hs(e_fourth());
  LieAlgebraData target(5);
  target.set_bracket(0, 1, {0, 0, 1, 0, 0});
  target.set_bracket(2, 0, {0, 0, 0, 1, 0});
  target.set_bracket(2, 1, {0, 0, 0, 0, 1});
  checks.push_back({"symmetric construction accepted", hs.accepted()});
  checks.push_back({"symmetric construction matches bracket table", diagonal_normalization(hs.algebra, target).has_value()});
  return print_checks(checks);
}

int verify_sasaki(std::uint64_t seed, std::size_t samples) {
  std::vector<Check> checks;
  for (std::size_t n = 0; n <= 1; ++n) {
    try {
      const SasakiReport r = sasaki_check(n, pseudo_sphere_points(n, samples, seed));
      std::cout << "n = " << n << ": " << r.valid.size() << " valid assignments, chosen " << to_string(r.chosen) << "\n";
      checks.push_back({"sasaki relations, n = " + std::to_string(n), r.all()});
      const ConeCompareReport c = cone_compare(n, positive_norm_points(n, std::max<std::size_t>(samples / 5, 20), seed));
      std::cout << "n = " << n << ": unit radial field mismatch " << c.unit_radial_max_mismatch << " over "
                << c.unit_radial_points << " points off r = 1\n";
      checks.push_back({"cone structure agrees with flat, n = " + std::to_string(n), c.euler_field_agrees});
    } catch (const NoConsistentAssignment& e) {
      checks.push_back({std::string("sasaki assignment: ") + e.what(), false});
    }
  }
  return print_checks(checks);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypersymplectic toric quotient analyzer"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> analysis_seed;
  std::size_t sweep = 0, samples = 0, cap = 0;
  bool text = false;
  std::string output;
  auto add_analysis_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", analysis_seed, "random seed");
    cmd->add_option("--sweep-resolution", sweep, "boundary sweep directions");
    cmd->add_option("--samples", samples, "sample count");
    cmd->add_option("--stratum-cap", cap, "largest stratum size enumerated");
    cmd->add_flag("--text", text, "human-readable output");
    cmd->add_option("-o,--output", output, "write the report to a file");
  };

  std::string config_path, point;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a configuration");
  analyze_cmd->add_option("config", config_path, "JSON configuration")->required();
  add_analysis_flags(analyze_cmd);

  auto* fiber_cmd = app.add_subcommand("fiber", "enumerate the fiber over a point");
  fiber_cmd->add_option("config", config_path, "JSON configuration")->required();
  fiber_cmd->add_option("--point", point, "a1;..;an,b1;..;bn with b entries re or re:im")->required();

  std::size_t family_n = 1;
  std::string lambda = "1";
  bool emit_config = false;
  auto* example_cmd = app.add_subcommand("example", "analyze the d = n + 1 example family");
  example_cmd->add_option("--n", family_n, "rank")->required();
  example_cmd->add_option("--lambda", lambda, "positive rational")->required();
  example_cmd->add_flag("--emit-config", emit_config, "print the configuration instead of analyzing it");
  add_analysis_flags(example_cmd);

  auto* core_cmd = app.add_subcommand("verify-core", "split quaternion and flat structure checks");
  core_cmd->add_option("--seed", seed, "random seed");
  core_cmd->add_option("--samples", samples, "random samples");
  auto* lie_cmd = app.add_subcommand("verify-lie", "Lie algebra example checks");
  auto* sasaki_cmd = app.add_subcommand("verify-sasaki", "pseudo-sphere and cone checks");
  sasaki_cmd->add_option("--seed", seed, "random seed");
  sasaki_cmd->add_option("--samples", samples, "sphere points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (core_cmd->parsed()) return verify_core(seed, samples == 0 ? 10000 : samples);
    if (lie_cmd->parsed()) return verify_lie();
    if (sasaki_cmd->parsed()) return verify_sasaki(seed, samples == 0 ? 100 : samples);

    if (fiber_cmd->parsed()) {
      const ConfigDocument doc = load_config(config_path);
      std::cout << fiber_report(doc.config, parse_point(point, doc.config.n)).dump(2) << "\n";
      return 0;
    }

    ConfigDocument doc;
    if (example_cmd->parsed()) {
      Rational l;
      try {
        l = parse_rational(lambda);
      } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--lambda: ") + e.what());
      }
      doc.config = example_family(family_n, l);
      if (emit_config) {
        std::cout << config_to_json(doc).dump(2) << "\n";
        return 0;
      }
    } else {
      doc = load_config(config_path);
    }
    if (analysis_seed) doc.options.seed = *analysis_seed;
    if (sweep != 0) doc.options.sweep_resolution = sweep;
    if (samples != 0) doc.options.samples = samples;
    if (cap != 0) doc.options.stratum_cap = cap;

    const ReportDocument report = analyze(doc);
    const std::string out = emit_report(report, text ? ReportFormat::Text : ReportFormat::Json);
    if (output.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(output);
      if (!f) throw InputError("cannot write " + output);
      f << out;
    }
    return report.has_unknown() ? 2 : 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
