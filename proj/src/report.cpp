#include "hsq/report.hpp"

#include <fstream>
#include <sstream>

namespace hsq {

namespace {

const Json& require(const Json& obj, const std::string& key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing field \"" + key + "\"");
  return *it;
}

std::size_t positive_size(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() <= 0) throw InputError(field + ": expected a positive integer");
  return j.get<std::size_t>();
}

std::size_t option_size(const Json& options, const std::string& key, std::size_t fallback) {
  const auto it = options.find(key);
  if (it == options.end()) return fallback;
  if (!it->is_number_integer() || it->get<long long>() < 0) throw InputError("options." + key + ": expected a nonnegative integer");
  return it->get<std::size_t>();
}

Json indices_json(const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (auto k : idx) a.push_back(k + 1);
  return a;
}

Json vector_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const ComplexRational& c) { return Json{{"re", to_string(c.re)}, {"im", to_string(c.im)}}; }

Json to_json(const ConePoint& p) {
  Json b = Json::array();
  for (const auto& x : p.b) b.push_back(to_json(x));
  return Json{{"a", vector_json(p.a)}, {"b", b}};
}

Rational rational_from_json(const Json& j, const std::string& field) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::invalid_argument& e) {
    throw InputError(field + ": " + e.what());
  }
  throw InputError(field + ": expected a rational encoded as a \"p/q\" string");
}

ConePoint cone_point_from_json(const Json& j) {
  ConePoint p;
  for (const auto& x : require(j, "a")) p.a.push_back(rational_from_json(x, "a"));
  for (const auto& x : require(j, "b"))
    p.b.emplace_back(rational_from_json(require(x, "re"), "b.re"), rational_from_json(require(x, "im"), "b.im"));
  return p;
}

ConfigDocument parse_config(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(e.what());
  }
  if (!doc.is_object()) throw InputError("configuration must be a JSON object");
  ConfigDocument out;
  ToricConfig& cfg = out.config;
  cfg.d = positive_size(require(doc, "d"), "d");
  cfg.n = positive_size(require(doc, "n"), "n");
  const Json& u = require(doc, "u");
  if (!u.is_array() || u.size() != cfg.d) throw ConfigError("u: expected d = " + std::to_string(cfg.d) + " vectors");
  cfg.u = IntegerMatrix(cfg.n, cfg.d);
  for (std::size_t k = 0; k < cfg.d; ++k) {
    const std::string field = "u[" + std::to_string(k) + "]";
    if (!u[k].is_array() || u[k].size() != cfg.n)
      throw ConfigError(field + ": expected n = " + std::to_string(cfg.n) + " integers");
    for (std::size_t i = 0; i < cfg.n; ++i) {
      const Json& x = u[k][i];
      if (x.is_number_integer()) {
        cfg.u(i, k) = Integer(std::to_string(x.get<long long>()));
      } else if (x.is_string()) {
        const Rational r = rational_from_json(x, field);
        if (r.get_den() != 1) throw ConfigError(field + ": entries must be integers");
        cfg.u(i, k) = r.get_num();
      } else {
        throw ConfigError(field + ": entries must be integers");
      }
    }
  }
  auto lambdas = [&](const char* key) {
    const Json& arr = require(doc, key);
    if (!arr.is_array() || arr.size() != cfg.d) throw ConfigError(std::string(key) + ": expected d = " + std::to_string(cfg.d) + " rationals");
    RationalVector v;
    for (std::size_t k = 0; k < cfg.d; ++k) v.push_back(rational_from_json(arr[k], std::string(key) + "[" + std::to_string(k) + "]"));
    return v;
  };
  cfg.lambda1 = lambdas("lambda1");
  cfg.lambda2 = lambdas("lambda2");
  cfg.lambda3 = lambdas("lambda3");
  cfg.validate();

  if (const auto it = doc.find("options"); it != doc.end()) {
    if (!it->is_object()) throw InputError("options: expected an object");
    AnalysisOptions& o = out.options;
    o.sweep_resolution = option_size(*it, "sweep_resolution", o.sweep_resolution);
    o.joint_resolution = option_size(*it, "joint_resolution", o.joint_resolution);
    o.samples = option_size(*it, "samples", o.samples);
    o.stratum_cap = option_size(*it, "stratum_cap", o.stratum_cap);
    o.max_d = option_size(*it, "max_d", o.max_d);
    o.max_wall_subsets = option_size(*it, "max_wall_subsets", o.max_wall_subsets);
    o.seed = option_size(*it, "seed", o.seed);
  }
  return out;
}

ConfigDocument load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

Json config_to_json(const ConfigDocument& doc) {
  const ToricConfig& cfg = doc.config;
  Json u = Json::array();
  for (std::size_t k = 0; k < cfg.d; ++k) {
    Json col = Json::array();
    for (std::size_t i = 0; i < cfg.n; ++i) col.push_back(std::stoll(cfg.u(i, k).get_str()));
    u.push_back(col);
  }
  const AnalysisOptions& o = doc.options;
  return Json{{"d", cfg.d},
              {"n", cfg.n},
              {"u", u},
              {"lambda1", vector_json(cfg.lambda1)},
              {"lambda2", vector_json(cfg.lambda2)},
              {"lambda3", vector_json(cfg.lambda3)},
              {"options",
               {{"sweep_resolution", o.sweep_resolution},
                {"joint_resolution", o.joint_resolution},
                {"samples", o.samples},
                {"stratum_cap", o.stratum_cap},
                {"max_d", o.max_d},
                {"max_wall_subsets", o.max_wall_subsets},
                {"seed", o.seed}}}};
}

ConePoint parse_point(const std::string& text, std::size_t n) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("point: expected \"a,b\"");
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';')) parts.push_back(item);
    return parts;
  };
  const auto as = split(text.substr(0, comma));
  const auto bs = split(text.substr(comma + 1));
  if (as.size() != n || bs.size() != n) throw InputError("point: expected n = " + std::to_string(n) + " entries in a and in b");
  ConePoint p;
  try {
    for (const auto& a : as) p.a.push_back(parse_rational(a));
    for (const auto& b : bs) {
      const auto colon = b.find(':');
      if (colon == std::string::npos) {
        p.b.emplace_back(parse_rational(b));
      } else {
        p.b.emplace_back(parse_rational(b.substr(0, colon)), parse_rational(b.substr(colon + 1)));
      }
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("point: ") + e.what());
  }
  return p;
}

bool ReportDocument::has_unknown() const {
  for (const auto& [name, v] : verdicts)
    if (v.status == "unknown" || v.status == "error") return true;
  return false;
}

namespace {

Json feasibility_json(const FeasibilityVerdict& f, std::size_t n) {
  Json j{{"status", to_string(f.status)}, {"method", f.method}};
  if (f.status == Feasibility::Feasible) j["point"] = to_json(from_variables(f.witness, n));
  if (f.farkas) j["farkas_multipliers"] = vector_json(f.farkas->multipliers);
  if (sgn(f.exclusion_margin) != 0) j["exclusion_margin"] = to_json(f.exclusion_margin);
  if (f.resolution != 0) j["directions_tried"] = f.resolution;
  return j;
}

VerdictEntry connected_entry(const ToricConfig& cfg, const AnalysisOptions& o) {
  const ConnectednessVerdict c = connectedness_test(cfg, o);
  VerdictEntry e;
  e.status = to_string(c.status);
  e.method = "wall-meets-K";
  e.exact = c.status != Verdict::Unknown;
  Json walls = Json::array();
  for (std::size_t k = 0; k < c.walls.size(); ++k) {
    Json w = feasibility_json(c.walls[k], cfg.n);
    w["wall"] = k + 1;
    walls.push_back(w);
  }
  e.witness = Json{{"walls", walls}};
  if (c.missing_wall) e.witness["missing_wall"] = *c.missing_wall + 1;
  if (!e.exact) e.resolution = Json{{"sweep_resolution", o.sweep_resolution}};
  return e;
}

VerdictEntry compact_entry(const ToricConfig& cfg) {
  VerdictEntry e;
  e.status = compactness_test(cfg) ? "yes" : "no";
  e.method = "positive-spanning-lp";
  return e;
}

VerdictEntry freeness_entry(const FreenessVerdict& f, const ToricConfig& cfg, const AnalysisOptions& o) {
  VerdictEntry e;
  e.status = to_string(f.status);
  e.method = "smith-normal-form-on-nonempty-strata";
  e.exact = f.status != Verdict::Unknown;
  if (f.violating) {
    Json w{{"J", indices_json(*f.violating)}};
    for (const auto& s : f.strata)
      if (s.j == *f.violating && s.feasibility.status == Feasibility::Feasible)
        w["point"] = to_json(from_variables(s.feasibility.witness, cfg.n));
    e.witness = w;
  }
  if (!e.exact) e.resolution = Json{{"stratum_cap", o.stratum_cap == 0 ? cfg.n + 1 : o.stratum_cap}, {"max_d", o.max_d}};
  if (!f.note.empty()) e.method += "; " + f.note;
  return e;
}

VerdictEntry degeneracy_entry(const DegeneracyVerdict& d, const AnalysisOptions& o) {
  VerdictEntry e;
  e.status = to_string(d.status);
  e.method = d.method;
  e.exact = d.status == DegeneracyVerdict::Status::Degenerate;
  if (d.witness) {
    const DegeneracyWitness& w = *d.witness;
    e.witness = Json{{"point", to_json(w.point)}};
    if (w.kind == DegeneracyWitness::Kind::Walls) {
      e.witness["kind"] = "walls";
      e.witness["walls"] = indices_json(w.walls);
    } else {
      e.witness["kind"] = "zeta-s";
      e.witness["zeta"] = vector_json(w.zeta);
      e.witness["s"] = vector_json(w.s);
    }
  }
  if (!e.exact)
    e.resolution = Json{{"sweep_resolution", o.sweep_resolution},
                        {"joint_resolution", o.joint_resolution},
                        {"samples", o.samples},
                        {"seed", o.seed},
                        {"points_tested", d.points_tested},
                        {"wall_subsets_tested", d.wall_subsets_tested},
                        {"wall_subsets_skipped", d.wall_subsets_skipped}};
  return e;
}

Json smoothness_json(const SmoothnessVerdict& s) {
  return Json{{"status", to_string(s.status)},
              {"J", indices_json(s.incidence.j)},
              {"L", indices_json(s.incidence.l)},
              {"domain_dimension", s.domain_dimension},
              {"rank", s.rank},
              {"more_than_3n_walls", s.too_many_walls}};
}

VerdictEntry error_entry(const std::exception& ex) {
  VerdictEntry e;
  e.status = "error";
  e.method = ex.what();
  e.exact = false;
  return e;
}

Json entry_json(const VerdictEntry& e) {
  Json j{{"status", e.status}, {"method", e.method}, {"exact", e.exact}, {"witness", e.witness}};
  if (!e.resolution.is_null()) j["resolution"] = e.resolution;
  return j;
}

}  // namespace

ReportDocument analyze(const ConfigDocument& doc) {
  const ToricConfig& cfg = doc.config;
  const AnalysisOptions& o = doc.options;
  cfg.validate();
  ReportDocument r;
  r.input = config_to_json(doc);

  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      r.verdicts[name] = fn();
    } catch (const std::exception& ex) {
      r.verdicts[name] = error_entry(ex);
    }
  };
  guarded("connected", [&] { return connected_entry(cfg, o); });
  guarded("compact", [&] { return compact_entry(cfg); });

  FreenessVerdict free;
  guarded("freeness", [&] {
    free = freeness_test(cfg, o);
    return freeness_entry(free, cfg, o);
  });
  guarded("degeneracy", [&] { return degeneracy_entry(degeneracy_test(cfg, o, &free.strata), o); });

  CIntVerdict cint;
  guarded("cint", [&] {
    cint = cint_probe(cfg);
    VerdictEntry e;
    e.status = to_string(cint.status);
    e.method = cint.method;
    e.exact = cint.status != Verdict::Unknown;
    e.witness = Json{{"outer_margin", to_json(cint.outer_margin)}};
    if (cint.point) e.witness["point"] = to_json(*cint.point);
    return e;
  });

  // Smoothness at every stratum point and at the interior point.
  guarded("smoothness", [&] {
    VerdictEntry e;
    e.status = to_string(SmoothnessVerdict::Status::NecessaryConditionHolds);
    e.method = "lambda-injectivity-at-tested-points";
    e.exact = false;
    std::size_t tested = 0;
    auto check = [&](const ConePoint& p, Json& target) {
      const SmoothnessVerdict s = smoothness_test(cfg, p);
      target = smoothness_json(s);
      ++tested;
      if (s.status == SmoothnessVerdict::Status::Fails && e.witness.is_null()) {
        e.status = to_string(SmoothnessVerdict::Status::Fails);
        e.exact = true;
        e.witness = Json{{"point", to_json(p)}, {"detail", target}};
      }
    };
    for (const auto& s : free.strata) {
      Json row{{"J", indices_json(s.j)}, {"status", to_string(s.feasibility.status)}, {"lattice_basis", s.lattice_basis}};
      if (s.feasibility.status == Feasibility::Feasible) {
        const ConePoint p = from_variables(s.feasibility.witness, cfg.n);
        row["point"] = to_json(p);
        Json sm;
        check(p, sm);
        row["smoothness"] = sm;
      }
      r.strata.push_back(row);
    }
    if (cint.point) {
      Json sm;
      check(*cint.point, sm);
    }
    if (!e.exact) e.resolution = Json{{"points_tested", tested}};
    return e;
  });
  return r;
}

Json to_json(const ReportDocument& r) {
  Json verdicts = Json::object();
  for (const auto& [name, v] : r.verdicts) verdicts[name] = entry_json(v);
  return Json{{"tool", "hsq"}, {"version", r.tool_version}, {"input", r.input}, {"verdicts", verdicts}, {"strata", r.strata}};
}

ReportDocument report_from_json(const Json& j) {
  ReportDocument r;
  r.tool_version = require(j, "version").get<std::string>();
  r.input = require(j, "input");
  for (const auto& [name, v] : require(j, "verdicts").items()) {
    VerdictEntry e;
    e.status = require(v, "status").get<std::string>();
    e.method = require(v, "method").get<std::string>();
    e.exact = require(v, "exact").get<bool>();
    e.witness = require(v, "witness");
    if (const auto it = v.find("resolution"); it != v.end()) e.resolution = *it;
    r.verdicts[name] = e;
  }
  r.strata = require(j, "strata");
  return r;
}

std::string emit_report(const ReportDocument& r, ReportFormat format) {
  if (format == ReportFormat::Json) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  os << "hsq " << r.tool_version << " report (d = " << r.input.value("d", 0) << ", n = " << r.input.value("n", 0) << ")\n";
  for (const auto& [name, v] : r.verdicts) {
    os << name << ": " << v.status << " [" << v.method << (v.exact ? ", exact" : ", sampled") << "]";
    if (!v.witness.is_null() && v.witness.contains("point")) os << " witness " << v.witness["point"].dump();
    os << "\n";
  }
  os << "strata: " << r.strata.size() << "\n";
  for (const auto& s : r.strata) {
    os << "  J = " << s["J"].dump() << " " << s["status"].get<std::string>()
       << (s["lattice_basis"].get<bool>() ? " lattice-basis" : " not-lattice-basis");
    if (s.contains("smoothness")) os << " smoothness " << s["smoothness"]["status"].get<std::string>();
    os << "\n";
  }
  return os.str();
}

std::string to_string(const QuadraticSurd& s) {
  if (s.is_rational()) return to_string(s.to_rational());
  std::string out = sgn(s.rational_part()) == 0 ? "" : to_string(s.rational_part()) + (sgn(s.coefficient()) < 0 ? " - " : " + ");
  if (sgn(s.rational_part()) == 0 && sgn(s.coefficient()) < 0) out += "-";
  const Rational c = abs(s.coefficient());
  if (c != 1) out += to_string(c) + "*";
  return out + "sqrt(" + to_string(s.radicand()) + ")";
}

Json fiber_report(const ToricConfig& cfg, const ConePoint& p) {
  const Incidence inc = incidence(cfg, p);
  Json out{{"point", to_json(p)}, {"in_K", inc.in_k}, {"J", indices_json(inc.j)}, {"L", indices_json(inc.l)}};
  if (!inc.in_k) return out;
  const auto orbits = fiber_enumerate(cfg, p);
  out["expected_orbits"] = std::size_t{1} << (cfg.d - inc.l.size());
  out["orbit_count"] = orbits.size();
  Json list = Json::array();
  bool round_trip = true;
  for (const auto& o : orbits) {
    Json coords = Json::array();
    for (const auto& c : o.coords)
      coords.push_back(Json{{"z_mod2", to_string(c.z_mod2)}, {"w_mod2", to_string(c.w_mod2)}, {"zbar_w", to_json(c.zbar_w)}, {"sign", c.sign}});
    Json entry{{"coordinates", coords}};
    if (const auto rep = o.rational_representative()) {
      Json z = Json::array(), w = Json::array();
      for (const auto& x : rep->z) z.push_back(to_json(x));
      for (const auto& x : rep->w) w.push_back(to_json(x));
      entry["representative"] = Json{{"z", z}, {"w", w}};
    } else {
      entry["representative_approx"] = o.approximate_representative();
    }
    const auto back = level_witness(cfg, o.invariants());
    const bool ok = back && *back == p;
    entry["round_trip"] = ok;
    round_trip = round_trip && ok;
    list.push_back(entry);
  }
  out["orbits"] = list;
  out["round_trip"] = round_trip;
  out["smoothness"] = smoothness_json(smoothness_test(cfg, p));
  return out;
}

}  // namespace hsq
