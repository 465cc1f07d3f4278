#include "glstar/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "glstar/parallelism.hpp"

namespace glstar {

namespace {

using json = nlohmann::json;

const std::map<std::string, std::vector<std::string>>& family_functions() {
  static const std::map<std::string, std::vector<std::string>> m{
      {"clifford", {}},        {"symmetric", {"a"}}, {"fg", {"f", "g"}},     {"eqn", {"b", "c"}},
      {"param", {"t", "s"}},   {"latitudinal", {"mu"}}, {"parabola", {}},
  };
  return m;
}

// Collects violations as "path: message".
struct Violations {
  std::vector<std::string> items;
  void add(const std::string& path, const std::string& msg) { items.push_back(path + ": " + msg); }
};

std::optional<double> number_at(const json& obj, const std::string& key, const std::string& path, Violations& v,
                                bool required) {
  const std::string field = path.empty() ? key : path + "." + key;
  const auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) v.add(field, "missing");
    return std::nullopt;
  }
  if (!it->is_number()) {
    v.add(field, "expected a number");
    return std::nullopt;
  }
  return it->get<double>();
}

std::vector<double> number_array(const json& j, const std::string& path, Violations& v) {
  std::vector<double> out;
  if (!j.is_array()) {
    v.add(path, "expected an array of numbers");
    return out;
  }
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      v.add(path + "[" + std::to_string(i) + "]", "expected a number");
      continue;
    }
    out.push_back(j[i].get<double>());
  }
  return out;
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& path, Violations& v) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.count(key)) v.add(path.empty() ? key : path + "." + key, "unexpected field");
  }
}

std::optional<Fn1> parse_fn(const json& j, const std::string& path, Violations& v) {
  if (!j.is_object()) {
    v.add(path, "expected a function object {\"kind\": ...}");
    return std::nullopt;
  }
  const auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string()) {
    v.add(path + ".kind", "missing or not a string");
    return std::nullopt;
  }
  const std::string kind = kind_it->get<std::string>();
  const std::size_t before = v.items.size();
  auto positive = [&](const std::string& key, std::optional<double> x) {
    if (x && !(*x > 0)) v.add(path + "." + key, "must be positive");
    return x;
  };
  if (kind == "phi_r") {
    reject_unknown(j, {"kind", "r"}, path, v);
    const auto r = positive("r", number_at(j, "r", path, v, true));
    if (v.items.size() == before) return Fn1::phi_r(*r);
  } else if (kind == "identity" || kind == "moebius01" || kind == "neg_circle") {
    reject_unknown(j, {"kind"}, path, v);
    if (v.items.size() == before) {
      return kind == "identity" ? Fn1::identity() : kind == "moebius01" ? Fn1::moebius01() : Fn1::neg_circle();
    }
  } else if (kind == "power") {
    reject_unknown(j, {"kind", "p"}, path, v);
    const auto p = positive("p", number_at(j, "p", path, v, true));
    if (v.items.size() == before) return Fn1::power(*p);
  } else if (kind == "affine") {
    reject_unknown(j, {"kind", "slope", "offset"}, path, v);
    const auto slope = number_at(j, "slope", path, v, true);
    const auto offset = number_at(j, "offset", path, v, true);
    if (v.items.size() == before) return Fn1::affine(*slope, *offset);
  } else if (kind == "tan_sin") {
    reject_unknown(j, {"kind", "k"}, path, v);
    const auto k = positive("k", number_at(j, "k", path, v, false));
    if (v.items.size() == before) return Fn1::tan_sin(k.value_or(1.0));
  } else if (kind == "table") {
    reject_unknown(j, {"kind", "knots", "values"}, path, v);
    if (!j.contains("knots")) v.add(path + ".knots", "missing");
    if (!j.contains("values")) v.add(path + ".values", "missing");
    if (v.items.size() != before) return std::nullopt;
    auto knots = number_array(j["knots"], path + ".knots", v);
    auto values = number_array(j["values"], path + ".values", v);
    if (v.items.size() != before) return std::nullopt;
    if (knots.size() < 2) v.add(path + ".knots", "needs at least 2 knots");
    if (knots.size() != values.size()) v.add(path + ".values", "length differs from knots");
    for (std::size_t i = 1; i < knots.size(); ++i) {
      if (!(knots[i] > knots[i - 1])) {
        v.add(path + ".knots[" + std::to_string(i) + "]", "knots must increase strictly");
        break;
      }
    }
    if (v.items.size() == before) {
      try {
        return Fn1::table(std::move(knots), std::move(values));
      } catch (const Error& e) {
        v.add(path, e.what());
      }
    }
  } else {
    v.add(path + ".kind", "unknown function kind \"" + kind + "\"");
  }
  return std::nullopt;
}

void parse_handedness(const json& j, HandednessSpec& hand, Violations& v) {
  if (!j.is_object()) {
    v.add("handedness", "expected an object");
    return;
  }
  reject_unknown(j, {"initial", "switches"}, "handedness", v);
  if (const auto it = j.find("initial"); it != j.end()) {
    const std::string s = it->is_string() ? it->get<std::string>() : "";
    if (s == "right") {
      hand.initial = Handedness::Right;
    } else if (s == "left") {
      hand.initial = Handedness::Left;
    } else {
      v.add("handedness.initial", "expected \"right\" or \"left\"");
    }
  }
  if (const auto it = j.find("switches"); it != j.end()) {
    hand.switches = number_array(*it, "handedness.switches", v);
    if (!std::is_sorted(hand.switches.begin(), hand.switches.end())) {
      v.add("handedness.switches", "must be sorted");
    }
  }
}

void parse_parabolas(const json& j, ParabolaSeq& seq, Violations& v) {
  if (j.is_string() && j.get<std::string>() == "builtin") {
    seq = builtin_parabola_sequence();
    return;
  }
  if (!j.is_array() || j.empty()) {
    v.add("parabolas", "expected \"builtin\" or a non-empty array of [alpha, beta, gamma]");
    return;
  }
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string path = "parabolas[" + std::to_string(i) + "]";
    const auto abc = number_array(j[i], path, v);
    if (abc.size() != 3) {
      v.add(path, "expected [alpha, beta, gamma]");
      continue;
    }
    if (!(abc[0] > 0)) v.add(path + "[0]", "alpha must be positive");
    if (!(abc[2] >= 0)) v.add(path + "[2]", "gamma must be non-negative");
    seq.items.push_back({abc[0], abc[1], abc[2]});
  }
}

void parse_samples(const json& j, std::map<std::string, int>& samples, Violations& v) {
  auto count = [&](const json& x, const std::string& path) -> std::optional<int> {
    if (!x.is_number_integer() || x.get<long long>() < 1 || x.get<long long>() > 10'000'000) {
      v.add(path, "expected a positive integer");
      return std::nullopt;
    }
    return static_cast<int>(x.get<long long>());
  };
  if (j.is_number()) {
    if (const auto n = count(j, "samples")) samples["*"] = *n;
    return;
  }
  if (!j.is_object()) {
    v.add("samples", "expected an integer or an object of per-check counts");
    return;
  }
  const auto& names = all_check_names();
  for (const auto& [key, val] : j.items()) {
    if (std::find(names.begin(), names.end(), key) == names.end()) {
      v.add("samples." + key, "unknown check");
      continue;
    }
    if (const auto n = count(val, "samples." + key)) samples[key] = *n;
  }
}

GlPencil pencil_of(const StarConfig& cfg) { return pencil_from_mu(cfg.functions.at("mu")); }

bool center_on_axis(const StarConfig& cfg) { return cfg.center.x() == 0.0 && cfg.center.y() == 0.0; }

int default_samples(const std::string& check) {
  static const std::map<std::string, int> d{
      {"involution", 1000},       {"fixed_point_free", 1000}, {"no_exterior_meet", 5000},
      {"coverage", 200},          {"rotational", 500},        {"axial", 500},
      {"symmetric", 1024},        {"pz_monotone", 64},        {"h_roots", 16},
      {"pencil_separation", 500}, {"zero_secant", 200},       {"hfd", 100},
      {"class_signature", 50},    {"spread_disjoint", 100},   {"parallel_queries", 100},
      {"dimension", 200},         {"torus", 100},
  };
  return d.at(check);
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return out;
}

std::string format_csv_row(const std::vector<double>& values) {
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) row += ",";
    row += format_number(values[i]);
  }
  return row + "\n";
}

std::vector<double> parse_triple(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size() || item.empty()) throw InvalidInput(what + ": not a number: \"" + item + "\"");
    out.push_back(x);
  }
  if (out.size() != 3) throw InvalidInput(what + ": expected x,y,z");
  return out;
}

void open_for_write(std::ofstream& f, const std::string& path) {
  f.open(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IOError("cannot write " + path);
}

}  // namespace

// ---------------------------------------------------------------- config

StarConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  Violations v;
  StarConfig cfg;
  if (!j.is_object()) throw ConfigError("(root): expected a JSON object");

  const auto fam_it = j.find("family");
  if (fam_it == j.end() || !fam_it->is_string()) {
    v.add("family", "missing or not a string");
  } else if (!family_functions().count(fam_it->get<std::string>())) {
    v.add("family", "unknown family \"" + fam_it->get<std::string>() + "\"");
  } else {
    cfg.family = fam_it->get<std::string>();
  }

  std::set<std::string> known{"family", "handedness", "tol", "seed", "samples"};
  if (!cfg.family.empty()) {
    for (const auto& name : family_functions().at(cfg.family)) {
      known.insert(name);
      const auto it = j.find(name);
      if (it == j.end()) {
        v.add(name, "missing");
      } else if (auto fn = parse_fn(*it, name, v)) {
        cfg.functions.emplace(name, *fn);
      }
    }
    if (cfg.family == "clifford") {
      known.insert("center");
      if (const auto it = j.find("center"); it != j.end()) {
        const auto c = number_array(*it, "center", v);
        if (c.size() == 3) {
          cfg.center = Vec3(c[0], c[1], c[2]);
          if (!(cfg.center.norm() < 1.0)) v.add("center", "must lie inside the unit sphere");
        } else if (it->is_array()) {
          v.add("center", "expected [x, y, z]");
        }
      }
    }
    if (cfg.family == "parabola") {
      known.insert("parabolas");
      if (const auto it = j.find("parabolas"); it != j.end()) {
        parse_parabolas(*it, cfg.parabolas, v);
      } else {
        v.add("parabolas", "missing");
      }
    }
    reject_unknown(j, known, "", v);
  }

  if (const auto it = j.find("handedness"); it != j.end()) parse_handedness(*it, cfg.hand, v);
  if (const auto tol = number_at(j, "tol", "", v, false)) {
    if (*tol > 0) {
      cfg.tol = *tol;
    } else {
      v.add("tol", "must be positive");
    }
  }
  if (const auto it = j.find("seed"); it != j.end()) {
    if (it->is_number_unsigned()) {
      cfg.seed = it->get<std::uint64_t>();
    } else {
      v.add("seed", "expected a non-negative integer");
    }
  }
  if (const auto it = j.find("samples"); it != j.end()) parse_samples(*it, cfg.samples, v);

  if (!v.items.empty()) {
    std::string msg;
    for (const auto& item : v.items) msg += (msg.empty() ? "" : "; ") + item;
    throw ConfigError(msg);
  }
  return cfg;
}

StarConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IOError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

StarConfig builtin_config() {
  return parse_config(R"({"family":"param","t":{"kind":"phi_r","r":1.5},"s":{"kind":"phi_r","r":2.0}})");
}

GlStar build_star(const StarConfig& cfg) {
  const auto& fn = cfg.functions;
  if (cfg.family == "clifford") return clifford(cfg.center);
  if (cfg.family == "symmetric") return symmetric_star(fn.at("a"), cfg.hand);
  if (cfg.family == "fg") return fg_star(fn.at("f"), fn.at("g"), cfg.hand);
  if (cfg.family == "eqn") return eqn_star(fn.at("b"), fn.at("c"), cfg.hand);
  if (cfg.family == "param") return param_star(fn.at("t"), fn.at("s"), cfg.hand);
  if (cfg.family == "latitudinal") return latitudinal(pencil_of(cfg));
  if (cfg.family == "parabola") return parabola_star(cfg.parabolas, cfg.hand);
  throw ConfigError("family: unknown family \"" + cfg.family + "\"");
}

// ---------------------------------------------------------------- checks

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names{
      "involution",        "fixed_point_free", "no_exterior_meet", "coverage",        "rotational",
      "axial",             "symmetric",        "pz_monotone",      "h_roots",         "pencil_separation",
      "zero_secant",       "hfd",              "class_signature",  "spread_disjoint", "parallel_queries",
      "dimension",         "torus",
  };
  return names;
}

std::vector<std::string> applicable_checks(const StarConfig& cfg) {
  std::set<std::string> on{"involution", "fixed_point_free", "no_exterior_meet", "coverage",
                           "zero_secant", "hfd", "class_signature", "spread_disjoint",
                           "parallel_queries", "dimension", "torus"};
  const bool clifford_on_axis = cfg.family == "clifford" && center_on_axis(cfg);
  if (cfg.family != "clifford" || clifford_on_axis) on.insert("rotational");
  if (cfg.family == "latitudinal" || clifford_on_axis) on.insert("axial");
  if (cfg.family == "symmetric" || (cfg.family == "clifford" && cfg.center.isZero(0.0))) on.insert("symmetric");
  if (cfg.family == "param") {
    on.insert("pz_monotone");
    on.insert("h_roots");
  }
  if (cfg.family == "latitudinal") on.insert("pencil_separation");
  std::vector<std::string> out;
  for (const auto& name : all_check_names()) {
    if (on.count(name)) out.push_back(name);
  }
  return out;
}

std::string render_report(const std::vector<CheckReport>& reports) {
  std::string out;
  int passed = 0;
  for (const auto& r : reports) {
    out += "CHECK " + r.name + ": " + (r.passed ? "PASS" : "FAIL") + " max_residual=" + format_number(r.max_residual) +
           " samples=" + std::to_string(r.samples_used);
    if (r.witness) out += " witness=" + *r.witness;
    out += "\n";
    passed += r.passed ? 1 : 0;
  }
  const bool all = passed == static_cast<int>(reports.size());
  out += std::string("RESULT: ") + (all ? "PASS" : "FAIL") + " (" + std::to_string(passed) + "/" +
         std::to_string(reports.size()) + ")\n";
  return out;
}

CommandResult cmd_construct(const StarConfig& cfg) {
  try {
    const GlStar star = build_star(cfg);
    std::string text = "CONSTRUCT: OK family=" + cfg.family + " label=" + star.label() + "\n";
    for (const auto& [name, fn] : cfg.functions) text += "  " + name + " = " + fn.describe() + "\n";
    return {kExitPass, text};
  } catch (const Error& e) {
    return {kExitConstruction, std::string("CONSTRUCT: FAILED ") + e.what() + "\n"};
  }
}

CommandResult cmd_verify(const StarConfig& cfg, const RunFlags& flags) {
  std::vector<std::string> selected = applicable_checks(cfg);
  if (!flags.checks.empty()) {
    const auto& names = all_check_names();
    for (const auto& c : flags.checks) {
      if (std::find(names.begin(), names.end(), c) == names.end()) {
        return {kExitConstruction, "ERROR: unknown check \"" + c + "\"\n"};
      }
    }
    std::vector<std::string> subset;
    for (const auto& name : names) {
      if (std::find(flags.checks.begin(), flags.checks.end(), name) != flags.checks.end()) subset.push_back(name);
    }
    selected = subset;
  }

  std::optional<GlStar> star;
  try {
    star.emplace(build_star(cfg));
  } catch (const Error& e) {
    return {kExitConstruction, std::string("CONSTRUCT: FAILED ") + e.what() + "\n"};
  }

  const double tol = flags.tol.value_or(cfg.tol);
  const std::uint64_t seed = flags.seed.value_or(cfg.seed);
  auto n_of = [&](const std::string& check) {
    if (flags.samples) return *flags.samples;
    if (const auto it = cfg.samples.find(check); it != cfg.samples.end()) return it->second;
    if (const auto it = cfg.samples.find("*"); it != cfg.samples.end()) return it->second;
    return default_samples(check);
  };
  auto wants = [&](std::initializer_list<const char*> names) {
    return std::any_of(names.begin(), names.end(), [&](const char* n) {
      return std::find(selected.begin(), selected.end(), n) != selected.end();
    });
  };

  std::optional<EmbeddedStar> es;
  std::optional<Parallelism> par;
  if (wants({"zero_secant", "hfd", "class_signature", "spread_disjoint", "parallel_queries", "dimension", "torus"})) {
    es.emplace(embed_star(*star));
    if (wants({"hfd", "class_signature", "spread_disjoint", "parallel_queries"})) par.emplace(*es);
  }

  std::vector<CheckReport> reports;
  for (const auto& name : selected) {
    const int n = n_of(name);
    try {
      if (name == "involution") {
        reports.push_back(check_involution(*star, n, tol));
      } else if (name == "fixed_point_free") {
        reports.push_back(check_fixed_point_free(*star, n, 0.1));
      } else if (name == "no_exterior_meet") {
        reports.push_back(check_no_exterior_meet(*star, n, 10 * tol, seed));
      } else if (name == "coverage") {
        reports.push_back(check_coverage(*star, n, tol, seed));
      } else if (name == "rotational") {
        reports.push_back(check_rotational(*star, n, tol, seed));
      } else if (name == "axial") {
        reports.push_back(check_axial(*star, n, 10 * tol, seed));
      } else if (name == "symmetric") {
        reports.push_back(check_symmetric(*star, n, tol));
      } else if (name == "pz_monotone" || name == "h_roots") {
        if (cfg.family != "param") throw InvalidInput(name + " applies to the param family only");
        const Fn1& t = cfg.functions.at("t");
        const Fn1& s = cfg.functions.at("s");
        if (name == "pz_monotone") {
          // An even count keeps z = 0 out of the grid.
          reports.push_back(check_pz_monotone(t, s, linspace(-2.5, 2.5, 2 * ((n + 1) / 2))));
        } else {
          auto z = linspace(1.05, 3.0, std::max(1, n / 2));
          const std::size_t half = z.size();
          for (std::size_t i = 0; i < half; ++i) z.push_back(-z[i]);
          reports.push_back(check_h_roots(t, s, linspace(0.1, 3.0, n), z));
        }
      } else if (name == "pencil_separation") {
        if (cfg.family != "latitudinal") throw InvalidInput(name + " applies to the latitudinal family only");
        reports.push_back(check_pencil_separation(pencil_of(cfg), n, seed));
      } else if (name == "zero_secant") {
        reports.push_back(check_zero_secants(HfdLineSet(*es), n));
      } else if (name == "hfd") {
        reports.push_back(check_hfd(*par, n, seed));
      } else if (name == "class_signature") {
        reports.push_back(check_class_signatures(*par, n, seed));
      } else if (name == "spread_disjoint") {
        reports.push_back(check_spread_disjoint(*par, n, seed));
      } else if (name == "parallel_queries") {
        reports.push_back(check_parallel_queries(*par, n, seed));
      } else if (name == "dimension") {
        reports.push_back(check_dimension(HfdLineSet(*es), n));
      } else if (name == "torus") {
        reports.push_back(check_torus_fixes_classes(*es, n));
      }
    } catch (const Error& e) {
      reports.push_back({name, false, 0.0, std::string(e.what()), 0});
    }
  }
  const std::string text = render_report(reports);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  return {ok ? kExitPass : kExitCheckFailure, text};
}

// ---------------------------------------------------------------- export

void write_lines_csv(const GlStar& star, std::ostream& out, int rows) {
  constexpr int kTheta = 16;
  const int n_t = std::max(2, (rows + kTheta - 1) / kTheta);
  out << "t,theta,x1,y1,z1,x2,y2,z2\n";
  for (int i = 0; i < n_t; ++i) {
    const double t = static_cast<double>(i) / (n_t - 1);
    for (int j = 0; j < kTheta; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / kTheta;
      const Vec3 q = j == 0 ? meridian_point(t) : rotate_z(meridian_point(t), theta);
      const Vec3 p = star.sigma(q);
      out << format_csv_row({t, theta, q.x(), q.y(), q.z(), p.x(), p.y(), p.z()});
    }
  }
}

void write_mesh_obj(const GlStar& star, std::ostream& out, int n_surfaces, int n_u, int n_v) {
  if (!star.has_profile()) throw InvalidInput("mesh export needs a rotational star");
  if (n_surfaces < 1) throw InvalidInput("mesh export needs at least one surface");
  out << "# surfaces of revolution of " << star.label() << "\n";
  int offset = 1;
  for (int k = 0; k < n_surfaces; ++k) {
    const double t = n_surfaces == 1 ? 0.5 : static_cast<double>(k) / (n_surfaces - 1);
    const SurfaceEntry e = star.profile()->entry_at(t);
    const Mesh mesh = surface_mesh(e, n_u, n_v);
    out << "o " << to_string(e.kind) << "_t" << format_number(t) << "\n";
    for (const Vec3& v : mesh.vertices) {
      out << "v " << format_number(v.x()) << " " << format_number(v.y()) << " " << format_number(v.z()) << "\n";
    }
    for (const auto& tri : mesh.triangles) {
      out << "f " << tri[0] + offset << " " << tri[1] + offset << " " << tri[2] + offset << "\n";
    }
    for (const auto& seg : mesh.segments) out << "l " << seg[0] + offset << " " << seg[1] + offset << "\n";
    offset += static_cast<int>(mesh.vertices.size());
  }
}

void write_hfd_csv(const GlStar& star, std::ostream& out, int n) {
  const HfdLineSet hfd(embed_star(star));
  out << "a0,a1,a2,a3,a4,a5,b0,b1,b2,b3,b4,b5\n";
  for (const Line5& h : hfd.sample(n)) {
    std::vector<double> row(h.a.data(), h.a.data() + 6);
    row.insert(row.end(), h.b.data(), h.b.data() + 6);
    out << format_csv_row(row);
  }
}

CommandResult cmd_export(const StarConfig& cfg, const ExportTargets& targets, const RunFlags& flags) {
  if (!targets.lines && !targets.mesh && !targets.hfd) {
    return {kExitConstruction, "ERROR: export needs --lines, --mesh or --hfd\n"};
  }
  std::optional<GlStar> star;
  try {
    star.emplace(build_star(cfg));
  } catch (const Error& e) {
    return {kExitConstruction, std::string("CONSTRUCT: FAILED ") + e.what() + "\n"};
  }
  std::string text;
  try {
    if (targets.lines) {
      std::ofstream f;
      open_for_write(f, *targets.lines);
      write_lines_csv(*star, f, flags.samples.value_or(512));
      text += "EXPORT lines " + *targets.lines + "\n";
    }
    if (targets.mesh) {
      std::ofstream f;
      open_for_write(f, *targets.mesh);
      write_mesh_obj(*star, f);
      text += "EXPORT mesh " + *targets.mesh + "\n";
    }
    if (targets.hfd) {
      std::ofstream f;
      open_for_write(f, *targets.hfd);
      write_hfd_csv(*star, f, flags.samples.value_or(200));
      text += "EXPORT hfd " + *targets.hfd + "\n";
    }
  } catch (const Error& e) {
    return {kExitConstruction, text + "ERROR: " + e.what() + "\n"};
  }
  return {kExitPass, text};
}

// ---------------------------------------------------------------- parallel

CommandResult cmd_parallel(const StarConfig& cfg, const std::string& line, const std::string& point) {
  std::vector<double> a, b, p;
  try {
    const auto semi = line.find(';');
    if (semi == std::string::npos) throw InvalidInput("--line: expected x,y,z;x,y,z");
    a = parse_triple(line.substr(0, semi), "--line");
    b = parse_triple(line.substr(semi + 1), "--line");
    p = parse_triple(point, "--point");
  } catch (const Error& e) {
    return {kExitQuery, std::string("ERROR: ") + e.what() + "\n"};
  }
  std::optional<GlStar> star;
  try {
    star.emplace(build_star(cfg));
  } catch (const Error& e) {
    return {kExitConstruction, std::string("CONSTRUCT: FAILED ") + e.what() + "\n"};
  }
  try {
    const PLine L = PLine::through_affine(Vec3(a[0], a[1], a[2]), Vec3(b[0], b[1], b[2]));
    const Parallelism par(embed_star(*star));
    const PLine m = par.parallel_through(HPoint(Eigen::Vector4d(1.0, p[0], p[1], p[2])), L);
    // Canonical spanning points: orthonormal, each with its largest entry positive.
    auto pts = m.spanning_points();
    std::string text;
    for (int i = 0; i < 2; ++i) {
      Vec4 v = pts[static_cast<std::size_t>(i)];
      Eigen::Index k = 0;
      v.cwiseAbs().maxCoeff(&k);
      if (v[k] < 0) v = -v;
      text += "POINT" + std::to_string(i + 1) + " " + format_point(v) + "\n";
    }
    text += "PLUCKER " + format_point(m.unit()) + "\n";
    return {kExitPass, text};
  } catch (const Error& e) {
    return {kExitQuery, std::string("ERROR: ") + e.what() + "\n"};
  }
}

}  // namespace glstar
