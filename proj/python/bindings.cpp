#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "glstar/cli.hpp"
#include "glstar/constructions.hpp"
#include "glstar/error.hpp"
#include "glstar/parallelism.hpp"
#include "glstar/verify.hpp"

namespace py = pybind11;
using namespace glstar;

namespace {

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed;
  d["max_residual"] = r.max_residual;
  d["samples"] = r.samples_used;
  d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
  return d;
}

Parabola parabola_of(const std::array<double, 3>& abg) { return {abg[0], abg[1], abg[2]}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "gl stars on the unit sphere and the regular parallelisms they induce";

  auto base = py::register_exception<Error>(m, "GlstarError", PyExc_RuntimeError);
  py::register_exception<ConditionFailed>(m, "ConditionFailed", base);
  py::register_exception<InvalidInput>(m, "InvalidInput", base);
  py::register_exception<NotTwoSecant>(m, "NotTwoSecant", base);
  py::register_exception<InvalidCenter>(m, "InvalidCenter", base);
  py::register_exception<NotZeroSecant>(m, "NotZeroSecant", base);
  py::register_exception<DegenerateMeet>(m, "DegenerateMeet", base);
  py::register_exception<SearchFailed>(m, "SearchFailed", base);
  py::register_exception<HfdViolation>(m, "HfdViolation", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<ConfigError>(m, "ConfigError", base);

  py::class_<Fn1>(m, "Fn1")
      .def_static("phi_r", &Fn1::phi_r, py::arg("r"))
      .def_static("identity", &Fn1::identity)
      .def_static("moebius01", &Fn1::moebius01)
      .def_static("power", &Fn1::power, py::arg("p"))
      .def_static("affine", &Fn1::affine, py::arg("slope"), py::arg("offset"))
      .def_static("table", &Fn1::table, py::arg("knots"), py::arg("values"))
      .def_static("tan_sin", &Fn1::tan_sin, py::arg("k") = 1.0)
      .def_static("neg_circle", &Fn1::neg_circle)
      .def_static("custom", &Fn1::custom, py::arg("name"), py::arg("fn"))
      .def("__call__", &Fn1::operator(), py::arg("x"));

  py::class_<PLine>(m, "PLine")
      .def(py::init<const Vec6&>(), py::arg("plucker"))
      .def_static("through", [](const Vec3& a, const Vec3& b) { return PLine::through_affine(a, b); })
      .def_property_readonly("plucker", &PLine::coords)
      .def("contains", [](const PLine& l, const Vec4& x, double tol) { return l.contains(x, tol); },
           py::arg("x"), py::arg("tol") = 1e-9)
      .def("__repr__", [](const PLine& l) { return "PLine" + format_point(l.coords()); });

  py::class_<GlStar>(m, "GlStar")
      .def_property_readonly("label", &GlStar::label)
      .def_property_readonly("rotational", &GlStar::has_profile)
      .def("sigma", &GlStar::sigma, py::arg("q"))
      .def("line_through", &GlStar::line_through, py::arg("q"))
      .def("__repr__", [](const GlStar& s) { return "GlStar(" + s.label() + ")"; });

  m.def("clifford", &clifford, py::arg("center"));
  m.def("symmetric_star", [](const Fn1& a) { return symmetric_star(a); }, py::arg("a"));
  m.def("fg_star", [](const Fn1& f, const Fn1& g) { return fg_star(f, g); }, py::arg("f"), py::arg("g"));
  m.def("eqn_star", [](const Fn1& b, const Fn1& c) { return eqn_star(b, c); }, py::arg("b"), py::arg("c"));
  m.def("param_star", [](const Fn1& t, const Fn1& s) { return param_star(t, s); }, py::arg("t"), py::arg("s"));
  m.def("builtin_example", &builtin_example);
  m.def("param_h", &param_h, py::arg("t"), py::arg("s"), py::arg("x"), py::arg("z"), py::arg("a"));
  m.def(
      "builtin_numerator", [](double x, double z) { return builtin_numerator(x, z).coeffs; }, py::arg("x"),
      py::arg("z"));
  m.def(
      "latitudinal", [](const Fn1& u) { return latitudinal(pencil_from_mu(u)); }, py::arg("u"));
  m.def(
      "parabola_star",
      [](const std::vector<std::array<double, 3>>& items) {
        ParabolaSeq seq;
        for (const auto& abg : items) seq.items.push_back(parabola_of(abg));
        return parabola_star(seq);
      },
      py::arg("parabolas"));
  m.def("builtin_parabolas", [] {
    std::vector<std::array<double, 3>> out;
    for (const Parabola& p : builtin_parabola_sequence().items) out.push_back({p.alpha, p.beta, p.gamma});
    return out;
  });

  m.def(
      "check_involution", [](const GlStar& s, int n, double tol) { return report_dict(check_involution(s, n, tol)); },
      py::arg("star"), py::arg("n") = 1000, py::arg("tol") = 1e-9);
  m.def(
      "check_fixed_point_free",
      [](const GlStar& s, int n, double margin) { return report_dict(check_fixed_point_free(s, n, margin)); },
      py::arg("star"), py::arg("n") = 1000, py::arg("margin") = 0.05);
  m.def(
      "check_no_exterior_meet",
      [](const GlStar& s, int n, double tol, std::uint64_t seed) {
        return report_dict(check_no_exterior_meet(s, n, tol, seed));
      },
      py::arg("star"), py::arg("n") = 5000, py::arg("tol") = 1e-8, py::arg("seed") = 0);
  m.def(
      "check_coverage",
      [](const GlStar& s, int n, double tol, std::uint64_t seed) {
        return report_dict(check_coverage(s, n, tol, seed));
      },
      py::arg("star"), py::arg("n") = 200, py::arg("tol") = 1e-9, py::arg("seed") = 0);
  m.def(
      "check_rotational", [](const GlStar& s) { return report_dict(check_rotational(s)); }, py::arg("star"));
  m.def(
      "check_axial", [](const GlStar& s) { return report_dict(check_axial(s)); }, py::arg("star"));
  m.def(
      "check_symmetric", [](const GlStar& s) { return report_dict(check_symmetric(s)); }, py::arg("star"));

  py::class_<Parallelism>(m, "Parallelism")
      .def(py::init([](const GlStar& s) { return Parallelism(embed_star(s)); }), py::arg("star"))
      .def("parallel_through",
           [](const Parallelism& p, const Vec3& point, const PLine& line) {
             return p.parallel_through(HPoint::affine(point), line);
           },
           py::arg("point"), py::arg("line"))
      .def("class_plucker_basis",
           [](const Parallelism& p, const PLine& line) {
             return Eigen::MatrixXd(p.parallel_class_of(line).W.orthonormal());
           },
           py::arg("line"))
      .def("dimension", [](const Parallelism& p, int n) { return dim_parallelism(p.hfd(), n).dim; },
           py::arg("n") = 200)
      .def("check", [](const Parallelism& p, const std::string& name, int n, std::uint64_t seed) {
        if (name == "zero_secant") return report_dict(check_zero_secants(p.hfd(), n));
        if (name == "hfd") return report_dict(check_hfd(p, n, seed));
        if (name == "class_signature") return report_dict(check_class_signatures(p, n, seed));
        if (name == "spread_disjoint") return report_dict(check_spread_disjoint(p, n, seed));
        if (name == "parallel_queries") return report_dict(check_parallel_queries(p, n, seed));
        if (name == "dimension") return report_dict(check_dimension(p.hfd(), n));
        if (name == "torus") return report_dict(check_torus_fixes_classes(p.embedded(), n));
        throw InvalidInput("unknown parallelism check " + name);
      }, py::arg("name"), py::arg("n") = 100, py::arg("seed") = 0);

  m.def(
      "verify_config",
      [](const std::string& json, std::optional<std::uint64_t> seed, std::vector<std::string> checks) {
        RunFlags flags;
        flags.seed = seed;
        flags.checks = std::move(checks);
        const CommandResult r = cmd_verify(parse_config(json), flags);
        return py::make_tuple(r.exit_code, r.text);
      },
      py::arg("config_json"), py::arg("seed") = py::none(), py::arg("checks") = std::vector<std::string>{});
  m.def(
      "build_star", [](const std::string& json) { return build_star(parse_config(json)); }, py::arg("config_json"));
}
