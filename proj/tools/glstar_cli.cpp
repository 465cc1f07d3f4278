// glstar: construct, verify and export gl stars and their parallelisms.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "glstar/cli.hpp"

namespace {

struct Options {
  std::string config;
  std::optional<int> samples;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::string checks;
  std::string out;
  std::string lines, mesh, hfd;
  std::string line, point;
};

void add_common(CLI::App* cmd, Options& o, bool needs_config) {
  auto* c = cmd->add_option("--config", o.config, "JSON star configuration");
  if (needs_config) c->required()->check(CLI::ExistingFile);
  cmd->add_option("--samples", o.samples, "sample count for every check (export: row count)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", o.tol, "residual tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--checks", o.checks, "comma separated subset of checks");
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int emit(const glstar::CommandResult& r, const std::string& out) {
  if (out.empty()) {
    std::fwrite(r.text.data(), 1, r.text.size(), r.exit_code == 0 || r.exit_code == 1 ? stdout : stderr);
    return r.exit_code;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) {
    std::fprintf(stderr, "ERROR: cannot write %s\n", out.c_str());
    return glstar::kExitConstruction;
  }
  f << r.text;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized line stars on the sphere and the parallelisms they induce"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "build and validate a star");
  auto* verify = app.add_subcommand("verify", "run the applicable checks");
  auto* exp = app.add_subcommand("export", "write line samples, meshes or H-lines");
  auto* parallel = app.add_subcommand("parallel", "the parallel of a line through a point");
  auto* demo = app.add_subcommand("demo", "verify the builtin example");
  for (auto* cmd : {construct, verify, exp, parallel}) add_common(cmd, o, true);
  add_common(demo, o, false);
  exp->add_option("--lines", o.lines, "lines CSV path");
  exp->add_option("--mesh", o.mesh, "OBJ mesh path");
  exp->add_option("--hfd", o.hfd, "H-line CSV path");
  parallel->add_option("--line", o.line, "two affine points x,y,z;x,y,z")->required();
  parallel->add_option("--point", o.point, "affine point x,y,z")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : glstar::kExitConstruction;
  }

  glstar::RunFlags flags;
  flags.samples = o.samples;
  flags.tol = o.tol;
  flags.seed = o.seed;
  flags.checks = split(o.checks);

  glstar::StarConfig cfg;
  try {
    cfg = o.config.empty() ? glstar::builtin_config() : glstar::load_config(o.config);
  } catch (const glstar::Error& e) {
    std::fprintf(stderr, "ERROR: %s\n", e.what());
    return glstar::kExitConstruction;
  }

  if (*construct) return emit(glstar::cmd_construct(cfg), o.out);
  if (*verify || *demo) return emit(glstar::cmd_verify(cfg, flags), o.out);
  if (*exp) {
    glstar::ExportTargets t;
    if (!o.lines.empty()) t.lines = o.lines;
    if (!o.mesh.empty()) t.mesh = o.mesh;
    if (!o.hfd.empty()) t.hfd = o.hfd;
    return emit(glstar::cmd_export(cfg, t, flags), o.out);
  }
  return emit(glstar::cmd_parallel(cfg, o.line, o.point), o.out);
}
