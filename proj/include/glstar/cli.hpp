#pragma once

// JSON star configurations and the command implementations behind the
// glstar tool. Commands return their text and exit code instead of printing,
// so they can be driven from tests and bindings.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glstar/constructions.hpp"
#include "glstar/verify.hpp"

namespace glstar {

enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailure = 1,
  kExitConstruction = 2,
  kExitQuery = 3,
};

struct StarConfig {
  std::string family;
  /// Function fields by name ("a", "f", "g", "b", "c", "t", "s", "mu").
  std::map<std::string, Fn1> functions;
  Vec3 center = Vec3::Zero();
  HandednessSpec hand;
  ParabolaSeq parabolas;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  /// Per-check sample counts; "*" applies to every check.
  std::map<std::string, int> samples;
};

/// Throws ParseError (with byte offset) on malformed JSON and ConfigError
/// listing every violation by field path.
StarConfig parse_config(std::string_view text);
StarConfig load_config(const std::string& path);
/// {"family":"param"} with t = phi_{3/2}, s = phi_2.
StarConfig builtin_config();

/// Runs the family's builder; construction errors propagate.
GlStar build_star(const StarConfig& cfg);

/// Every check name known to cmd_verify, in report order.
const std::vector<std::string>& all_check_names();
/// The checks whose properties the family guarantees.
std::vector<std::string> applicable_checks(const StarConfig& cfg);

struct RunFlags {
  std::optional<int> samples;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  /// Empty means every applicable check.
  std::vector<std::string> checks;
};

struct CommandResult {
  int exit_code = kExitPass;
  std::string text;
};

/// "CHECK <name>: PASS|FAIL max_residual=<g17> samples=<n> [witness=...]" per
/// report, then "RESULT: PASS|FAIL (k/m)".
std::string render_report(const std::vector<CheckReport>& reports);

CommandResult cmd_construct(const StarConfig& cfg);
CommandResult cmd_verify(const StarConfig& cfg, const RunFlags& flags = {});

/// Rows "t,theta,x1,y1,z1,x2,y2,z2" for rows/16 values of t in [0, 1] and 16
/// angles; the two points are q(t, theta) and sigma of it.
void write_lines_csv(const GlStar& star, std::ostream& out, int rows = 512);
/// One OBJ object per sampled profile surface; faces are 1-based triangles.
void write_mesh_obj(const GlStar& star, std::ostream& out, int n_surfaces = 9, int n_u = 32,
                    int n_v = 16);
/// Two spanning 6-vectors per sampled H-line.
void write_hfd_csv(const GlStar& star, std::ostream& out, int n = 200);

struct ExportTargets {
  std::optional<std::string> lines;
  std::optional<std::string> mesh;
  std::optional<std::string> hfd;
};
CommandResult cmd_export(const StarConfig& cfg, const ExportTargets& targets, const RunFlags& flags = {});

/// line "x,y,z;x,y,z" (two affine points) and point "x,y,z".
CommandResult cmd_parallel(const StarConfig& cfg, const std::string& line, const std::string& point);

}  // namespace glstar
