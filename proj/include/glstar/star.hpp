#pragma once

// The gl-star data model. A gl star on the unit sphere S^2 is given by a
// fixed point free involution sigma; its lines are q v sigma(q). Rotational
// stars (invariant under rotations about the z-axis Z) carry a profile that
// records, for each meridian point p_t = (sqrt(1 - t^2), 0, t), the image
// sigma(p_t) together with the cone or hyperboloid swept by the orbit of the
// line L_t = p_t v sigma(p_t).

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glstar/projgeom.hpp"

namespace glstar {

enum class Handedness { Left, Right };
enum class LineHandedness { Left, Right, MeetsAxis };

const char* to_string(Handedness h);
const char* to_string(LineHandedness h);

enum class SurfaceKind { Axis, HorizontalStar, Cone, Hyperboloid };
const char* to_string(SurfaceKind k);

/// A rotation-invariant surface a^2 (x^2 + y^2) - (z - b)^2 = c^2, or one of the
/// two degenerate orbits (the axis Z and the horizontal lines through the origin).
struct SurfaceEntry {
  SurfaceKind kind = SurfaceKind::Axis;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  Handedness hand = Handedness::Right;

  static SurfaceEntry axis() { return {SurfaceKind::Axis}; }
  static SurfaceEntry horizontal_star() { return {SurfaceKind::HorizontalStar}; }
  /// Cone when c == 0, hyperboloid otherwise.
  static SurfaceEntry quadric(double a, double b, double c, Handedness hand = Handedness::Right);

  /// Algebraic residual of the defining equation at p.
  double residual(const Vec3& p) const;
};

/// Two points of a line, usually its two sphere points.
struct Chord {
  Vec3 a;
  Vec3 b;
  PLine line() const { return PLine::through_affine(a, b); }
  Chord rotated(double theta) const { return {rotate_z(a, theta), rotate_z(b, theta)}; }
};

/// p_t = (sqrt(1 - t^2), 0, t).
Vec3 meridian_point(double t);

/// Surface swept by rotating the line through p and q about Z (p, q distinct).
SurfaceEntry entry_of_line(const Vec3& p, const Vec3& q, double cone_tol = 1e-12);

/// The second sphere point of the line through p_t lying on `entry`, in the
/// regulus named by its handedness.
Vec3 image_from_entry(const SurfaceEntry& entry, double t);

class RotationalProfile {
 public:
  using ImageFn = std::function<Vec3(double)>;
  using EntryFn = std::function<SurfaceEntry(double)>;
  using PreimageFn = std::function<double(double)>;

  /// Profile given by t -> sigma(p_t); surface entries are derived from the lines.
  static RotationalProfile from_images(ImageFn images, PreimageFn preimage = {});
  /// Profile given by t -> surface entry; sigma(p_t) is the second intersection.
  static RotationalProfile from_entries(EntryFn entries, PreimageFn preimage = {});

  SurfaceEntry entry_at(double t) const;
  /// sigma(p_t) for t in [0, 1].
  Vec3 image(double t) const;
  /// The t in [0, 1] with image(t).z() == z, for z in [-1, 0].
  double preimage(double z) const;

 private:
  ImageFn images_;
  EntryFn entries_;
  PreimageFn preimage_;
};

class GlStar {
 public:
  using SigmaFn = std::function<Vec3(const Vec3&)>;

  GlStar(std::string label, SigmaFn sigma);
  GlStar(std::string label, RotationalProfile profile);

  const std::string& label() const noexcept { return label_; }
  const std::optional<RotationalProfile>& profile() const noexcept { return profile_; }
  bool has_profile() const noexcept { return profile_.has_value(); }

  Vec3 sigma(const Vec3& q) const;
  Chord chord(const Vec3& q) const { return {q, sigma(q)}; }
  PLine line_through(const Vec3& q) const;

  /// Lines are charted by sphere points q(u, theta) = (cos u cos theta, cos u sin theta, sin u)
  /// with u in [chart_u_min(), pi/2]. Rotational stars only need the upper hemisphere.
  double chart_u_min() const noexcept;
  Chord chord_at(double u, double theta) const;

 private:
  std::string label_;
  SigmaFn sigma_;
  std::optional<RotationalProfile> profile_;
};

Vec3 sigma(const GlStar& star, const Vec3& q);
PLine line_through(const GlStar& star, const Vec3& q);
/// L_t = p_t v sigma(p_t); L_0 = X, L_1 = Z.
PLine meridian_line(const RotationalProfile& profile, double t);

/// Right iff two points with z1 < z2 have x1 y2 - x2 y1 > 0.
LineHandedness handedness_of(const PLine& line, double tol = 1e-10);

/// The other sphere point of a 2-secant through q.
HPoint second_intersection(const PLine& line, const Vec3& q, double tol = kDefaultTol);

struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;  // 0-based
  std::vector<std::array<int, 2>> segments;   // 0-based, used for the axis
};

/// Triangulated surface of revolution for `entry`, clipped to z in [z_min, z_max].
Mesh surface_mesh(const SurfaceEntry& entry, int n_u, int n_v, double z_min = -2.0,
                  double z_max = 2.0);

}  // namespace glstar
