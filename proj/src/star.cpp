#include "glstar/star.hpp"

#include <cmath>
#include <numbers>

namespace glstar {

const char* to_string(Handedness h) { return h == Handedness::Left ? "left" : "right"; }

const char* to_string(LineHandedness h) {
  switch (h) {
    case LineHandedness::Left: return "left";
    case LineHandedness::Right: return "right";
    case LineHandedness::MeetsAxis: return "meets-axis";
  }
  return "?";
}

const char* to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::Axis: return "axis";
    case SurfaceKind::HorizontalStar: return "horizontal-star";
    case SurfaceKind::Cone: return "cone";
    case SurfaceKind::Hyperboloid: return "hyperboloid";
  }
  return "?";
}

SurfaceEntry SurfaceEntry::quadric(double a, double b, double c, Handedness hand) {
  if (!(a > 0) || !std::isfinite(a)) throw InvalidInput("surface slope a must be positive");
  if (c < 0) throw InvalidInput("surface parameter c must be nonnegative");
  return {c == 0.0 ? SurfaceKind::Cone : SurfaceKind::Hyperboloid, a, b, c, hand};
}

double SurfaceEntry::residual(const Vec3& p) const {
  const double r2 = p.x() * p.x() + p.y() * p.y();
  switch (kind) {
    case SurfaceKind::Axis: return std::sqrt(r2);
    case SurfaceKind::HorizontalStar: return std::abs(p.z());
    default: {
      const double dz = p.z() - b;
      // Scaled so the residual is comparable across slopes.
      return std::abs(a * a * r2 - dz * dz - c * c) / (1.0 + a * a);
    }
  }
}

Vec3 meridian_point(double t) { return Vec3(std::sqrt(std::max(0.0, 1.0 - t * t)), 0.0, t); }

SurfaceEntry entry_of_line(const Vec3& p, const Vec3& q, double cone_tol) {
  const Vec3 d = q - p;
  const Eigen::Vector2d pxy = p.head<2>();
  const Eigen::Vector2d dxy = d.head<2>();
  const double scale = d.norm();
  if (dxy.norm() <= 1e-14 * scale) return SurfaceEntry::axis();
  if (std::abs(d.z()) <= 1e-14 * scale) return SurfaceEntry::horizontal_star();
  const double a = std::abs(d.z()) / dxy.norm();
  const double lambda = -pxy.dot(dxy) / dxy.squaredNorm();
  const double b = p.z() + lambda * d.z();
  const double dist = (pxy + lambda * dxy).norm();
  const double cross = pxy.x() * dxy.y() - pxy.y() * dxy.x();
  const Handedness hand = cross * d.z() > 0 ? Handedness::Right : Handedness::Left;
  if (dist <= cone_tol * std::max(1.0, p.norm())) return SurfaceEntry::quadric(a, b, 0.0);
  return SurfaceEntry::quadric(a, b, a * dist, hand);
}

Vec3 image_from_entry(const SurfaceEntry& entry, double t) {
  switch (entry.kind) {
    case SurfaceKind::Axis: return Vec3(0.0, 0.0, -1.0);
    case SurfaceKind::HorizontalStar: return Vec3(-1.0, 0.0, 0.0);
    default: break;
  }
  const Vec3 p = meridian_point(t);
  const double sign = entry.hand == Handedness::Right ? 1.0 : -1.0;
  const Vec3 d(t - entry.b, sign * entry.c, entry.a * entry.a * p.x());
  const double lambda = -2.0 * p.dot(d) / d.squaredNorm();
  if (!std::isfinite(lambda)) throw EvalError("degenerate meridian line at t=" + std::to_string(t));
  return p + lambda * d;
}

// ---------------------------------------------------------------- profile

RotationalProfile RotationalProfile::from_images(ImageFn images, PreimageFn preimage) {
  RotationalProfile p;
  p.images_ = std::move(images);
  p.preimage_ = std::move(preimage);
  return p;
}

RotationalProfile RotationalProfile::from_entries(EntryFn entries, PreimageFn preimage) {
  RotationalProfile p;
  p.entries_ = std::move(entries);
  p.preimage_ = std::move(preimage);
  return p;
}

SurfaceEntry RotationalProfile::entry_at(double t) const {
  if (t <= 0.0) return SurfaceEntry::horizontal_star();
  if (t >= 1.0) return SurfaceEntry::axis();
  if (entries_) return entries_(t);
  return entry_of_line(meridian_point(t), images_(t));
}

Vec3 RotationalProfile::image(double t) const {
  if (t <= 0.0) return Vec3(-1.0, 0.0, 0.0);
  if (t >= 1.0) return Vec3(0.0, 0.0, -1.0);
  if (images_) return images_(t);
  return image_from_entry(entries_(t), t);
}

double RotationalProfile::preimage(double z) const {
  if (z >= 0.0) return 0.0;
  if (z <= -1.0) return 1.0;
  if (preimage_) return preimage_(z);
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo < 1e-17) break;
    if (image(mid).z() > z) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------- star

GlStar::GlStar(std::string label, SigmaFn sigma) : label_(std::move(label)), sigma_(std::move(sigma)) {}

GlStar::GlStar(std::string label, RotationalProfile profile)
    : label_(std::move(label)), profile_(std::move(profile)) {}

Vec3 GlStar::sigma(const Vec3& q) const {
  if (std::abs(q.norm() - 1.0) > 1e-8) throw InvalidInput("sigma expects a point of the unit sphere");
  if (!profile_) return sigma_(q);
  const double theta = std::atan2(q.y(), q.x());
  if (q.z() >= 0.0) return rotate_z(profile_->image(std::min(1.0, q.z())), theta);
  const double t = profile_->preimage(q.z());
  const Vec3 m = profile_->image(t);
  const double psi = std::atan2(m.y(), m.x());
  return rotate_z(meridian_point(t), theta - psi);
}

PLine GlStar::line_through(const Vec3& q) const { return PLine::through_affine(q, sigma(q)); }

double GlStar::chart_u_min() const noexcept {
  return profile_ ? 0.0 : -0.5 * std::numbers::pi;
}

Chord GlStar::chord_at(double u, double theta) const {
  if (profile_) {
    const double t = std::sin(u);
    const Chord base{Vec3(std::cos(u), 0.0, t), profile_->image(t)};
    return base.rotated(theta);
  }
  const Vec3 q(std::cos(u) * std::cos(theta), std::cos(u) * std::sin(theta), std::sin(u));
  return chord(q);
}

Vec3 sigma(const GlStar& star, const Vec3& q) { return star.sigma(q); }
PLine line_through(const GlStar& star, const Vec3& q) { return star.line_through(q); }

PLine meridian_line(const RotationalProfile& profile, double t) {
  if (t < 0.0 || t > 1.0) throw InvalidInput("meridian parameter must lie in [0, 1]");
  return PLine::through_affine(meridian_point(t), profile.image(t));
}

LineHandedness handedness_of(const PLine& line, double tol) {
  const Vec6 p = line.coords() / line.coords().norm();
  // p12 = x1 y2 - x2 y1 and p03 = z2 - z1 for affine representatives.
  if (std::abs(p[5]) < tol) return LineHandedness::MeetsAxis;
  const double s = p[2] != 0.0 ? p[5] * p[2] : p[5];
  return s > 0 ? LineHandedness::Right : LineHandedness::Left;
}

HPoint second_intersection(const PLine& line, const Vec3& q, double tol) {
  if (!line.contains(homogeneous(q), 1e-7)) throw InvalidInput("point is not on the line");
  const Vec3 d = line.direction();
  if (d.norm() <= tol * line.coords().norm()) throw NotTwoSecant("line lies at infinity");
  const Vec3 dn = d.normalized();
  const double lambda = -2.0 * q.dot(dn);
  if (std::abs(lambda) < tol) throw NotTwoSecant("line is tangent to the sphere");
  return HPoint::affine(q + lambda * dn);
}

Mesh surface_mesh(const SurfaceEntry& entry, int n_u, int n_v, double z_min, double z_max) {
  if (n_u < 2 || n_v < 2) throw InvalidInput("mesh resolutions must be at least 2");
  Mesh mesh;
  if (entry.kind == SurfaceKind::Axis) {
    for (int i = 0; i < n_u; ++i) {
      mesh.vertices.emplace_back(0.0, 0.0, z_min + (z_max - z_min) * i / (n_u - 1));
      if (i > 0) mesh.segments.push_back({i - 1, i});
    }
    return mesh;
  }
  const double two_pi = 2.0 * std::numbers::pi;
  auto ring = [&](double radius, double z) {
    for (int j = 0; j < n_v; ++j) {
      const double phi = two_pi * j / n_v;
      mesh.vertices.emplace_back(radius * std::cos(phi), radius * std::sin(phi), z);
    }
  };
  for (int i = 0; i < n_u; ++i) {
    const double s = static_cast<double>(i) / (n_u - 1);
    if (entry.kind == SurfaceKind::HorizontalStar) {
      ring(std::max(std::abs(z_min), std::abs(z_max)) * s, 0.0);
    } else {
      const double z = z_min + (z_max - z_min) * s;
      const double dz = z - entry.b;
      ring(std::sqrt(entry.c * entry.c + dz * dz) / entry.a, z);
    }
  }
  for (int i = 0; i + 1 < n_u; ++i) {
    for (int j = 0; j < n_v; ++j) {
      const int j1 = (j + 1) % n_v;
      const int v00 = i * n_v + j;
      const int v01 = i * n_v + j1;
      const int v10 = (i + 1) * n_v + j;
      const int v11 = (i + 1) * n_v + j1;
      mesh.triangles.push_back({v00, v10, v11});
      mesh.triangles.push_back({v00, v11, v01});
    }
  }
  return mesh;
}

}  // namespace glstar
