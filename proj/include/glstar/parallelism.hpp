#pragma once

// Lifting a gl star S to a regular parallelism of P^3 through the Klein
// correspondence. The sphere geometry (R^4, diag(-1,1,1,1)) is embedded
// isometrically as a subspace U of (R^6, g); H is the set of images of the
// sphere polars of the star lines, and each line h of H determines the
// parallel class whose Klein image is K intersected with the g-polar of h.

#include <cstdint>
#include <functional>
#include <vector>

#include "glstar/line_search.hpp"
#include "glstar/star.hpp"
#include "glstar/verify.hpp"

namespace glstar {

/// A line of P^5 given by an orthonormal basis of its 2-dim subspace of R^6.
struct Line5 {
  Vec6 a;
  Vec6 b;

  Subspace subspace() const;
};

struct EmbeddedStar {
  GlStar star;
  /// Columns d1..d6 with g(d_i, d_j) = diag(1, 1, 1, -1, -1, -1).
  Mat6 basis;
  Subspace U;
  Subspace C;

  /// Isometry (R^4, sphere form) -> (U, g): w -> w1 d1 + w2 d2 + w3 d3 + w0 d4.
  Vec6 iso(const Vec4& w) const;
  /// iso^-1 of the g-orthogonal projection of k onto U.
  Vec4 project(const Vec6& k) const;
};

EmbeddedStar embed_star(GlStar star);

class HfdLineSet {
 public:
  explicit HfdLineSet(EmbeddedStar es) : es_(std::move(es)) {}

  const EmbeddedStar& embedded() const noexcept { return es_; }
  /// The H-line of a line of P^3: iso of its polar with respect to the sphere.
  Line5 of(const PLine& line) const;
  Line5 at(double u, double theta) const { return of(es_.star.chord_at(u, theta).line()); }
  /// H-lines of the star lines through n Fibonacci sphere points.
  std::vector<Line5> sample(int n) const;

 private:
  EmbeddedStar es_;
};

HfdLineSet star_to_hfd(const EmbeddedStar& es);

/// B^2 - AC for g(s a + t b) = A s^2 + 2B st + C t^2; negative iff the line misses K.
double secant_discriminant(const Line5& h);

struct ParallelClass {
  Line5 h;
  /// g-polar of h: the Klein images of the class span K intersected with W.
  Subspace W;

  bool contains(const PLine& line, double tol = 1e-8) const;
};

/// Throws NotZeroSecant unless h misses K.
ParallelClass class_from_hfd_line(const Line5& h);

/// The line of the class through p. Throws DegenerateMeet if the meet of the
/// lines through p with W is not a single Klein point.
PLine spread_line_through(const ParallelClass& cls, const HPoint& p);

/// Elliptic in the projective sense: the form restricted to W has one sign
/// exactly once.
bool is_elliptic(const Signature& s);

class Parallelism {
 public:
  explicit Parallelism(const EmbeddedStar& es, int n_u = 64, int n_theta = 64);

  const EmbeddedStar& embedded() const noexcept { return hfd_.embedded(); }
  const HfdLineSet& hfd() const noexcept { return hfd_; }

  /// The star line through the point of P^3 encoding L, with its H-line.
  /// Throws SearchFailed when no line is found, HfdViolation when several are.
  ParallelClass parallel_class_of(const PLine& line) const;
  PLine parallel_through(const HPoint& p, const PLine& line) const;

 private:
  HfdLineSet hfd_;
  LineSearch search_;
};

struct DimResult {
  int dim = 0;
  std::vector<double> singular_values;
  /// sigma_r / sigma_{r+1} at the detected rank r (infinite when r = 6).
  double gap_ratio = 0.0;
};

/// Projective dimension of the span of n sampled H-lines.
DimResult dim_parallelism(const HfdLineSet& hfd, int n = 200);

/// Rotation by theta in the plane (d_i, d_j) of the canonical basis (0-based),
/// identity on the other basis vectors.
Mat6 plane_rotation(const EmbeddedStar& es, int i, int j, double theta);
/// The 1-torus: SO(2) on C = span(d5, d6), identity on U.
Mat6 torus_rotation(const EmbeddedStar& es, double theta);

/// Random lines of P^3 through two Gaussian points.
std::vector<PLine> random_lines(int n, std::uint64_t seed);

CheckReport check_zero_secants(const HfdLineSet& hfd, int n = 200);
CheckReport check_hfd(const Parallelism& par, int n = 100, std::uint64_t seed = 0);
CheckReport check_class_signatures(const Parallelism& par, int n = 50, std::uint64_t seed = 0);
CheckReport check_spread_disjoint(const Parallelism& par, int n = 100, std::uint64_t seed = 0);
/// parallel_through contains p, lies in the class of L, returns L for p on L,
/// and moves by less than 1e-4 under 1e-6 perturbations of (p, L).
CheckReport check_parallel_queries(const Parallelism& par, int n = 100, std::uint64_t seed = 0);
CheckReport check_dimension(const HfdLineSet& hfd, int n = 200);
/// The torus is a g-isometry fixing every sampled H-line, for 16 angles.
CheckReport check_torus_fixes_classes(const EmbeddedStar& es, int n = 100,
                                      const std::function<Mat6(double)>& torus = {});

}  // namespace glstar
