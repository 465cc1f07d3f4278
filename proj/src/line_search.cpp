#include "glstar/line_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "glstar/threading.hpp"

namespace glstar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr int kMaxSeeds = 12;

}  // namespace

LineSearch::LineSearch(GlStar star, int n_u, int n_theta)
    : star_(std::move(star)), n_u_(n_u), n_theta_(n_theta), u_min_(star_.chart_u_min()) {
  if (n_u < 4 || n_theta < 4) throw InvalidInput("line search grid needs at least 4x4 nodes");
  grid_.resize(static_cast<std::size_t>(n_u) * static_cast<std::size_t>(n_theta));
  parallel_for(grid_.size(), [&](std::size_t k) {
    const int i = static_cast<int>(k) / n_theta_;
    const int j = static_cast<int>(k) % n_theta_;
    const double u = u_min_ + (kHalfPi - u_min_) * i / (n_u_ - 1);
    const double theta = kTwoPi * j / n_theta_;
    const Vec6 p = line_at(u, theta).coords();
    grid_[k] = p / p.norm();
  });
}

PLine LineSearch::line_at(double u, double theta) const { return star_.chord_at(u, theta).line(); }

Vec4 LineSearch::residual(const Vec4& xn, double u, double theta) const {
  const Vec6 p = line_at(u, theta).coords();
  return wedge(xn, p / p.norm());
}

LineHit LineSearch::refine(const Vec4& xn, double u, double theta) const {
  const double h = 1e-7;
  auto clamp_u = [&](double v) { return std::clamp(v, u_min_, kHalfPi); };
  Vec4 r = residual(xn, u, theta);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  for (int it = 0; it < 100 && cost > 1e-30; ++it) {
    // Forward differences, stepping inward at the chart boundary.
    const double hu = u + h > kHalfPi ? -h : h;
    Eigen::Matrix<double, 4, 2> J;
    J.col(0) = (residual(xn, u + hu, theta) - r) / hu;
    J.col(1) = (residual(xn, u, theta + h) - r) / h;
    const Eigen::Matrix2d JtJ = J.transpose() * J;
    const Eigen::Vector2d g = J.transpose() * r;
    bool improved = false;
    for (int k = 0; k < 12; ++k) {
      Eigen::Matrix2d A = JtJ;
      A.diagonal() += lambda * (JtJ.diagonal().array() + 1e-12).matrix();
      const Eigen::Vector2d step = A.ldlt().solve(-g);
      const double nu = clamp_u(u + step[0]);
      const double nt = theta + step[1];
      const Vec4 nr = residual(xn, nu, nt);
      if (nr.squaredNorm() < cost) {
        u = nu;
        theta = nt;
        r = nr;
        cost = nr.squaredNorm();
        lambda = std::max(lambda * 0.3, 1e-12);
        improved = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!improved) break;
  }
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0) theta += kTwoPi;
  return {u, theta, line_at(u, theta), std::sqrt(cost)};
}

std::vector<LineHit> LineSearch::lines_through(const Vec4& x, double tol) const {
  const Vec4 xn = x / x.norm();
  std::vector<double> res(grid_.size());
  for (std::size_t k = 0; k < grid_.size(); ++k) res[k] = wedge(xn, grid_[k]).norm();

  auto at = [&](int i, int j) {
    j = ((j % n_theta_) + n_theta_) % n_theta_;
    return res[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_theta_) + static_cast<std::size_t>(j)];
  };
  std::vector<std::pair<double, std::size_t>> seeds;
  for (int i = 0; i < n_u_; ++i) {
    for (int j = 0; j < n_theta_; ++j) {
      const double v = at(i, j);
      bool minimum = true;
      for (int di = -1; di <= 1 && minimum; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if ((di == 0 && dj == 0) || i + di < 0 || i + di >= n_u_) continue;
          if (at(i + di, j + dj) < v) {
            minimum = false;
            break;
          }
        }
      }
      if (minimum) seeds.emplace_back(v, static_cast<std::size_t>(i) * static_cast<std::size_t>(n_theta_) + j);
    }
  }
  std::sort(seeds.begin(), seeds.end());
  if (seeds.size() > kMaxSeeds) seeds.resize(kMaxSeeds);

  std::vector<LineHit> hits;
  auto start = [&](int i, int j) -> std::optional<LineHit> {
    if (i < 0 || i >= n_u_) return std::nullopt;
    const double u = u_min_ + (kHalfPi - u_min_) * i / (n_u_ - 1);
    LineHit hit = refine(xn, u, kTwoPi * j / n_theta_);
    if (hit.residual >= tol) return std::nullopt;
    return hit;
  };
  for (const auto& [v, k] : seeds) {
    const int i = static_cast<int>(k) / n_theta_;
    const int j = static_cast<int>(k) % n_theta_;
    // Profiles may have kinks (interpolated families); when the descent from
    // the grid minimum stalls, restart from its neighbours.
    std::optional<LineHit> hit = start(i, j);
    for (int d = 0; d < 8 && !hit; ++d) {
      static constexpr int kDi[8] = {-1, -1, -1, 0, 0, 1, 1, 1};
      static constexpr int kDj[8] = {-1, 0, 1, -1, 1, -1, 0, 1};
      hit = start(i + kDi[d], j + kDj[d]);
    }
    if (!hit) continue;
    const bool known = std::any_of(hits.begin(), hits.end(),
                                   [&](const LineHit& h) { return line_distance(h.line, hit->line) < 1e-6; });
    if (!known) hits.push_back(*hit);
  }
  return hits;
}

}  // namespace glstar
