#include "glstar/fn1.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "glstar/error.hpp"

namespace glstar {

Fn1 Fn1::phi_r(double r) {
  if (!(r > 0)) throw InvalidInput("phi_r needs r > 0");
  return Fn1(Kind::PhiR, {r});
}

Fn1 Fn1::identity() { return Fn1(Kind::Identity, {}); }
Fn1 Fn1::moebius01() { return Fn1(Kind::Moebius01, {}); }

Fn1 Fn1::power(double p) {
  if (!(p > 0)) throw InvalidInput("power needs p > 0");
  return Fn1(Kind::Power, {p});
}

Fn1 Fn1::affine(double slope, double offset) { return Fn1(Kind::Affine, {slope, offset}); }

Fn1 Fn1::table(std::vector<double> knots, std::vector<double> values) {
  if (knots.size() != values.size() || knots.size() < 2) {
    throw InvalidInput("table needs matching knots/values with at least two entries");
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i] > knots[i - 1])) throw InvalidInput("table knots must increase strictly");
  }
  bool up = true;
  bool down = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    up = up && values[i] >= values[i - 1];
    down = down && values[i] <= values[i - 1];
  }
  if (!up && !down) throw InvalidInput("table values must be monotone");
  Fn1 f(Kind::Table, {});
  f.knots_ = std::move(knots);
  f.values_ = std::move(values);
  return f;
}

Fn1 Fn1::tan_sin(double k) { return Fn1(Kind::TanSin, {k}); }
Fn1 Fn1::neg_circle() { return Fn1(Kind::NegCircle, {}); }

Fn1 Fn1::custom(std::string name, std::function<double(double)> fn) {
  Fn1 f(Kind::Custom, {});
  f.custom_ = std::move(fn);
  f.name_ = std::move(name);
  return f;
}

double Fn1::operator()(double x) const {
  switch (kind_) {
    case Kind::PhiR: {
      const double r = params_[0];
      return x * (x + r) / (x * x + r * x + r);
    }
    case Kind::Identity:
      return x;
    case Kind::Moebius01:
      return x / (1.0 - x);
    case Kind::Power:
      return x >= 0 ? std::pow(x, params_[0]) : -std::pow(-x, params_[0]);
    case Kind::Affine:
      return params_[0] * x + params_[1];
    case Kind::Table: {
      if (x <= knots_.front()) return values_.front();
      if (x >= knots_.back()) return values_.back();
      const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
      const std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
      const double w = (x - knots_[i]) / (knots_[i + 1] - knots_[i]);
      return (1.0 - w) * values_[i] + w * values_[i + 1];
    }
    case Kind::TanSin:
      return params_[0] * x / std::sqrt(1.0 - x * x);
    case Kind::NegCircle:
      return -std::sqrt(std::max(0.0, 1.0 - x * x));
    case Kind::Custom:
      return custom_(x);
  }
  return 0.0;
}

std::string Fn1::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::PhiR: os << "phi_r(r=" << params_[0] << ")"; break;
    case Kind::Identity: os << "identity"; break;
    case Kind::Moebius01: os << "moebius01"; break;
    case Kind::Power: os << "power(p=" << params_[0] << ")"; break;
    case Kind::Affine: os << "affine(" << params_[0] << "*x+" << params_[1] << ")"; break;
    case Kind::Table: os << "table(" << knots_.size() << " knots)"; break;
    case Kind::TanSin: os << "tan_sin(k=" << params_[0] << ")"; break;
    case Kind::NegCircle: os << "neg_circle"; break;
    case Kind::Custom: os << name_; break;
  }
  return os.str();
}

double Fn1::inverse(double y, double lo, double hi) const {
  const bool increasing = (*this)(hi) >= (*this)(lo);
  for (int i = 0; i < 2000; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = (*this)(mid);
    if ((fm < y) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::optional<double> Fn1::find_non_increase(double lo, double hi, int n, bool strict) const {
  double prev = (*this)(lo);
  for (int i = 1; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    const double v = (*this)(x);
    if (!std::isfinite(v) || (strict ? v <= prev : v < prev)) return x;
    prev = v;
  }
  return std::nullopt;
}

}  // namespace glstar
