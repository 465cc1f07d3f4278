#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace glstar {

/// A scalar function of one real variable, either a named builtin family or a
/// monotone sample table. Used for the profile functions a(t), f, g, t(a), s(a).
class Fn1 {
 public:
  enum class Kind {
    PhiR,       // a (a + r) / (a^2 + r a + r)
    Identity,   // x
    Moebius01,  // x / (1 - x)
    Power,      // x^p
    Affine,     // slope * x + offset
    Table,      // monotone piecewise linear, constant outside the knots
    TanSin,     // k x / sqrt(1 - x^2)
    NegCircle,  // -sqrt(1 - x^2)
    Custom,
  };

  static Fn1 phi_r(double r);
  static Fn1 identity();
  static Fn1 moebius01();
  static Fn1 power(double p);
  static Fn1 affine(double slope, double offset);
  static Fn1 table(std::vector<double> knots, std::vector<double> values);
  static Fn1 tan_sin(double k = 1.0);
  static Fn1 neg_circle();
  static Fn1 custom(std::string name, std::function<double(double)> fn);

  double operator()(double x) const;

  Kind kind() const noexcept { return kind_; }
  std::string describe() const;

  double param(int i) const { return params_.at(i); }
  const std::vector<double>& knots() const noexcept { return knots_; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Solves f(x) = y on [lo, hi] by bisection; f must be monotone there.
  double inverse(double y, double lo, double hi) const;

  /// First grid point in [lo, hi] (n uniform samples) where f fails to increase
  /// strictly, or nullopt.
  std::optional<double> find_non_increase(double lo, double hi, int n = 1024,
                                          bool strict = true) const;

 private:
  Fn1(Kind kind, std::vector<double> params) : kind_(kind), params_(std::move(params)) {}

  Kind kind_;
  std::vector<double> params_;
  std::vector<double> knots_;
  std::vector<double> values_;
  std::function<double(double)> custom_;
  std::string name_;
};

}  // namespace glstar
