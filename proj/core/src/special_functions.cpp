#include "goldnews/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "goldnews/error.hpp"

namespace goldnews::stats {
namespace {

constexpr int kMaxIterations = 20000;
constexpr double kEpsilon = 1e-16;
constexpr double kTiny = 1e-300;

// Continued fraction for I_x(a, b) * a / prefactor.
double beta_continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEpsilon) return h;
  }
  throw Error("stats", "incomplete beta continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0 && x <= 1.0)) {
    throw InputError("stats", "incomplete beta outside domain (a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                                  ", x=" + std::to_string(x) + ")");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_prefactor =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double prefactor = std::exp(log_prefactor);
  if (x < (a + 1.0) / (a + b + 2.0)) return prefactor * beta_continued_fraction(a, b, x) / a;
  return 1.0 - prefactor * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t, double dof) {
  if (!(dof > 0.0)) throw InputError("stats", "degrees of freedom must be positive");
  if (std::isnan(t)) throw InputError("stats", "t statistic is NaN");
  if (std::isinf(t)) return 0.0;
  const double t2 = t * t;
  // dof / (dof + t^2) loses nothing for small t; use the complementary tail
  // form when t^2 dominates.
  if (t2 < dof) return 1.0 - regularized_incomplete_beta(0.5, 0.5 * dof, t2 / (dof + t2));
  return regularized_incomplete_beta(0.5 * dof, 0.5, dof / (dof + t2));
}

double student_t_cdf(double t, double dof) {
  const double tail = 0.5 * student_t_two_sided_p(t, dof);
  return t >= 0.0 ? 1.0 - tail : tail;
}

}  // namespace goldnews::stats
