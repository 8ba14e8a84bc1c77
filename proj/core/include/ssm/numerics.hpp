#ifndef SSM_NUMERICS_HPP
#define SSM_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace ssm {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Relative comparison with an absolute floor, the tolerance regime used by
// every consistency check in the library.
inline bool nearly_equal(double a, double b, double rel = 1e-9,
                         double abs_floor = 1e-300) {
  if (a == b) return true;
  const double diff = std::fabs(a - b);
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return diff <= std::max(rel * scale, abs_floor);
}

// log(sum_i exp(x_i)); -inf entries contribute nothing.
inline double log_sum_exp(std::span<const double> xs) {
  double m = kNegInf;
  for (double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;  // all -inf (or a stray +inf/NaN)
  double s = 0.0;
  for (double x : xs) {
    if (x != kNegInf) s += std::exp(x - m);
  }
  return m + std::log(s);
}

inline double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

inline double log_binomial_coefficient(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// log(sigmoid(x)), stable on both tails.
inline double log_sigmoid(double x) {
  if (x >= 0.0) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

}  // namespace ssm

#endif  // SSM_NUMERICS_HPP
