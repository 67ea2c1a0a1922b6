#ifndef GIBBSPK_LOGSPACE_HPP
#define GIBBSPK_LOGSPACE_HPP

#include <cmath>
#include <limits>
#include <span>

namespace gibbspk {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// A real number stored as sign and log of absolute value. sign is -1, 0 or
// +1; zero is represented as {sign = 0, log_abs = -inf}.
struct SignedLog {
  double log_abs = kNegInf;
  int sign = 0;

  static SignedLog from_value(double v) {
    if (v == 0.0) return {kNegInf, 0};
    return {std::log(std::abs(v)), v > 0.0 ? 1 : -1};
  }

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

  SignedLog operator*(const SignedLog& o) const {
    if (sign == 0 || o.sign == 0) return {kNegInf, 0};
    return {log_abs + o.log_abs, sign * o.sign};
  }
};

// log(e^a + e^b), tolerant of -inf.
inline double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

inline double log_sum_exp(std::span<const double> logs) {
  double m = kNegInf;
  for (double x : logs) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : logs) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace gibbspk

#endif  // GIBBSPK_LOGSPACE_HPP
