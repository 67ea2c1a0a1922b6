// Minimal statistics helpers for goodness-of-fit tests: regularized
// incomplete gamma (series + Lentz continued fraction), chi-square survival
// function, Kolmogorov-Smirnov distance.
#ifndef GIBBSPK_TESTS_STATS_HPP
#define GIBBSPK_TESTS_STATS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace stats {

inline double lower_regularized_gamma(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("lower_regularized_gamma: bad arguments");
  if (x == 0.0) return 0.0;
  const double log_prefix = a * std::log(x) - x - std::lgamma(a);
  if (x < a + 1.0) {
    // series: P(a,x) = e^{-x} x^a / Gamma(a) * sum x^n / (a)_{n+1}
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
      term *= x / (a + n);
      sum += term;
      if (term < sum * 1e-16) break;
    }
    return std::exp(log_prefix) * sum;
  }
  // continued fraction for Q(a,x), modified Lentz
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double mult = d * c;
    h *= mult;
    if (std::abs(mult - 1.0) < 1e-16) break;
  }
  return 1.0 - std::exp(log_prefix) * h;
}

inline double upper_regularized_gamma(double a, double x) {
  return 1.0 - lower_regularized_gamma(a, x);
}

inline double gamma_cdf(double shape, double rate, double x) {
  if (x <= 0.0) return 0.0;
  return lower_regularized_gamma(shape, rate * x);
}

// P(chi-square with dof >= stat)
inline double chi_square_sf(double stat, double dof) {
  return upper_regularized_gamma(0.5 * dof, 0.5 * stat);
}

inline double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

}  // namespace stats

#endif  // GIBBSPK_TESTS_STATS_HPP
