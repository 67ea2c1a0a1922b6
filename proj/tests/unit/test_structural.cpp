#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gibbspk/samplers.hpp"
#include "gibbspk/structural.hpp"

using namespace gibbspk;

namespace {

const std::vector<double> kPs = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
const std::vector<double> kTs = {0.5, 1.0, 2.0};

// closed form of the conditional size-biased-pick density for alpha = 1/2
double half_stable_structural(double p, double delta, double t) {
  return delta / (std::sqrt(2.0 * std::numbers::pi) * std::sqrt(p * t)) *
         std::pow(1.0 - p, -1.5) * std::exp(-0.5 * p * delta * delta / ((1.0 - p) * t));
}

}  // namespace

TEST_CASE("gamma structural density is Beta(1, theta), independent of t") {
  for (double theta : {0.5, 1.0, 5.0}) {
    StructuralDensity f(gamma_model(theta));
    for (double p : kPs) {
      const double expected = theta * std::pow(1.0 - p, theta - 1.0);
      double reference = f.density(p, 1.0);
      CHECK(reference == doctest::Approx(expected).epsilon(1e-13));
      for (double t : {0.1, 1.0, 10.0})
        CHECK(std::abs(f.density(p, t) - reference) < 1e-12);
    }
  }
}

TEST_CASE("stable structural density matches the closed form at alpha = 1/2") {
  for (double delta : {0.5, 1.0, 2.0}) {
    StructuralDensity f(stable_model(0.5, delta));
    for (double p : kPs) {
      for (double t : kTs) {
        CHECK(f.density(p, t) ==
              doctest::Approx(half_stable_structural(p, delta, t)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("inverse-Gaussian structural density collapses to the stable one") {
  // generic evaluator on the tilted law: the zeta-dependence cancels
  for (double zeta : {0.5, 1.0, 2.0}) {
    StructuralDensity f(generalized_gamma_model(0.5, 1.0, zeta));
    for (double p : kPs) {
      for (double t : kTs) {
        CHECK(f.density(p, t) ==
              doctest::Approx(half_stable_structural(p, 1.0, t)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("structural density is zero off the open interval and validates t") {
  StructuralDensity f(gamma_model(1.0));
  CHECK(f.log_density(0.0, 1.0) == -std::numeric_limits<double>::infinity());
  CHECK(f.log_density(1.0, 1.0) == -std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(f.log_density(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(f.log_density(0.5, -1.0), std::invalid_argument);
}

TEST_CASE("tilt invariance of the structural density") {
  CHECK(verify_tilt_invariance(gamma_model(1.0), 0.7, kPs, kTs) < 1e-10);
  CHECK(verify_tilt_invariance(stable_model(0.5, 1.0), 2.0, kPs, kTs) < 1e-10);
  CHECK(verify_tilt_invariance(stable_model(0.5, 1.0), 0.0, kPs, kTs) == 0.0);  // identity
  for (double lambda : {0.1, 1.0, 10.0}) {
    CHECK(verify_tilt_invariance(gamma_model(0.5), lambda, kPs, kTs) < 1e-10);
    CHECK(verify_tilt_invariance(gamma_model(2.0), lambda, kPs, kTs) < 1e-10);
    CHECK(verify_tilt_invariance(stable_model(0.5, 0.5), lambda, kPs, kTs) < 1e-10);
    CHECK(verify_tilt_invariance(stable_model(0.5, 2.0), lambda, kPs, kTs) < 1e-10);
  }
  // integral-representation path, spot check
  CHECK(verify_tilt_invariance(stable_model(0.3, 1.0), 1.0, std::vector<double>{0.25, 0.75},
                               std::vector<double>{1.0}) < 1e-10);
}

TEST_CASE("structural densities normalize") {
  for (double theta : {0.5, 1.0, 5.0}) {
    StructuralDensity f(gamma_model(theta));
    for (double t : {0.1, 1.0, 10.0}) {
      CHECK(structural_moment(gamma_model(theta), 0.0, t) == doctest::Approx(1.0).epsilon(1e-8));
      (void)f;
    }
  }
  for (double delta : {0.5, 1.0, 2.0}) {
    for (double t : kTs) {
      CHECK(structural_moment(stable_model(0.5, delta), 0.0, t) ==
            doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("gamma structural mean is the Beta(1, theta) mean") {
  for (double theta : {0.5, 1.0, 5.0}) {
    CHECK(structural_moment(gamma_model(theta), 1.0, 2.3) ==
          doctest::Approx(1.0 / (1.0 + theta)).epsilon(1e-8));
  }
}

TEST_CASE("moments are non-increasing in q") {
  for (const auto& model : {gamma_model(1.5), stable_model(0.5, 1.0)}) {
    double prev = structural_moment(model, 0.0, 1.0);
    for (double q : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
      const double mu = structural_moment(model, q, 1.0);
      CHECK(mu <= prev + 1e-12);
      prev = mu;
    }
  }
  CHECK_THROWS_AS(structural_moment(gamma_model(1.0), -0.5, 1.0), std::invalid_argument);
}

TEST_CASE("stable first moment agrees with a tabulated-inverse-CDF Monte Carlo") {
  const double quad = structural_moment(stable_model(0.5, 1.0), 1.0, 1.0);

  // inverse-CDF table on the graded grid p = v^2 (regularizes p^{-1/2})
  const int grid = 4096;
  std::vector<double> ps(grid + 1), cdf(grid + 1, 0.0);
  for (int i = 0; i <= grid; ++i) {
    const double v = static_cast<double>(i) / grid;
    ps[static_cast<size_t>(i)] = v * v;
  }
  for (int i = 1; i <= grid; ++i) {
    const double a = ps[static_cast<size_t>(i - 1)], b = ps[static_cast<size_t>(i)];
    const double fa = a > 0.0 ? half_stable_structural(a, 1.0, 1.0) : 0.0;
    const double mid = half_stable_structural(0.5 * (a + b), 1.0, 1.0);
    const double fb = b < 1.0 ? half_stable_structural(b, 1.0, 1.0) : 0.0;
    cdf[static_cast<size_t>(i)] =
        cdf[static_cast<size_t>(i - 1)] + (b - a) * (fa + 4.0 * mid + fb) / 6.0;
  }
  for (auto& c : cdf) c /= cdf.back();

  RandomSource rng(2024);
  const int samples = 10000000;
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double u = rng.uniform01();
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    const size_t hi = std::max<size_t>(1, static_cast<size_t>(it - cdf.begin()));
    const double c0 = cdf[hi - 1], c1 = cdf[hi];
    const double w = c1 > c0 ? (u - c0) / (c1 - c0) : 0.5;
    const double p = ps[hi - 1] + w * (ps[hi] - ps[hi - 1]);
    sum += p;
    sum_sq += p * p;
  }
  const double mean = sum / samples;
  const double variance = sum_sq / samples - mean * mean;
  const double se = std::sqrt(variance / samples);
  CHECK(std::abs(mean - quad) < 3.0 * se + 2e-4);  // 2e-4 covers the table discretization
}
