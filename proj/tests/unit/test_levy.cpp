#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gibbspk/levy.hpp"
#include "gibbspk/quadrature.hpp"

using namespace gibbspk;

TEST_CASE("gamma model matches its displayed forms") {
  auto m = gamma_model(2.0);
  CHECK(m.laplace_exponent(0.0) == 0.0);
  CHECK(m.laplace_exponent(1.0) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-15));

  auto m1 = gamma_model(1.0);
  CHECK(m1.levy_density(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

  // f_T is the Gamma(theta, 1) density
  const double t = 1.7;
  CHECK(m.log_density(t) ==
        doctest::Approx(std::log(t) - t - std::lgamma(2.0)).epsilon(1e-14));
  CHECK(m.density_method() == DensityMethod::kClosedForm);
  CHECK_FALSE(m.total_mass_finite());
}

TEST_CASE("stable model matches its displayed forms") {
  auto m = stable_model(0.5, 1.0);
  CHECK(m.laplace_exponent(2.0) == doctest::Approx(2.0).epsilon(1e-15));  // delta sqrt(2*2)
  CHECK(m.density(1.0) ==
        doctest::Approx(std::exp(-0.5) / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-14));
  // rho(x) = delta/sqrt(2 pi) x^{-3/2} at alpha = 1/2
  CHECK(m.levy_density(2.0) ==
        doctest::Approx(std::pow(2.0, -1.5) / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-14));
  CHECK(m.density_method() == DensityMethod::kClosedForm);
  CHECK(stable_model(0.3, 1.0).density_method() == DensityMethod::kIntegralRepresentation);
}

TEST_CASE("infinite-activity classification: mass below epsilon diverges") {
  for (const auto& model : {gamma_model(1.5), stable_model(0.5, 1.0), stable_model(0.3, 2.0)}) {
    CHECK_FALSE(model.total_mass_finite());
    double previous = 0.0;
    for (double eps : {1e-1, 1e-3, 1e-5, 1e-7, 1e-9}) {
      const double mass =
          integrate([&model](double x) { return model.log_levy_density(x); }, eps, 1.0).value;
      CHECK(mass > previous + 1.0);  // keeps growing, no bounded limit in sight
      previous = mass;
    }
    CHECK(previous > 20.0);  // gamma diverges only logarithmically
  }
}

TEST_CASE("laplace exponent agrees with its Levy-density integral") {
  for (double b : {0.1, 1.0, 10.0}) {
    CHECK(verify_laplace_exponent(gamma_model(2.0), b) < 1e-8);
    CHECK(verify_laplace_exponent(stable_model(0.5, 1.0), b) < 1e-8);
  }
  // psi(b) -> 0 as b -> 0
  CHECK(stable_model(0.5, 1.0).laplace_exponent(1e-12) < 1e-5);
  CHECK(gamma_model(3.0).laplace_exponent(1e-12) < 1e-11);
}

TEST_CASE("psi is concave on a grid") {
  for (const auto& model :
       {gamma_model(0.7), stable_model(0.5, 2.0), generalized_gamma_model(0.5, 1.0, 1.0)}) {
    double prev = model.laplace_exponent(0.0);
    double prev_diff = std::numeric_limits<double>::infinity();
    for (double b = 0.25; b <= 8.0; b += 0.25) {
      const double cur = model.laplace_exponent(b);
      const double diff = cur - prev;
      CHECK(diff >= 0.0);                    // nondecreasing
      CHECK(diff <= prev_diff + 1e-12);      // concave: increments shrink
      prev = cur;
      prev_diff = diff;
    }
  }
}

TEST_CASE("tilting transforms rho, psi and the density together") {
  const double lambda = 0.8;

  SUBCASE("gamma tilt is the Gamma(theta, 1+lambda) family") {
    auto base = gamma_model(1.3);
    auto tilted = tilt(base, lambda);
    for (double t : {0.2, 1.0, 3.0}) {
      const double expected =
          1.3 * std::log(1.0 + lambda) - std::lgamma(1.3) + 0.3 * std::log(t) -
          (1.0 + lambda) * t;
      CHECK(tilted.log_density(t) == doctest::Approx(expected).epsilon(1e-14));
      // Definition of tilting: f_lambda = e^{psi(lambda) - lambda t} f
      CHECK(tilted.log_density(t) ==
            doctest::Approx(base.laplace_exponent(lambda) - lambda * t + base.log_density(t))
                .epsilon(1e-13));
      CHECK(tilted.log_levy_density(t) ==
            doctest::Approx(base.log_levy_density(t) - lambda * t).epsilon(1e-13));
    }
    CHECK(tilted.laplace_exponent(0.0) == 0.0);
  }

  SUBCASE("stable tilt realizes the generalized-Gamma Laplace exponent") {
    const double alpha = 0.5, delta = 1.5, zeta = 1.2;
    auto gg = generalized_gamma_model(alpha, delta, zeta);
    CHECK(gg.zeta() == doctest::Approx(zeta).epsilon(1e-14));
    for (double b : {0.0, 0.5, 2.0, 7.0}) {
      const double expected = -delta * zeta + delta * std::sqrt(zeta * zeta + 2.0 * b);
      CHECK(gg.laplace_exponent(b) == doctest::Approx(expected).epsilon(1e-13));
    }
    // inverse Gaussian density at delta=1, zeta=1, t=1: (2 pi)^{-1/2}
    auto ig = generalized_gamma_model(0.5, 1.0, 1.0);
    CHECK(ig.density(1.0) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-13));
  }

  SUBCASE("zero tilt is the identity, negative tilt rejected") {
    auto base = stable_model(0.5, 1.0);
    auto same = tilt(base, 0.0);
    CHECK(same.laplace_exponent(1.0) == base.laplace_exponent(1.0));
    CHECK(same.log_density(0.7) == base.log_density(0.7));
    CHECK_THROWS_AS(tilt(base, -0.1), std::invalid_argument);
  }
}

TEST_CASE("tilting composes additively") {
  for (const auto& base : {gamma_model(0.9), stable_model(0.5, 1.0), stable_model(0.35, 0.7)}) {
    const double l1 = 0.4, l2 = 1.7;
    auto twice = tilt(tilt(base, l1), l2);
    auto once = tilt(base, l1 + l2);
    for (double x : {0.3, 1.0, 2.5}) {
      CHECK(twice.log_levy_density(x) == doctest::Approx(once.log_levy_density(x)).epsilon(1e-12));
      CHECK(twice.laplace_exponent(x) == doctest::Approx(once.laplace_exponent(x)).epsilon(1e-12));
      CHECK(twice.log_density(x) == doctest::Approx(once.log_density(x)).epsilon(1e-12));
    }
  }
}

TEST_CASE("tilted densities stay normalized") {
  const QuadratureSpec spec{1e-10, 1e-13, 8000};
  for (const auto& model : {tilt(gamma_model(2.0), 1.5), generalized_gamma_model(0.5, 1.0, 2.0),
                            generalized_gamma_model(0.5, 2.0, 0.5)}) {
    const auto r = integrate_0inf([&model](double t) { return model.log_density(t); }, spec);
    CHECK(std::abs(r.value - 1.0) < 1e-8);
  }
}

TEST_CASE("integral-representation density cross-checks") {
  // continuity across the closed-form/integral switch at alpha = 1/2
  auto closed = stable_model(0.5, 1.0);
  auto near = stable_model(0.4999999, 1.0);
  for (double t : {0.3, 1.0, 4.0}) {
    CHECK(near.log_density(t) == doctest::Approx(closed.log_density(t)).epsilon(1e-5));
  }

  // Laplace transform of the quadrature-backed density recovers e^{-psi(b)}
  auto m = stable_model(0.3, 0.8);
  for (double b : {0.5, 2.0}) {
    const auto lt = integrate_0inf([&m, b](double t) { return -b * t + m.log_density(t); },
                                   QuadratureSpec{1e-8, 0.0, 8000});
    CHECK(lt.value == doctest::Approx(std::exp(-m.laplace_exponent(b))).epsilon(1e-6));
  }

  // normalization at a second index
  auto m7 = stable_model(0.7, 1.3);
  const auto r = integrate_0inf([&m7](double t) { return m7.log_density(t); },
                                QuadratureSpec{1e-8, 0.0, 8000});
  CHECK(std::abs(r.value - 1.0) < 1e-6);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(gamma_model(0.0), std::invalid_argument);
  CHECK_THROWS_AS(gamma_model(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(stable_model(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(stable_model(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(stable_model(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(generalized_gamma_model(0.5, 1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(gamma_model(2.0).delta(), std::invalid_argument);
  CHECK_THROWS_AS(stable_model(0.5, 1.0).theta(), std::invalid_argument);
}
