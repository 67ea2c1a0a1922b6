#include "gibbspk/levy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gibbspk {

namespace {

constexpr double kPi = std::numbers::pi;

// log density at x of the standard positive alpha-stable law S with
// E e^{-b S} = exp(-b^alpha), via the Zolotarev/Kanter integral
//   f(x) = alpha / ((1-alpha) pi) * x^{-1/(1-alpha)}
//          * int_0^pi A(u) exp(-A(u) x^{-alpha/(1-alpha)}) du,
//   A(u) = sin(alpha u)^{alpha/(1-alpha)} sin((1-alpha) u)
//          / sin(u)^{1/(1-alpha)}.
// The integrand spans many orders of magnitude, so it is fed to the
// adaptive quadrature in log domain.
double log_std_stable_density(double alpha, double x) {
  if (x <= 0.0) return kNegInf;
  const double oma = 1.0 - alpha;
  const double log_c = -(alpha / oma) * std::log(x);

  auto log_integrand = [alpha, oma, log_c](double v) {
    // u = pi v; compute sin(u) as sin(pi(1-v)) near u = pi for accuracy
    const double log_sin_u =
        std::log(v < 0.5 ? std::sin(kPi * v) : std::sin(kPi * (1.0 - v)));
    const double log_a = (alpha / oma) * std::log(std::sin(alpha * kPi * v)) +
                         std::log(std::sin(oma * kPi * v)) - log_sin_u / oma;
    const double z = log_a + log_c;
    if (z > 700.0) return kNegInf;  // exp(z) would overflow; integrand is 0
    return std::log(kPi) + log_a - std::exp(z);
  };

  const QuadratureSpec spec{1e-11, 0.0, 1500};
  const auto r = integrate_01(log_integrand, spec);
  // Deep in the tails A(u)*c is ~1e6 and its rounding noise (~eps*|A c|)
  // caps the attainable relative accuracy. The log of the result is still
  // accurate to that relative error in absolute terms, and the density is
  // far below double underflow there, so degraded accuracy is accepted.
  if (!r.converged && !(r.rel_error() <= 1e-6) && !(r.log_value < -700.0))
    throw QuadratureError("stable density integral representation did not converge",
                          r.abs_error());
  return std::log(alpha) - std::log(oma) - std::log(kPi) - std::log(x) / oma +
         r.log_value;
}

}  // namespace

LevyModel::LevyModel(Family family, double p1, double p2, double tilt)
    : family_(family), p1_(p1), p2_(p2), tilt_(tilt) {
  if (family_ == Family::kGamma) {
    name_ = "gamma";
  } else {
    name_ = tilt_ > 0.0 ? "generalized-gamma" : "stable";
  }
}

double LevyModel::log_levy_density(double x) const {
  if (x <= 0.0) return kNegInf;
  if (family_ == Family::kGamma) {
    const double rate = p2_ + tilt_;
    return std::log(p1_) - std::log(x) - rate * x;
  }
  const double alpha = p1_, delta = p2_;
  return std::log(delta) + alpha * std::log(2.0) + std::log(alpha) -
         std::lgamma(1.0 - alpha) - (1.0 + alpha) * std::log(x) - tilt_ * x;
}

double LevyModel::levy_density(double x) const { return std::exp(log_levy_density(x)); }

double LevyModel::laplace_exponent(double b) const {
  if (b < 0.0) throw std::invalid_argument("laplace_exponent: b must be >= 0");
  if (b == 0.0) return 0.0;
  if (family_ == Family::kGamma) {
    const double rate = p2_ + tilt_;
    return p1_ * std::log1p(b / rate);
  }
  const double alpha = p1_, delta = p2_;
  if (tilt_ == 0.0) return delta * std::pow(2.0 * b, alpha);
  // delta[(2(lambda+b))^a - (2 lambda)^a], written to avoid cancellation
  return delta * std::pow(2.0 * tilt_, alpha) * std::expm1(alpha * std::log1p(b / tilt_));
}

DensityMethod LevyModel::density_method() const {
  if (family_ == Family::kGamma || p1_ == 0.5) return DensityMethod::kClosedForm;
  return DensityMethod::kIntegralRepresentation;
}

double LevyModel::log_density(double t) const {
  if (t <= 0.0) return kNegInf;
  if (family_ == Family::kGamma) {
    const double theta = p1_, rate = p2_ + tilt_;
    return theta * std::log(rate) - std::lgamma(theta) + (theta - 1.0) * std::log(t) -
           rate * t;
  }
  const double alpha = p1_, delta = p2_;
  // tilt contribution e^{psi(lambda) - lambda t} with psi(lambda) = delta(2 lambda)^alpha
  const double tilt_term =
      tilt_ > 0.0 ? delta * std::pow(2.0 * tilt_, alpha) - tilt_ * t : 0.0;
  if (alpha == 0.5) {
    return std::log(delta) - 0.5 * std::log(2.0 * kPi) - 1.5 * std::log(t) -
           delta * delta / (2.0 * t) + tilt_term;
  }
  // T = c0 * S with c0 = 2 delta^{1/alpha} and S the standard stable law
  const double c0 = 2.0 * std::pow(delta, 1.0 / alpha);
  return log_std_stable_density(alpha, t / c0) - std::log(c0) + tilt_term;
}

double LevyModel::density(double t) const { return std::exp(log_density(t)); }

double LevyModel::alpha() const { return family_ == Family::kStable ? p1_ : 0.0; }

double LevyModel::delta() const {
  if (family_ != Family::kStable)
    throw std::invalid_argument("delta(): not a stable-family model");
  return p2_;
}

double LevyModel::theta() const {
  if (family_ != Family::kGamma)
    throw std::invalid_argument("theta(): not a gamma-family model");
  return p1_;
}

double LevyModel::rate() const {
  if (family_ != Family::kGamma)
    throw std::invalid_argument("rate(): not a gamma-family model");
  return p2_;
}

double LevyModel::zeta() const {
  if (family_ != Family::kStable)
    throw std::invalid_argument("zeta(): not a stable-family model");
  return std::pow(2.0 * tilt_, p1_);
}

LevyModel gamma_model(double theta, double rate) {
  if (!(theta > 0.0)) throw std::invalid_argument("gamma_model: theta must be > 0");
  if (!(rate > 0.0)) throw std::invalid_argument("gamma_model: rate must be > 0");
  return LevyModel(LevyModel::Family::kGamma, theta, rate, 0.0);
}

LevyModel stable_model(double alpha, double delta) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("stable_model: alpha must be in (0,1)");
  if (!(delta > 0.0)) throw std::invalid_argument("stable_model: delta must be > 0");
  return LevyModel(LevyModel::Family::kStable, alpha, delta, 0.0);
}

LevyModel tilt(const LevyModel& model, double lambda) {
  if (!(lambda >= 0.0)) throw std::invalid_argument("tilt: lambda must be >= 0");
  if (!std::isfinite(model.laplace_exponent(lambda)))
    throw std::invalid_argument("tilt: psi(lambda) is not finite");
  return LevyModel(model.family_, model.p1_, model.p2_, model.tilt_ + lambda);
}

LevyModel generalized_gamma_model(double alpha, double delta, double zeta) {
  if (!(zeta >= 0.0))
    throw std::invalid_argument("generalized_gamma_model: zeta must be >= 0");
  LevyModel base = stable_model(alpha, delta);
  if (zeta == 0.0) return base;
  return tilt(base, 0.5 * std::pow(zeta, 1.0 / alpha));
}

double verify_laplace_exponent(const LevyModel& model, double b, const QuadratureSpec& spec) {
  if (!(b > 0.0)) throw std::invalid_argument("verify_laplace_exponent: b must be > 0");
  auto log_integrand = [&model, b](double x) {
    // log(1 - e^{-bx}) + log rho(x)
    return std::log(-std::expm1(-b * x)) + model.log_levy_density(x);
  };
  const auto r = require_converged(integrate_0inf(log_integrand, spec),
                                   "Laplace exponent integral");
  return std::abs(model.laplace_exponent(b) - r.value);
}

}  // namespace gibbspk
