#ifndef GIBBSPK_LEVY_HPP
#define GIBBSPK_LEVY_HPP

#include <string>

#include "gibbspk/quadrature.hpp"

namespace gibbspk {

// How LevyModel::density is evaluated.
enum class DensityMethod {
  kClosedForm,
  kIntegralRepresentation,  // deterministic quadrature of an integral form
};

// A subordinator total-mass law T, described by its Levy density rho(x), its
// Laplace exponent psi(b) = int_0^inf (1 - e^{-bx}) rho(x) dx, and (when
// evaluable) the density f_T of T. Two base families are provided:
//
//   gamma(theta, rate):  rho(x) = theta x^{-1} e^{-rate x},
//                        psi(b) = theta log(1 + b/rate)
//   stable(alpha, delta): rho(x) = delta 2^alpha alpha / Gamma(1-alpha)
//                                  * x^{-1-alpha},
//                         psi(b) = delta (2b)^alpha,  0 < alpha < 1
//
// Note the 2^alpha convention: the stable scale is chosen so that
// psi(b) = delta (2b)^alpha rather than the Gamma-function normalization
// delta b^alpha used elsewhere in the literature (delta_here = 2^-alpha
// delta_there). All formulas in this library use these units.
//
// Models are closed under exponential tilting (Esscher transform):
//   rho_lambda(x) = e^{-lambda x} rho(x)
//   psi_lambda(b) = psi(b + lambda) - psi(lambda)
//   f_lambda(t)   = e^{psi(lambda) - lambda t} f(t)
// Tilting a gamma law by lambda gives gamma(theta, rate + lambda); tilting
// stable(alpha, delta) by lambda = zeta^{1/alpha}/2 gives the generalized
// Gamma law with Laplace exponent
//   psi(b) = -delta zeta + delta (zeta^{1/alpha} + 2b)^alpha,
// whose alpha = 1/2 member is the inverse Gaussian (delta, zeta) law.
//
// Values are immutable; all evaluation is pure and thread-safe.
class LevyModel {
public:
  const std::string& name() const { return name_; }

  double levy_density(double x) const;
  double log_levy_density(double x) const;

  // psi(b) for b >= 0; psi(0) = 0, nondecreasing, concave.
  double laplace_exponent(double b) const;

  bool has_density() const { return true; }
  DensityMethod density_method() const;

  double density(double t) const;
  double log_density(double t) const;

  // int_0^inf rho(x) dx; false for every family constructible here (the
  // Levy density diverges at 0 like x^{-1} or x^{-1-alpha}). Finite-activity
  // laws put positive mass at T = 0 and cannot be normalized.
  bool total_mass_finite() const { return false; }

  // Accumulated exponential tilt.
  double tilt_parameter() const { return tilt_; }

  // Family parameters. alpha() is the stable index for the stable family and
  // 0 for gamma (the type parameter of the induced Gibbs partitions).
  double alpha() const;
  double delta() const;  // stable family only
  double theta() const;  // gamma family only
  double rate() const;   // gamma family only; base rate, excludes the tilt
  bool is_gamma() const { return family_ == Family::kGamma; }
  bool is_stable() const { return family_ == Family::kStable; }

  // zeta = (2 lambda)^alpha, the generalized-Gamma tilt coordinate
  // (stable family only).
  double zeta() const;

  friend LevyModel gamma_model(double theta, double rate);
  friend LevyModel stable_model(double alpha, double delta);
  friend LevyModel tilt(const LevyModel& model, double lambda);

private:
  enum class Family { kGamma, kStable };

  LevyModel(Family family, double p1, double p2, double tilt);

  Family family_;
  double p1_;    // theta (gamma) or alpha (stable)
  double p2_;    // rate  (gamma) or delta (stable)
  double tilt_;  // accumulated lambda >= 0
  std::string name_;
};

LevyModel gamma_model(double theta, double rate = 1.0);
LevyModel stable_model(double alpha, double delta);

// Tilted model, lambda >= 0 (0 is the identity). Tilts compose exactly:
// tilt(tilt(m, a), b) == tilt(m, a + b).
LevyModel tilt(const LevyModel& model, double lambda);

// tilt(stable_model(alpha, delta), zeta^{1/alpha} / 2).
LevyModel generalized_gamma_model(double alpha, double delta, double zeta);

// |psi(b) - int_0^inf (1 - e^{-bx}) rho(x) dx| with the integral done by
// quadrature; a self-test of the rho/psi pairing. Throws QuadratureError on
// non-convergence.
double verify_laplace_exponent(const LevyModel& model, double b,
                               const QuadratureSpec& spec = {});

}  // namespace gibbspk

#endif  // GIBBSPK_LEVY_HPP
