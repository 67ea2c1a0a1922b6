#ifndef GIBBSPK_QUADRATURE_HPP
#define GIBBSPK_QUADRATURE_HPP

#include <functional>
#include <string>

#include "gibbspk/errors.hpp"
#include "gibbspk/logspace.hpp"

namespace gibbspk {

// Integrands are non-negative and supplied in log domain: the callable
// returns log f(x) (-inf where f vanishes). Values spanning hundreds of
// orders of magnitude are handled by per-panel max-shift exponentiation,
// so only the log of the result needs to fit in a double.
using LogIntegrand = std::function<double(double)>;

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_panels = 4000;
};

struct QuadratureResult {
  double log_value = kNegInf;      // log of the integral
  double value = 0.0;              // exp(log_value); may over/underflow
  double log_abs_error = kNegInf;  // log of the estimated absolute error
  bool converged = false;
  int panels = 0;

  double abs_error() const { return std::exp(log_abs_error); }
  double rel_error() const { return std::exp(log_abs_error - log_value); }
};

// Adaptive Gauss7/Kronrod15 on a finite interval (a, b). Panels are bisected
// worst-error-first until the error estimate meets max(abs_tol, rel_tol*|I|)
// or max_panels is reached (converged = false, result still returned).
// Deterministic: identical inputs give bit-identical output.
QuadratureResult integrate(const LogIntegrand& log_f, double a, double b,
                           const QuadratureSpec& spec = {});

QuadratureResult integrate_01(const LogIntegrand& log_f, const QuadratureSpec& spec = {});

// Semi-infinite integral over (0, inf) via the substitution x = (u/(1-u))^2,
// dx = 2u/(1-u)^3 du, then adaptive panels on (0,1). The squared rational
// map keeps the truncated tail mass negligible even for the slowly decaying
// x^{-1-alpha} integrands of stable Levy densities.
QuadratureResult integrate_0inf(const LogIntegrand& log_f, const QuadratureSpec& spec = {});

// Throws QuadratureError (carrying the achieved error estimate) unless the
// result converged; `what` names the quantity being integrated.
const QuadratureResult& require_converged(const QuadratureResult& r, const std::string& what);

}  // namespace gibbspk

#endif  // GIBBSPK_QUADRATURE_HPP
