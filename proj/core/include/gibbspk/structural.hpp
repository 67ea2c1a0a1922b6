#ifndef GIBBSPK_STRUCTURAL_HPP
#define GIBBSPK_STRUCTURAL_HPP

#include <span>

#include "gibbspk/levy.hpp"
#include "gibbspk/quadrature.hpp"

namespace gibbspk {

// Conditional density of the first size-biased pick P1 from the normalized
// ranked jumps, given total mass T = t (Perman, Pitman and Yor 1992):
//
//   f(p|t) = p t rho(p t) f(pbar t) / f(t),   0 < p < 1, pbar = 1 - p.
//
// Defined on the open interval only; the value may diverge integrably at
// either endpoint (like p^{-alpha} at 0 for stable-family models), so
// integration against it is left to the adaptive quadrature.
class StructuralDensity {
public:
  explicit StructuralDensity(LevyModel model);

  double log_density(double p, double t) const;
  double density(double p, double t) const;

  const LevyModel& model() const { return model_; }

private:
  LevyModel model_;
};

StructuralDensity structural_density(const LevyModel& model);

// q-th moment of the first size-biased pick given T = t:
//   mu(q|t) = int_0^1 p^q f(p|t) dp,  q >= 0.
// mu(0|t) = 1 (density normalization); q -> mu(q|t) is non-increasing.
double structural_moment(const LevyModel& model, double q, double t,
                         const QuadratureSpec& spec = {});

// Max over the (p, t) grid of the relative discrepancy between the
// structural density built from tilt(model, lambda) and the one built from
// model itself. Exponential tilting leaves f(p|t) invariant, so this should
// sit at rounding level; denominators are floored at 1e-300.
double verify_tilt_invariance(const LevyModel& model, double lambda,
                              std::span<const double> ps, std::span<const double> ts);

}  // namespace gibbspk

#endif  // GIBBSPK_STRUCTURAL_HPP
