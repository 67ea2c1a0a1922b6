#include "gibbspk/structural.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gibbspk {

namespace {

// Memo of the last log f(t) per thread. The integral-representation density
// is quadrature-backed, and moment integrals hit the same t many times.
struct DensityMemo {
  bool valid = false;
  bool is_gamma = false;
  double p_alpha_or_theta = 0.0, p2 = 0.0, tilt = 0.0, t = 0.0;
  double log_f = 0.0;
};
thread_local DensityMemo g_memo;

double cached_log_density(const LevyModel& m, double t) {
  const double p1 = m.is_gamma() ? m.theta() : m.alpha();
  const double p2 = m.is_gamma() ? m.rate() : m.delta();
  DensityMemo& memo = g_memo;
  if (memo.valid && memo.is_gamma == m.is_gamma() && memo.p_alpha_or_theta == p1 &&
      memo.p2 == p2 && memo.tilt == m.tilt_parameter() && memo.t == t) {
    return memo.log_f;
  }
  const double log_f = m.log_density(t);
  memo = {true, m.is_gamma(), p1, p2, m.tilt_parameter(), t, log_f};
  return log_f;
}

}  // namespace

StructuralDensity::StructuralDensity(LevyModel model) : model_(std::move(model)) {
  if (!model_.has_density())
    throw std::invalid_argument("StructuralDensity: model lacks a density evaluator");
}

double StructuralDensity::log_density(double p, double t) const {
  if (!(t > 0.0)) throw std::invalid_argument("StructuralDensity: t must be > 0");
  if (!(p > 0.0 && p < 1.0)) return kNegInf;
  const double pt = p * t;
  return std::log(p) + std::log(t) + model_.log_levy_density(pt) +
         model_.log_density((1.0 - p) * t) - cached_log_density(model_, t);
}

double StructuralDensity::density(double p, double t) const {
  return std::exp(log_density(p, t));
}

StructuralDensity structural_density(const LevyModel& model) {
  return StructuralDensity(model);
}

double structural_moment(const LevyModel& model, double q, double t,
                         const QuadratureSpec& spec) {
  if (!(q >= 0.0)) throw std::invalid_argument("structural_moment: q must be >= 0");
  const StructuralDensity f(model);
  auto log_integrand = [&f, q, t](double p) { return q * std::log(p) + f.log_density(p, t); };
  return require_converged(integrate_01(log_integrand, spec), "structural moment").value;
}

double verify_tilt_invariance(const LevyModel& model, double lambda,
                              std::span<const double> ps, std::span<const double> ts) {
  const StructuralDensity base(model);
  const StructuralDensity tilted(tilt(model, lambda));
  double worst = 0.0;
  for (double t : ts) {
    for (double p : ps) {
      const double a = base.density(p, t);
      const double b = tilted.density(p, t);
      worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), 1e-300));
    }
  }
  return worst;
}

}  // namespace gibbspk
