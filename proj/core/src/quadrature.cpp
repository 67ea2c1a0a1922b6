#include "gibbspk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace gibbspk {

namespace {

// Gauss7/Kronrod15 nodes and weights on [-1,1] (QUADPACK dqk15 constants).
// Entries 1,3,5 of xgk plus the midpoint are the Gauss-7 nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double log_scale;   // max of log f over the 15 nodes
  double scaled_val;  // K15 estimate of the panel integral, divided by e^log_scale
  double scaled_err;  // |K15 - G7| in the same scaling
  double log_err() const {
    return scaled_err > 0.0 ? log_scale + std::log(scaled_err) : kNegInf;
  }
};

Panel evaluate_panel(const LogIntegrand& log_f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  double logs[15];
  double xs[15];
  int m = 0;
  xs[m++] = c;
  for (int i = 0; i < 7; ++i) {
    xs[m++] = c - h * kXgk[i];
    xs[m++] = c + h * kXgk[i];
  }
  double peak = kNegInf;
  for (int i = 0; i < 15; ++i) {
    const double lf = log_f(xs[i]);
    if (std::isnan(lf)) throw QuadratureError("integrand returned NaN", 0.0);
    logs[i] = lf;
    peak = std::max(peak, lf);
  }

  Panel p{a, b, peak, 0.0, 0.0};
  if (peak == kNegInf) return p;  // integrand vanishes on all nodes

  // node order in logs[]: center, then (left,right) pairs for kXgk[0..6]
  double k15 = kWgk[7] * std::exp(logs[0] - peak);
  double g7 = kWg[3] * std::exp(logs[0] - peak);
  for (int i = 0; i < 7; ++i) {
    const double pair = std::exp(logs[1 + 2 * i] - peak) + std::exp(logs[2 + 2 * i] - peak);
    k15 += kWgk[i] * pair;
    if (i % 2 == 1) g7 += kWg[(i - 1) / 2] * pair;  // kXgk[1],[3],[5] are Gauss nodes
  }
  p.scaled_val = h * k15;
  p.scaled_err = h * std::abs(k15 - g7);
  return p;
}

struct WorstFirst {
  bool operator()(const std::pair<double, size_t>& x, const std::pair<double, size_t>& y) const {
    return x.first < y.first;
  }
};

// Running totals of panel value/error in a common log scale. Incremental
// add/remove keeps the convergence test O(1); removal introduces rounding
// drift, so convergence is confirmed with an exact pass before stopping.
class ScaledTotals {
public:
  void add(const Panel& p) { accumulate(p, +1.0); }
  void remove(const Panel& p) { accumulate(p, -1.0); }

  void recompute(const std::vector<Panel>& panels) {
    scale_ = kNegInf;
    for (const Panel& p : panels) scale_ = std::max(scale_, p.log_scale);
    val_ = err_ = 0.0;
    if (scale_ == kNegInf) return;
    for (const Panel& p : panels) {
      const double shift = std::exp(p.log_scale - scale_);
      val_ += p.scaled_val * shift;
      err_ += p.scaled_err * shift;
    }
  }

  double log_value() const { return val_ > 0.0 ? scale_ + std::log(val_) : kNegInf; }
  double log_error() const { return err_ > 0.0 ? scale_ + std::log(err_) : kNegInf; }

private:
  void accumulate(const Panel& p, double sgn) {
    if (p.log_scale == kNegInf) return;
    if (p.log_scale > scale_) {
      const double shrink = scale_ == kNegInf ? 0.0 : std::exp(scale_ - p.log_scale);
      val_ *= shrink;
      err_ *= shrink;
      scale_ = p.log_scale;
    }
    const double shift = std::exp(p.log_scale - scale_);
    val_ += sgn * p.scaled_val * shift;
    err_ += sgn * p.scaled_err * shift;
    val_ = std::max(val_, 0.0);
    err_ = std::max(err_, 0.0);
  }

  double scale_ = kNegInf;
  double val_ = 0.0;
  double err_ = 0.0;
};

}  // namespace

QuadratureResult integrate(const LogIntegrand& log_f, double a, double b,
                           const QuadratureSpec& spec) {
  if (!(b > a)) throw std::invalid_argument("integrate: requires b > a");
  if (spec.rel_tol <= 0.0 || spec.abs_tol < 0.0)
    throw std::invalid_argument("integrate: tolerances must be positive");
  if (spec.max_panels < 1) throw std::invalid_argument("integrate: max_panels must be >= 1");

  std::vector<Panel> panels;
  panels.reserve(64);
  std::priority_queue<std::pair<double, size_t>, std::vector<std::pair<double, size_t>>, WorstFirst>
      queue;
  ScaledTotals totals;

  auto push = [&](Panel p) {
    panels.push_back(p);
    totals.add(p);
    queue.emplace(p.log_err(), panels.size() - 1);
  };
  // A moderately fine initial grid keeps narrow interior features (sharp
  // mixing bumps, boundary layers) from being missed outright.
  const int initial = std::min(16, spec.max_panels);
  for (int i = 0; i < initial; ++i) {
    const double lo = a + (b - a) * i / initial;
    const double hi = i + 1 == initial ? b : a + (b - a) * (i + 1) / initial;
    push(evaluate_panel(log_f, lo, hi));
  }

  const double log_abs_tol = spec.abs_tol > 0.0 ? std::log(spec.abs_tol) : kNegInf;
  const double log_rel_tol = std::log(spec.rel_tol);
  auto within_tol = [&] {
    return totals.log_error() <= std::max(log_abs_tol, log_rel_tol + totals.log_value());
  };
  auto converged = [&] {
    if (!within_tol()) return false;
    totals.recompute(panels);  // confirm: incremental totals drift
    return within_tol();
  };

  bool ok = converged();
  while (!ok && static_cast<int>(panels.size()) < spec.max_panels) {
    const auto [err, idx] = queue.top();
    queue.pop();
    if (err == kNegInf) break;  // nothing left worth refining
    const Panel worst = panels[idx];
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) continue;  // exhausted at double precision
    totals.remove(worst);
    panels[idx] = evaluate_panel(log_f, worst.a, mid);
    totals.add(panels[idx]);
    queue.emplace(panels[idx].log_err(), idx);
    push(evaluate_panel(log_f, mid, worst.b));
    ok = converged();
  }
  totals.recompute(panels);

  QuadratureResult r;
  r.log_value = totals.log_value();
  r.value = std::exp(r.log_value);
  r.log_abs_error = totals.log_error();
  r.converged = within_tol();
  r.panels = static_cast<int>(panels.size());
  return r;
}

QuadratureResult integrate_01(const LogIntegrand& log_f, const QuadratureSpec& spec) {
  return integrate(log_f, 0.0, 1.0, spec);
}

QuadratureResult integrate_0inf(const LogIntegrand& log_f, const QuadratureSpec& spec) {
  // x = (u/(1-u))^2, dx = 2u/(1-u)^3 du. The squared map reaches x ~ 1e32
  // before u runs out of double resolution, so even the heavy x^{-1-alpha}
  // stable tails leave a negligible truncated mass; it also regularizes
  // x^{-1/2}-type endpoint behavior at 0.
  auto transformed = [&log_f](double u) {
    if (u <= 0.0 || u >= 1.0) return kNegInf;
    const double om = 1.0 - u;
    const double x = (u / om) * (u / om);
    return log_f(x) + std::log(2.0 * u) - 3.0 * std::log(om);
  };
  return integrate(transformed, 0.0, 1.0, spec);
}

const QuadratureResult& require_converged(const QuadratureResult& r, const std::string& what) {
  if (!r.converged)
    throw QuadratureError("quadrature did not converge for " + what +
                              " (error estimate " + std::to_string(r.abs_error()) + ")",
                          r.abs_error());
  return r;
}

}  // namespace gibbspk
