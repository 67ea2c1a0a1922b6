#include "gibbspk/eppf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "gibbspk/structural.hpp"

namespace gibbspk {

namespace {

constexpr int kMaxTableSize = 64;

void check_table_size(int table_size) {
  if (table_size < 1 || table_size > kMaxTableSize)
    throw std::invalid_argument("table_size must be in [1, " + std::to_string(kMaxTableSize) +
                                "]");
}

QuadratureSpec relative_only(const QuadratureSpec& spec) {
  return {spec.rel_tol, 0.0, spec.max_panels};
}

// Relative recursion residual |V_{n,k} - (n - a k)V_{n+1,k} - V_{n+1,k+1}| /
// V_{n,k} in log domain; zero weights with zero successors give 0, a zero
// weight with nonzero successors gives +inf.
double recursion_residual(double alpha, int n, int k, double log_vnk, double log_right1,
                          double log_right2) {
  const double log_sum = log_add(std::log(n - alpha * k) + log_right1, log_right2);
  if (log_vnk == kNegInf) return log_sum == kNegInf ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(std::expm1(log_sum - log_vnk));
}

double max_recursion_residual_rows(double alpha, const std::vector<std::vector<double>>& rows,
                                   int max_n) {
  double worst = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      worst = std::max(worst, recursion_residual(alpha, n, k, rows[n - 1][k - 1],
                                                 rows[n][k - 1], rows[n][k]));
    }
  }
  return worst;
}

std::string format_17g(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

GibbsModel::GibbsModel(double alpha, std::vector<std::vector<double>> rows,
                       std::function<double(int, int)> functional, std::string family,
                       std::vector<std::pair<std::string, double>> params,
                       QuadratureSpec tolerances, std::vector<std::string> notes)
    : alpha_(alpha),
      rows_(std::move(rows)),
      functional_(std::move(functional)),
      family_(std::move(family)),
      params_(std::move(params)),
      tolerances_(tolerances),
      notes_(std::move(notes)) {}

double GibbsModel::log_v(int n, int k) const {
  if (n < 1 || k < 1 || k > n)
    throw std::out_of_range("GibbsModel::log_v: need 1 <= k <= n, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
  if (n <= table_size()) return rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)];
  if (functional_) return functional_(n, k);
  throw std::out_of_range("GibbsModel::log_v: n=" + std::to_string(n) +
                          " beyond table of size " + std::to_string(table_size()));
}

GibbsModel GibbsModel::from_log_table(double alpha, std::vector<std::vector<double>> log_rows,
                                      std::string family,
                                      std::vector<std::pair<std::string, double>> params,
                                      const QuadratureSpec& tolerances) {
  if (log_rows.empty()) throw std::invalid_argument("from_log_table: empty table");
  for (size_t n = 0; n < log_rows.size(); ++n) {
    if (log_rows[n].size() != n + 1)
      throw std::invalid_argument("from_log_table: row " + std::to_string(n + 1) +
                                  " is not triangular");
    for (double lv : log_rows[n]) {
      if (std::isnan(lv) || lv == std::numeric_limits<double>::infinity())
        throw std::invalid_argument("from_log_table: weights must be finite or zero");
    }
  }
  if (std::abs(std::exp(log_rows[0][0]) - 1.0) > 1e-6)
    throw std::invalid_argument("from_log_table: V_{1,1} must be 1");
  return GibbsModel(alpha, std::move(log_rows), nullptr, std::move(family), std::move(params),
                    tolerances, {});
}

GibbsModel pd_v_weights(double alpha, double theta, int table_size) {
  check_table_size(table_size);
  if (!std::isfinite(alpha) || !std::isfinite(theta))
    throw std::invalid_argument("pd_v_weights: parameters must be finite");
  if (alpha >= 1.0) throw std::invalid_argument("pd_v_weights: alpha must be < 1");

  int neg_m = 0;
  if (alpha >= 0.0) {
    if (!(theta > -alpha))
      throw std::invalid_argument("pd_v_weights: theta must exceed -alpha");
  } else {
    const double m_real = theta / -alpha;
    neg_m = static_cast<int>(std::llround(m_real));
    if (neg_m < 1 || std::abs(theta - neg_m * -alpha) > 1e-9 * std::max(1.0, std::abs(theta)))
      throw std::invalid_argument(
          "pd_v_weights: alpha < 0 requires theta = m|alpha| for a positive integer m");
  }

  auto functional = [alpha, theta, neg_m](int n, int k) -> double {
    if (neg_m > 0 && k > neg_m) return kNegInf;  // analytic zero: factor theta + m*alpha
    const SignedLog num = log_rising_factorial(theta + alpha, k - 1, alpha);
    if (num.sign == 0) return kNegInf;
    const SignedLog den = log_rising_factorial(1.0 + theta, n - 1, 1.0);
    return num.log_abs - den.log_abs;
  };

  std::vector<std::vector<double>> rows(static_cast<size_t>(table_size));
  for (int n = 1; n <= table_size; ++n) {
    rows[static_cast<size_t>(n - 1)].resize(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] = functional(n, k);
  }

  std::vector<std::string> notes;
  if (alpha >= 0.0) {
    // digits lost forming the rising-factorial bases (theta -> -alpha,
    // alpha -> 1) plus any interior cancellation
    const double base_scale = std::max(1.0, std::abs(theta) + std::abs(alpha));
    const double digits = std::max(
        {std::log10(base_scale / (theta + alpha)), std::log10(1.0 / (1.0 - alpha)),
         rising_factorial_cancellation_digits(theta + alpha, table_size - 1, alpha),
         rising_factorial_cancellation_digits(1.0 + theta, table_size - 1, 1.0)});
    if (digits > 6.0) {
      std::ostringstream os;
      os << "near-degenerate parameters: rising factorials lose about " << static_cast<int>(digits)
         << " digits to cancellation";
      notes.push_back(os.str());
    }
  }

  return GibbsModel(alpha, std::move(rows), functional, "pd", {{"theta", theta}}, {},
                    std::move(notes));
}

namespace {

double gg_log_v(double alpha, double delta, double zeta, int n, int k,
                const QuadratureSpec& spec) {
  const double z = zeta == 0.0 ? 0.0 : std::pow(zeta, 1.0 / alpha);
  const double power = n - k * alpha;
  auto log_integrand = [n, alpha, delta, z, power](double lam) {
    const double base = z + 2.0 * lam;
    return (n - 1) * std::log(lam) - delta * std::pow(base, alpha) - power * std::log(base);
  };
  const auto r = require_converged(integrate_0inf(log_integrand, relative_only(spec)),
                                   "generalized-Gamma weight integral");
  return delta * zeta + k * (std::log(delta) + std::log(alpha)) + n * std::log(2.0) -
         std::lgamma(n) + r.log_value;
}

std::vector<std::vector<double>> gg_log_rows(double alpha, double delta, double zeta,
                                             int table_size, const QuadratureSpec& spec) {
  std::vector<std::vector<double>> rows(static_cast<size_t>(table_size));
  for (int n = 1; n <= table_size; ++n) {
    rows[static_cast<size_t>(n - 1)].resize(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k)
      rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] =
          gg_log_v(alpha, delta, zeta, n, k, spec);
  }
  return rows;
}

}  // namespace

GibbsModel gg_v_weights(double alpha, double delta, double zeta, int table_size,
                        const QuadratureSpec& spec) {
  check_table_size(table_size);
  (void)stable_model(alpha, delta);  // parameter validation
  if (!(zeta >= 0.0)) throw std::invalid_argument("gg_v_weights: zeta must be >= 0");

  using Key = std::tuple<double, double, double, int, double, double, int>;
  static std::mutex mutex;
  static std::map<Key, GibbsModel> cache;
  const Key key{alpha, delta, zeta, table_size, spec.rel_tol, spec.abs_tol, spec.max_panels};
  {
    std::scoped_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  auto rows = gg_log_rows(alpha, delta, zeta, table_size, spec);

  const double v11 = std::exp(rows[0][0]);
  if (std::abs(v11 - 1.0) > std::max(1e-6, 100.0 * spec.rel_tol))
    throw NumericalError("gg_v_weights: V_{1,1} = " + std::to_string(v11) +
                         ", expected 1 (convention or quadrature fault)");
  rows[0][0] = 0.0;  // pin the exact value

  if (table_size >= 2) {
    const double residual = max_recursion_residual_rows(alpha, rows, table_size - 1);
    if (residual > 1e-6)
      throw NumericalError("gg_v_weights: Gibbs recursion residual " + std::to_string(residual) +
                           " exceeds 1e-6 (convention or quadrature fault)");
  }

  // beyond the table, weights are integrated on demand
  auto functional = [alpha, delta, zeta, spec](int n, int k) {
    return gg_log_v(alpha, delta, zeta, n, k, spec);
  };

  GibbsModel model(alpha, std::move(rows), functional, "gg",
                   {{"delta", delta}, {"zeta", zeta}}, spec, {});
  std::scoped_lock lock(mutex);
  return cache.try_emplace(key, model).first->second;
}

namespace {

// mu(q|t) for stable_model(alpha, delta), relative-tolerance quadrature.
double log_structural_moment(double alpha, double delta, double q, double t,
                             const QuadratureSpec& spec) {
  const double mu = structural_moment(stable_model(alpha, delta), q, t, relative_only(spec));
  return std::log(mu);
}

// log p(shape | t) with block constant c in place of the convention-dependent
// prefactor: Gamma(1-a)/Gamma(n-ka) (c a / t^a)^{k-1} mu(n-1-(k-1)a | t) prod W.
double log_conditional_impl(double alpha, double delta, double t, const PartitionShape& shape,
                            double c, const QuadratureSpec& spec) {
  const int n = shape.n(), k = shape.k();
  const double q = n - 1 - (k - 1) * alpha;
  double lp = std::lgamma(1.0 - alpha) - std::lgamma(n - k * alpha) +
              (k - 1) * (std::log(c) + std::log(alpha) - alpha * std::log(t)) +
              log_structural_moment(alpha, delta, q, t, spec);
  for (int part : shape.parts()) lp += log_rising_factorial(1.0 - alpha, part - 1).log_abs;
  return lp;
}

}  // namespace

ConditionalStableConstant conditional_stable_correction(double alpha, double delta,
                                                        const QuadratureSpec& spec) {
  (void)stable_model(alpha, delta);

  using Key = std::tuple<double, double, double, double, int>;
  static std::mutex mutex;
  static std::map<Key, double> cache;
  const Key key{alpha, delta, spec.rel_tol, spec.abs_tol, spec.max_panels};
  const double t0 = 1.0;
  {
    std::scoped_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return {it->second, t0};
  }

  // Normalization at n = 2: p(2|t0) + c * p_raw((1,1)|t0) = 1, where
  // p(2|t0) = mu(1|t0) exactly (Gamma(2-a) = (1-a)Gamma(1-a) cancels the
  // prefactor) and p_raw uses the uncorrected prefactor (alpha / t0^alpha).
  const double p2 = std::exp(log_structural_moment(alpha, delta, 1.0, t0, spec));
  const double mu_sing = std::exp(log_structural_moment(alpha, delta, 1.0 - alpha, t0, spec));
  const double p11_raw = std::exp(std::lgamma(1.0 - alpha) - std::lgamma(2.0 - 2.0 * alpha)) *
                         alpha * std::pow(t0, -alpha) * mu_sing;
  const double c = (1.0 - p2) / p11_raw;
  if (!(c > 0.0) || !std::isfinite(c))
    throw NumericalError("conditional_stable_correction: normalization at n=2 failed");

  std::scoped_lock lock(mutex);
  cache.try_emplace(key, c);
  return {c, t0};
}

double log_conditional_stable_eppf(double alpha, double delta, double t,
                                   const PartitionShape& shape, const QuadratureSpec& spec) {
  if (!(t > 0.0)) throw std::invalid_argument("conditional_stable_eppf: t must be > 0");
  const double c = conditional_stable_correction(alpha, delta, spec).correction;
  return log_conditional_impl(alpha, delta, t, shape, c, spec);
}

double conditional_stable_eppf(double alpha, double delta, double t, const PartitionShape& shape,
                               const QuadratureSpec& spec) {
  return std::exp(log_conditional_stable_eppf(alpha, delta, t, shape, spec));
}

GibbsModel conditional_stable_v_weights(double alpha, double delta, double t, int table_size,
                                        const QuadratureSpec& spec) {
  check_table_size(table_size);
  if (!(t > 0.0)) throw std::invalid_argument("conditional_stable_v_weights: t must be > 0");
  (void)stable_model(alpha, delta);

  using Key = std::tuple<double, double, double, int, double, double, int>;
  static std::mutex mutex;
  static std::map<Key, GibbsModel> cache;
  const Key key{alpha, delta, t, table_size, spec.rel_tol, spec.abs_tol, spec.max_panels};
  {
    std::scoped_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const double c = conditional_stable_correction(alpha, delta, spec).correction;
  auto functional = [alpha, delta, t, c, spec](int n, int k) {
    const double q = n - 1 - (k - 1) * alpha;
    return std::lgamma(1.0 - alpha) - std::lgamma(n - k * alpha) +
           (k - 1) * (std::log(c) + std::log(alpha) - alpha * std::log(t)) +
           log_structural_moment(alpha, delta, q, t, spec);
  };
  std::vector<std::vector<double>> rows(static_cast<size_t>(table_size));
  for (int n = 1; n <= table_size; ++n) {
    rows[static_cast<size_t>(n - 1)].resize(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k)
      rows[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] = functional(n, k);
  }

  const double v11 = std::exp(rows[0][0]);
  if (std::abs(v11 - 1.0) > std::max(1e-6, 100.0 * spec.rel_tol))
    throw NumericalError("conditional_stable_v_weights: V_{1,1} = " + std::to_string(v11) +
                         ", expected 1");
  rows[0][0] = 0.0;

  if (table_size >= 2) {
    const double residual = max_recursion_residual_rows(alpha, rows, table_size - 1);
    if (residual > 1e-6)
      throw NumericalError("conditional_stable_v_weights: Gibbs recursion residual " +
                           std::to_string(residual) + " exceeds 1e-6");
  }

  std::ostringstream note;
  note << "block constant correction c = " << format_17g(c) << " applied (n=2 normalization at t=1)";
  GibbsModel model(alpha, std::move(rows), functional, "conditional-stable",
                   {{"delta", delta}, {"t", t}, {"correction", c}}, spec, {note.str()});
  std::scoped_lock lock(mutex);
  return cache.try_emplace(key, model).first->second;
}

double log_gibbs_eppf(const GibbsModel& model, const PartitionShape& shape) {
  double lp = model.log_v(shape.n(), shape.k());
  for (int part : shape.parts())
    lp += log_rising_factorial(1.0 - model.alpha(), part - 1).log_abs;
  return lp;
}

double gibbs_eppf(const GibbsModel& model, const PartitionShape& shape) {
  return std::exp(log_gibbs_eppf(model, shape));
}

MixingDensity::MixingDensity(std::function<double(double)> log_density,
                             const QuadratureSpec& spec)
    : log_density_(std::move(log_density)) {
  const auto r =
      require_converged(integrate_0inf(log_density_, spec), "mixing density normalization");
  normalization_residual_ = std::abs(r.value - 1.0);
  if (!(normalization_residual_ <= 1e-8))
    throw std::invalid_argument("MixingDensity: density integrates to " +
                                std::to_string(r.value) + ", not 1");
}

MixingDensity MixingDensity::from_total_mass_density(const LevyModel& model,
                                                     const QuadratureSpec& spec) {
  return MixingDensity([model](double t) { return model.log_density(t); }, spec);
}

MixingDensity MixingDensity::truncated_gamma(double shape, double rate, double upper,
                                             const QuadratureSpec& spec) {
  if (!(shape > 0.0 && rate > 0.0 && upper > 0.0))
    throw std::invalid_argument("truncated_gamma: shape, rate, upper must be > 0");
  auto log_kernel = [shape, rate](double t) { return (shape - 1.0) * std::log(t) - rate * t; };
  const double log_z =
      require_converged(integrate(log_kernel, 0.0, upper, spec), "truncated gamma normalizer")
          .log_value;
  auto log_density = [shape, rate, upper, log_z](double t) {
    if (t <= 0.0 || t >= upper) return kNegInf;
    return (shape - 1.0) * std::log(t) - rate * t - log_z;
  };
  return MixingDensity(log_density, spec);
}

MixingDensity MixingDensity::log_normal(double mu, double sigma, const QuadratureSpec& spec) {
  if (!(sigma > 0.0)) throw std::invalid_argument("log_normal: sigma must be > 0");
  auto log_density = [mu, sigma](double t) {
    if (t <= 0.0) return kNegInf;
    const double z = (std::log(t) - mu) / sigma;
    return -std::log(t) - std::log(sigma) - 0.5 * std::log(2.0 * std::numbers::pi) -
           0.5 * z * z;
  };
  return MixingDensity(log_density, spec);
}

double mixture_eppf(double alpha, double delta, const MixingDensity& mixing,
                    const PartitionShape& shape, const QuadratureSpec& spec) {
  const double c = conditional_stable_correction(alpha, delta, spec).correction;
  auto log_integrand = [&](double t) {
    const double lg = mixing.log_density(t);
    // p(shape|t) <= 1, so the integrand is negligible wherever gamma is;
    // skip the inner moment quadrature there.
    if (lg < -1000.0) return kNegInf;
    return log_conditional_impl(alpha, delta, t, shape, c, spec) + lg;
  };
  return require_converged(integrate_0inf(log_integrand, spec), "mixture EPPF").value;
}

double verify_gibbs_recursion(const GibbsModel& model, int max_n) {
  if (max_n < 1) throw std::invalid_argument("verify_gibbs_recursion: max_n must be >= 1");
  double worst = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      worst = std::max(worst,
                       recursion_residual(model.alpha(), n, k, model.log_v(n, k),
                                          model.log_v(n + 1, k), model.log_v(n + 1, k + 1)));
    }
  }
  return worst;
}

double verify_normalization(const GibbsModel& model, int n) {
  // log W_m = log (1-alpha)_{m-1}; row of log V by block count
  std::vector<double> log_w(static_cast<size_t>(n) + 1, 0.0);
  for (int m = 1; m <= n; ++m)
    log_w[static_cast<size_t>(m)] = log_rising_factorial(1.0 - model.alpha(), m - 1).log_abs;
  std::vector<double> log_v_row(static_cast<size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) log_v_row[static_cast<size_t>(k)] = model.log_v(n, k);

  // online log-sum-exp over every set partition of [n]
  double peak = kNegInf, sum = 0.0;
  std::vector<int> sizes(static_cast<size_t>(n));
  for_each_restricted_growth_string(n, [&](std::span<const int> rgs) {
    int k = 0;
    std::fill(sizes.begin(), sizes.end(), 0);
    for (int b : rgs) {
      k = std::max(k, b + 1);
      ++sizes[static_cast<size_t>(b)];
    }
    double lp = log_v_row[static_cast<size_t>(k)];
    for (int j = 0; j < k; ++j) lp += log_w[static_cast<size_t>(sizes[static_cast<size_t>(j)])];
    if (lp == kNegInf) return;
    if (lp <= peak) {
      sum += std::exp(lp - peak);
    } else {
      sum = sum * std::exp(peak - lp) + 1.0;
      peak = lp;
    }
  });
  if (peak == kNegInf) return 1.0;
  return std::abs(std::exp(peak + std::log(sum)) - 1.0);
}

double verify_normalization(const std::function<double(const PartitionShape&)>& eppf, int n) {
  double total = 0.0;
  for (const auto& [shape, count] : shape_multiplicities(n))
    total += static_cast<double>(count) * eppf(shape);
  return std::abs(total - 1.0);
}

double consistency_residual(const std::function<double(const PartitionShape&)>& eppf,
                            const PartitionShape& shape) {
  const double p = eppf(shape);
  double children = 0.0;
  const auto& parts = shape.parts();
  for (size_t j = 0; j < parts.size(); ++j) {
    auto grown = parts;
    ++grown[j];
    children += eppf(PartitionShape(grown));
  }
  auto extended = parts;
  extended.push_back(1);
  children += eppf(PartitionShape(extended));
  if (p == 0.0) return children == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(p - children) / p;
}

double max_consistency_residual(const GibbsModel& model, int max_n) {
  auto eppf = [&model](const PartitionShape& s) { return gibbs_eppf(model, s); };
  double worst = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& shape : all_shapes(n))
      worst = std::max(worst, consistency_residual(eppf, shape));
  }
  return worst;
}

std::string v_table_to_json(const GibbsModel& model) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["family"] = model.family();
  j["alpha"] = model.alpha();
  auto params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : model.params()) params[name] = value;
  j["params"] = params;
  j["N"] = model.table_size();
  j["tolerances"] = {{"rel", model.tolerances().rel_tol}, {"abs", model.tolerances().abs_tol}};
  auto rows = nlohmann::ordered_json::array();
  for (int n = 1; n <= model.table_size(); ++n) {
    auto row = nlohmann::ordered_json::array();
    for (int k = 1; k <= n; ++k) row.push_back(format_17g(model.v(n, k)));
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j.dump(2);
}

GibbsModel v_table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("v_table_from_json: ") + e.what());
  }
  if (!j.contains("schema_version") || j["schema_version"].get<int>() != 1)
    throw std::invalid_argument("v_table_from_json: unsupported schema version");
  const double alpha = j.at("alpha").get<double>();
  std::vector<std::pair<std::string, double>> params;
  if (j.contains("params")) {
    for (auto it = j["params"].begin(); it != j["params"].end(); ++it)
      params.emplace_back(it.key(), it.value().get<double>());
  }
  QuadratureSpec spec;
  if (j.contains("tolerances")) {
    spec.rel_tol = j["tolerances"].value("rel", spec.rel_tol);
    spec.abs_tol = j["tolerances"].value("abs", spec.abs_tol);
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : j.at("rows")) {
    std::vector<double> log_row;
    for (const auto& cell : row) {
      const std::string s = cell.get<std::string>();
      char* end = nullptr;
      const double v = std::strtod(s.c_str(), &end);
      if (end != s.c_str() + s.size())
        throw std::invalid_argument("v_table_from_json: bad weight '" + s + "'");
      if (!(v >= 0.0))
        throw std::invalid_argument("v_table_from_json: weights must be non-negative");
      log_row.push_back(v == 0.0 ? kNegInf : std::log(v));
    }
    rows.push_back(std::move(log_row));
  }
  const int n = j.value("N", static_cast<int>(rows.size()));
  if (n != static_cast<int>(rows.size()))
    throw std::invalid_argument("v_table_from_json: N does not match row count");
  return GibbsModel::from_log_table(alpha, std::move(rows),
                                    j.value("family", std::string("custom")), std::move(params),
                                    spec);
}

void save_v_table(const GibbsModel& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_v_table: cannot open " + path.string());
  out << v_table_to_json(model) << '\n';
  if (!out) throw std::runtime_error("save_v_table: write failed for " + path.string());
}

GibbsModel load_v_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_v_table: cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return v_table_from_json(buffer.str());
}

}  // namespace gibbspk
