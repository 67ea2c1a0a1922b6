#ifndef GIBBSPK_EPPF_HPP
#define GIBBSPK_EPPF_HPP

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gibbspk/levy.hpp"
#include "gibbspk/partition.hpp"
#include "gibbspk/quadrature.hpp"

namespace gibbspk {

// A Gibbs-type exchangeable partition model: the EPPF factorizes as
//
//   p(n_1,...,n_k) = V_{n,k} prod_j (1-alpha)_{n_j - 1}
//
// with V_{1,1} = 1 and the backward recursion
//
//   V_{n,k} = (n - alpha k) V_{n+1,k} + V_{n+1,k+1}
//
// (Gnedin and Pitman 2006). Weights are held as a triangular log-domain
// table for n <= table_size(), optionally backed by a closed-form
// functional beyond it. Construction is single-writer; afterwards all
// evaluation is read-only and safe for concurrent use.
class GibbsModel {
public:
  double alpha() const { return alpha_; }
  int table_size() const { return static_cast<int>(rows_.size()); }
  bool has_functional() const { return static_cast<bool>(functional_); }

  // log V_{n,k}; -inf encodes V = 0. Throws std::out_of_range for invalid
  // (n, k) or for n beyond the table when no functional is attached.
  double log_v(int n, int k) const;
  double v(int n, int k) const { return std::exp(log_v(n, k)); }

  const std::string& family() const { return family_; }
  const std::vector<std::pair<std::string, double>>& params() const { return params_; }
  const QuadratureSpec& tolerances() const { return tolerances_; }

  // Non-fatal diagnostics recorded at construction (near-degenerate
  // parameters, applied constant corrections).
  const std::vector<std::string>& notes() const { return notes_; }

  static GibbsModel from_log_table(double alpha, std::vector<std::vector<double>> log_rows,
                                   std::string family = "custom",
                                   std::vector<std::pair<std::string, double>> params = {},
                                   const QuadratureSpec& tolerances = {});

private:
  GibbsModel(double alpha, std::vector<std::vector<double>> rows,
             std::function<double(int, int)> functional, std::string family,
             std::vector<std::pair<std::string, double>> params, QuadratureSpec tolerances,
             std::vector<std::string> notes);

  double alpha_;
  std::vector<std::vector<double>> rows_;  // rows_[n-1][k-1] = log V_{n,k}
  std::function<double(int, int)> functional_;
  std::string family_;
  std::vector<std::pair<std::string, double>> params_;
  QuadratureSpec tolerances_;
  std::vector<std::string> notes_;

  friend GibbsModel pd_v_weights(double, double, int);
  friend GibbsModel gg_v_weights(double, double, double, int, const QuadratureSpec&);
  friend GibbsModel conditional_stable_v_weights(double, double, double, int,
                                                 const QuadratureSpec&);
};

// Two-parameter Poisson-Dirichlet weights (Pitman and Yor 1997):
//   V_{n,k} = (theta + alpha)_{k-1; alpha} / (1 + theta)_{n-1}.
// Valid for 0 <= alpha < 1 with theta > -alpha, or alpha < 0 with
// theta = m|alpha| for a positive integer m (the m-dimensional symmetric
// Dirichlet case, where V_{n,k} = 0 for k > m). alpha = 0 gives the Ewens
// weights theta^{k-1} / (1 + theta)_{n-1}. A closed-form functional covers
// n beyond the table.
GibbsModel pd_v_weights(double alpha, double theta, int table_size = 30);

// Generalized-Gamma weights, built by semi-infinite quadrature of
//
//   V_{n,k} = e^{delta zeta} delta^k alpha^k 2^n / Gamma(n)
//             * int_0^inf lam^{n-1} e^{-delta (zeta^{1/alpha} + 2 lam)^alpha}
//                         / (zeta^{1/alpha} + 2 lam)^{n - k alpha} dlam.
//
// Construction validates V_{1,1} = 1 and the Gibbs recursion to 1e-6
// relative and throws NumericalError on failure (either signals a
// convention or quadrature fault). Tables are cached per
// (alpha, delta, zeta, table_size, tolerances).
GibbsModel gg_v_weights(double alpha, double delta, double zeta, int table_size = 10,
                        const QuadratureSpec& spec = {});

// Weights of the conditional model given total mass t (so that
// gibbs_eppf(model, shape) == conditional_stable_eppf(alpha, delta, t, shape)),
// enabling predictive sampling and recursion checks for the conditional law.
GibbsModel conditional_stable_v_weights(double alpha, double delta, double t,
                                        int table_size = 10, const QuadratureSpec& spec = {});

double log_gibbs_eppf(const GibbsModel& model, const PartitionShape& shape);
double gibbs_eppf(const GibbsModel& model, const PartitionShape& shape);

// One-time validation of the block-constant of the conditional stable EPPF
// (Pitman 2003, Eq. (66)). The transcribed prefactor (alpha / t^alpha)^{k-1}
// is normalized at n = 2 into (c alpha / t^alpha)^{k-1}; in the 2^alpha
// stable units used here the correction works out to c = delta 2^alpha,
// independent of t. The applied value is reported, never silent: it is
// carried in the notes() of conditional tables and returned here.
struct ConditionalStableConstant {
  double correction;   // c, applied as c^{k-1}
  double reference_t;  // t at which the n = 2 normalization was solved
};
ConditionalStableConstant conditional_stable_correction(double alpha, double delta,
                                                        const QuadratureSpec& spec = {});

// EPPF of the conditional model PK(rho_{alpha,delta} | T = t):
//   p(n_1,...,n_k | t) = Gamma(1-alpha) / Gamma(n - k alpha)
//                        * (c alpha / t^alpha)^{k-1}
//                        * mu(n - 1 - (k-1) alpha | t)
//                        * prod_j (1-alpha)_{n_j - 1}
// with mu(q|t) the structural moment of stable_model(alpha, delta).
double log_conditional_stable_eppf(double alpha, double delta, double t,
                                   const PartitionShape& shape,
                                   const QuadratureSpec& spec = {});
double conditional_stable_eppf(double alpha, double delta, double t,
                               const PartitionShape& shape, const QuadratureSpec& spec = {});

// A probability density on (0, inf) used to mix conditional models over the
// total mass. Normalization is verified by quadrature at construction
// (|integral - 1| <= 1e-8) and std::invalid_argument is thrown otherwise.
class MixingDensity {
public:
  MixingDensity(std::function<double(double)> log_density, const QuadratureSpec& spec = {});

  double log_density(double t) const { return log_density_(t); }
  double normalization_residual() const { return normalization_residual_; }

  // gamma(t) = f_T(t) for the given model (e.g. a tilted stable density).
  static MixingDensity from_total_mass_density(const LevyModel& model,
                                               const QuadratureSpec& spec = {});
  // Gamma(shape, rate) density truncated to (0, upper), renormalized.
  static MixingDensity truncated_gamma(double shape, double rate, double upper,
                                       const QuadratureSpec& spec = {});
  // Log-normal density; sigma small gives a narrow bump near exp(mu).
  static MixingDensity log_normal(double mu, double sigma, const QuadratureSpec& spec = {});

private:
  std::function<double(double)> log_density_;
  double normalization_residual_;
};

// EPPF of the mixed model PK(rho_{alpha,delta}, gamma):
//   p(shape) = int_0^inf p(shape | t) gamma(t) dt.
// Mixing with gamma = f_T recovers the basic normalized-stable model;
// mixing with a tilted density f^lambda recovers the generalized-Gamma
// EPPF (the exponential-tilting characterization at partition level).
double mixture_eppf(double alpha, double delta, const MixingDensity& mixing,
                    const PartitionShape& shape, const QuadratureSpec& spec = {});

// Max over 1 <= k <= n <= max_n of the relative Gibbs-recursion residual
//   |V_{n,k} - (n - alpha k) V_{n+1,k} - V_{n+1,k+1}| / V_{n,k},
// computed in log domain. Requires weights through max_n + 1.
double verify_gibbs_recursion(const GibbsModel& model, int max_n);

// |sum over all set partitions of [n] of the EPPF - 1|, the probability
// axiom applied to the EPPF with the exhaustive enumeration as oracle.
double verify_normalization(const GibbsModel& model, int n);
double verify_normalization(const std::function<double(const PartitionShape&)>& eppf, int n);

// Addition-rule residual at one shape: p(shape) against the sum of its
// n+1 extensions (each block grown by one, plus a new singleton), relative
// to p(shape). Equivalent to the V-recursion but tested at EPPF level.
double consistency_residual(const std::function<double(const PartitionShape&)>& eppf,
                            const PartitionShape& shape);
double max_consistency_residual(const GibbsModel& model, int max_n);

// Versioned JSON serialization of the weight table; values are decimal
// strings with 17 significant digits and round-trip exactly.
std::string v_table_to_json(const GibbsModel& model);
GibbsModel v_table_from_json(const std::string& text);
void save_v_table(const GibbsModel& model, const std::filesystem::path& path);
GibbsModel load_v_table(const std::filesystem::path& path);

}  // namespace gibbspk

#endif  // GIBBSPK_EPPF_HPP
