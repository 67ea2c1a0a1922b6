#ifndef GIBBSPK_SAMPLERS_HPP
#define GIBBSPK_SAMPLERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "gibbspk/eppf.hpp"
#include "gibbspk/partition.hpp"

namespace gibbspk {

// Seedable deterministic random stream. Identical seeds give identical
// draws, bit-exact: the engine is std::mt19937_64 and all variates (uniform,
// normal, gamma) are generated by fixed in-library recipes rather than
// implementation-defined standard distributions. substream(i) derives an
// independently seeded stream for worker i.
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed);

  RandomSource substream(std::uint64_t index) const;
  std::uint64_t seed() const { return seed_; }

  double uniform01();  // [0, 1), 53-bit resolution
  double normal01();   // Box-Muller
  double gamma(double shape);  // unit rate; Marsaglia-Tsang, boosted for shape < 1

private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// One-step allocation probabilities of the predictive rule implied by the
// Gibbs recursion: entry j < k is the probability the next element joins
// block j, the last entry opens a new block,
//   p(join j) = (n_j - alpha) V_{n+1,k} / V_{n,k},
//   p(new)    = V_{n+1,k+1} / V_{n,k}.
// They sum to 1 exactly when the table satisfies the recursion; a deviation
// beyond 1e-6 throws NumericalError (signals a corrupt table).
std::vector<double> predictive_probabilities(const GibbsModel& model,
                                             const std::vector<int>& block_sizes);

// Running state of the sequential construction: current block sizes plus the
// driving model. Starts from the one-element partition.
class PredictiveState {
public:
  explicit PredictiveState(const GibbsModel& model) : model_(&model), sizes_{1} {}

  const GibbsModel& model() const { return *model_; }
  const std::vector<int>& block_sizes() const { return sizes_; }
  int n() const;
  int k() const { return static_cast<int>(sizes_.size()); }

  std::vector<double> probabilities() const { return predictive_probabilities(*model_, sizes_); }
  // choice in [0, k) joins that block; choice == k opens a new one
  void advance(int choice);

private:
  const GibbsModel* model_;
  std::vector<int> sizes_;
};

// Two-parameter Chinese restaurant process: customer i+1 joins block j with
// probability (n_j - alpha)/(i + theta) and opens a new block with
// probability (theta + k alpha)/(i + theta). Parameter ranges as for
// pd_v_weights.
SetPartition crp_sample(double alpha, double theta, int n, RandomSource& source);

// Sequential sampler driven by any Gibbs weight table (through n).
SetPartition gibbs_predictive_sample(const GibbsModel& model, int n, RandomSource& source);

// Finite-dimensional Dirichlet construction for alpha < 0: m iid
// Gamma(-alpha, 1) weights are normalized and n labels drawn from them; the
// induced partition is PD(alpha, m|alpha|). At most m blocks can appear.
SetPartition fisher_sample(double alpha, int m, int n, RandomSource& source);

}  // namespace gibbspk

#endif  // GIBBSPK_SAMPLERS_HPP
