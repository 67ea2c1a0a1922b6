#include "gibbspk/samplers.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gibbspk/errors.hpp"

namespace gibbspk {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

void validate_crp_parameters(double alpha, double theta) {
  if (!std::isfinite(alpha) || !std::isfinite(theta))
    throw std::invalid_argument("crp_sample: parameters must be finite");
  if (alpha >= 1.0) throw std::invalid_argument("crp_sample: alpha must be < 1");
  if (alpha >= 0.0) {
    if (!(theta > -alpha)) throw std::invalid_argument("crp_sample: theta must exceed -alpha");
  } else {
    const auto m = std::llround(theta / -alpha);
    if (m < 1 || std::abs(theta - static_cast<double>(m) * -alpha) >
                     1e-9 * std::max(1.0, std::abs(theta)))
      throw std::invalid_argument(
          "crp_sample: alpha < 0 requires theta = m|alpha| for a positive integer m");
  }
}

SetPartition partition_from_assignments(const std::vector<int>& assignment, int k) {
  std::vector<std::vector<int>> blocks(static_cast<size_t>(k));
  for (size_t i = 0; i < assignment.size(); ++i)
    blocks[static_cast<size_t>(assignment[i])].push_back(static_cast<int>(i) + 1);
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  return SetPartition(std::move(blocks));
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

RandomSource RandomSource::substream(std::uint64_t index) const {
  return RandomSource(splitmix64(seed_ ^ (0xA5A5A5A5A5A5A5A5ULL + index)));
}

double RandomSource::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::normal01() {
  // Box-Muller; 1 - u keeps the log argument in (0, 1]
  const double u1 = 1.0 - uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double RandomSource::gamma(double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("RandomSource::gamma: shape must be > 0");
  if (shape < 1.0) {
    // boost: G(a) = G(a+1) U^{1/a}
    const double u = 1.0 - uniform01();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia and Tsang (2000) squeeze method
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = normal01();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = 1.0 - uniform01();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::vector<double> predictive_probabilities(const GibbsModel& model,
                                             const std::vector<int>& block_sizes) {
  const int k = static_cast<int>(block_sizes.size());
  int n = 0;
  for (int s : block_sizes) {
    if (s < 1) throw std::invalid_argument("predictive_probabilities: block sizes must be >= 1");
    n += s;
  }
  const double log_vnk = model.log_v(n, k);
  if (log_vnk == kNegInf)
    throw NumericalError("predictive_probabilities: V_{n,k} = 0 at the current state");
  const double alpha = model.alpha();

  std::vector<double> probs(static_cast<size_t>(k) + 1);
  const double grow = std::exp(model.log_v(n + 1, k) - log_vnk);
  for (int j = 0; j < k; ++j)
    probs[static_cast<size_t>(j)] = (block_sizes[static_cast<size_t>(j)] - alpha) * grow;
  probs[static_cast<size_t>(k)] = std::exp(model.log_v(n + 1, k + 1) - log_vnk);

  double total = 0.0;
  for (double p : probs) total += p;
  if (std::abs(total - 1.0) > 1e-6)
    throw NumericalError("predictive_probabilities: one-step probabilities sum to " +
                         std::to_string(total) + "; V-table violates the Gibbs recursion");
  return probs;
}

SetPartition crp_sample(double alpha, double theta, int n, RandomSource& source) {
  validate_crp_parameters(alpha, theta);
  if (n < 1) throw std::invalid_argument("crp_sample: n must be >= 1");

  std::vector<int> assignment(static_cast<size_t>(n));
  std::vector<int> sizes;
  sizes.reserve(8);
  sizes.push_back(1);  // customer 1 opens the first block
  assignment[0] = 0;
  for (int i = 1; i < n; ++i) {
    const int k = static_cast<int>(sizes.size());
    double r = source.uniform01() * (i + theta);
    int choice = k;  // falls through to a new block
    for (int j = 0; j < k; ++j) {
      r -= sizes[static_cast<size_t>(j)] - alpha;
      if (r < 0.0) {
        choice = j;
        break;
      }
    }
    if (choice == k)
      sizes.push_back(1);
    else
      ++sizes[static_cast<size_t>(choice)];
    assignment[static_cast<size_t>(i)] = choice;
  }
  return partition_from_assignments(assignment, static_cast<int>(sizes.size()));
}

int PredictiveState::n() const {
  int total = 0;
  for (int s : sizes_) total += s;
  return total;
}

void PredictiveState::advance(int choice) {
  if (choice < 0 || choice > k())
    throw std::invalid_argument("PredictiveState::advance: choice out of range");
  if (choice == k())
    sizes_.push_back(1);
  else
    ++sizes_[static_cast<size_t>(choice)];
}

SetPartition gibbs_predictive_sample(const GibbsModel& model, int n, RandomSource& source) {
  if (n < 1) throw std::invalid_argument("gibbs_predictive_sample: n must be >= 1");
  (void)model.log_v(n, 1);  // surfaces "table too small" before sampling starts

  std::vector<int> assignment(static_cast<size_t>(n));
  PredictiveState state(model);
  assignment[0] = 0;
  for (int i = 1; i < n; ++i) {
    const auto probs = state.probabilities();
    const int k = state.k();
    double r = source.uniform01();
    int choice = k;
    for (int j = 0; j < k; ++j) {
      r -= probs[static_cast<size_t>(j)];
      if (r < 0.0) {
        choice = j;
        break;
      }
    }
    state.advance(choice);
    assignment[static_cast<size_t>(i)] = choice;
  }
  return partition_from_assignments(assignment, state.k());
}

SetPartition fisher_sample(double alpha, int m, int n, RandomSource& source) {
  if (!(alpha < 0.0)) throw std::invalid_argument("fisher_sample: alpha must be < 0");
  if (m < 1) throw std::invalid_argument("fisher_sample: m must be >= 1");
  if (n < 1) throw std::invalid_argument("fisher_sample: n must be >= 1");

  std::vector<double> weights(static_cast<size_t>(m));
  double total = 0.0;
  for (double& w : weights) {
    w = source.gamma(-alpha);
    total += w;
  }

  std::vector<int> assignment(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double r = source.uniform01() * total;
    int choice = m - 1;
    for (int j = 0; j < m; ++j) {
      r -= weights[static_cast<size_t>(j)];
      if (r < 0.0) {
        choice = j;
        break;
      }
    }
    assignment[static_cast<size_t>(i)] = choice;
  }
  return partition_from_assignments(assignment, m);
}

}  // namespace gibbspk
