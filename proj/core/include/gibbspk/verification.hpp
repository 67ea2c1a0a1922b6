#ifndef GIBBSPK_VERIFICATION_HPP
#define GIBBSPK_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gibbspk/eppf.hpp"
#include "gibbspk/quadrature.hpp"

namespace gibbspk {

// One executed check. `statement` records the identity being verified;
// `comparison` is "<=" for agreement checks and ">" for falsification runs
// (where the metric must exceed the threshold to pass).
struct CheckResult {
  std::string name;
  std::string statement;
  std::string parameters;
  double metric = 0.0;
  double tolerance = 0.0;
  std::string comparison = "<=";
  bool pass = false;
  double runtime_ms = 0.0;
};

struct CheckReport {
  int schema_version = 1;
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  void merge(const CheckReport& other);

  std::string to_json() const;
  std::string to_text() const;
};

struct VerificationConfig {
  QuadratureSpec quadrature{};
  std::uint64_t seed = 912873;
  int mc_samples = 200000;
  // shape depth for partition-level equality and for falsification runs
  int partition_n = 6;
  int falsification_n = 4;
  // (delta, zeta) grid for the exponential-tilting checks at alpha = 1/2
  std::vector<std::pair<double, double>> delta_zeta = {
      {1.0, 0.0}, {1.0, 0.5}, {1.0, 1.0}, {1.0, 2.0}};
};

// Exponential-tilting characterization: (i) tilt invariance of structural
// densities, (ii) mixture EPPF with tilted-stable mixing equals the
// generalized-Gamma EPPF on every shape, (iii) representative non-tilted
// mixings (truncated Gamma, log-normal) fail the same equality.
CheckReport run_proposition2_suite(const VerificationConfig& config = {});

// The three extreme-partition regimes: alpha < 0 (finite Dirichlet),
// alpha = 0 (Ewens), alpha in (0,1) (conditional stable and generalized
// Gamma) -- recursion, normalization, consistency and Monte Carlo checks.
CheckReport run_theorem1_suite(const VerificationConfig& config = {});

// Recursion and normalization checks against an arbitrary weight table
// (e.g. one loaded from JSON). Closed-form families are held to tighter
// tolerances than quadrature-built ones.
CheckReport run_table_checks(const GibbsModel& model, int max_n = 6);

CheckReport run_all_suites(const VerificationConfig& config = {});

}  // namespace gibbspk

#endif  // GIBBSPK_VERIFICATION_HPP
