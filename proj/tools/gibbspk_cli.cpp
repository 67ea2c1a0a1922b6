// Command-line front end: EPPF tables, partition sampling, verification
// suites, and V-table import/export.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gibbspk/eppf.hpp"
#include "gibbspk/samplers.hpp"
#include "gibbspk/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct ModelOptions {
  std::string model;
  double alpha = 0.0;
  double theta = 0.0;
  double delta = 0.0;
  double zeta = 0.0;
  double t = 0.0;
  int m = 0;
  bool has_theta = false, has_delta = false, has_zeta = false, has_t = false, has_m = false;
};

void add_model_options(CLI::App* cmd, ModelOptions& opts) {
  cmd->add_option("--model", opts.model, "pd | gg | conditional-stable | fisher")->required();
  cmd->add_option("--alpha", opts.alpha, "type parameter alpha (< 1)")->required();
  cmd->add_option("--theta", opts.theta, "PD concentration theta");
  cmd->add_option("--delta", opts.delta, "stable scale delta");
  cmd->add_option("--zeta", opts.zeta, "generalized-Gamma tilt zeta");
  cmd->add_option("--t", opts.t, "conditioning total mass t");
  cmd->add_option("--m", opts.m, "Fisher dimension m (alpha < 0)");
}

void capture_presence(CLI::App* cmd, ModelOptions& opts) {
  opts.has_theta = cmd->count("--theta") > 0;
  opts.has_delta = cmd->count("--delta") > 0;
  opts.has_zeta = cmd->count("--zeta") > 0;
  opts.has_t = cmd->count("--t") > 0;
  opts.has_m = cmd->count("--m") > 0;
}

void require_flag(bool present, const std::string& flag, const std::string& model) {
  if (!present)
    throw std::invalid_argument("model '" + model + "' requires " + flag);
}

// Builds a weight table deep enough for n elements.
gibbspk::GibbsModel build_model(const ModelOptions& o, int n, const gibbspk::QuadratureSpec& spec) {
  if (o.model == "pd") {
    require_flag(o.has_theta, "--theta", o.model);
    return gibbspk::pd_v_weights(o.alpha, o.theta, std::max(n + 1, 8));
  }
  if (o.model == "fisher") {
    require_flag(o.has_m, "--m", o.model);
    if (!(o.alpha < 0.0))
      throw std::invalid_argument("model 'fisher' requires alpha < 0");
    if (o.m < 1) throw std::invalid_argument("model 'fisher' requires m >= 1");
    return gibbspk::pd_v_weights(o.alpha, o.m * -o.alpha, std::max(n + 1, 8));
  }
  if (o.model == "gg") {
    require_flag(o.has_delta, "--delta", o.model);
    require_flag(o.has_zeta, "--zeta", o.model);
    return gibbspk::gg_v_weights(o.alpha, o.delta, o.zeta, std::max(n + 1, 2), spec);
  }
  if (o.model == "conditional-stable") {
    require_flag(o.has_delta, "--delta", o.model);
    require_flag(o.has_t, "--t", o.model);
    return gibbspk::conditional_stable_v_weights(o.alpha, o.delta, o.t, std::max(n + 1, 2),
                                                 spec);
  }
  throw std::invalid_argument("unknown model '" + o.model +
                              "' (expected pd, gg, conditional-stable or fisher)");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file " + path);
  return file;
}

std::string csv_quote(const std::string& s) { return '"' + s + '"'; }

int run_eppf(const ModelOptions& opts, bool model_given, const std::string& table_in,
             const std::string& table_out, int n, const std::string& format,
             const std::string& output, const gibbspk::QuadratureSpec& spec) {
  std::optional<gibbspk::GibbsModel> model;
  if (!table_in.empty()) {
    model = gibbspk::load_v_table(table_in);
    if (model->table_size() < n)
      throw std::invalid_argument("imported table covers n <= " +
                                  std::to_string(model->table_size()));
  } else {
    if (!model_given) throw std::invalid_argument("eppf needs --model or --table-in");
    model = build_model(opts, n, spec);
  }
  if (!table_out.empty()) gibbspk::save_v_table(*model, table_out);

  for (const auto& note : model->notes()) std::cerr << "note: " << note << "\n";

  const auto multiplicities = gibbspk::shape_multiplicities(n);
  double weighted_sum = 0.0;
  struct Row {
    std::string shape;
    long long count;
    double probability, log_probability;
  };
  std::vector<Row> rows;
  for (const auto& [shape, count] : multiplicities) {
    const double lp = gibbspk::log_gibbs_eppf(*model, shape);
    const double p = std::exp(lp);
    weighted_sum += static_cast<double>(count) * p;
    rows.push_back({shape.to_string(), count, p, lp});
  }

  const double tolerance = model->family() == "pd" ? 1e-10 : 1e-6;
  if (std::abs(weighted_sum - 1.0) > tolerance)
    throw gibbspk::NumericalError("EPPF table sums to " + fmt17(weighted_sum) +
                                  " against tolerance " + fmt17(tolerance));

  std::ofstream file;
  std::ostream& out = open_output(file, output);
  if (format == "csv") {
    out << "shape,count,probability,log_probability\n";
    for (const auto& r : rows)
      out << csv_quote(r.shape) << ',' << r.count << ',' << fmt17(r.probability) << ','
          << fmt17(r.log_probability) << '\n';
  } else {
    nlohmann::ordered_json j;
    j["model"] = model->family();
    j["alpha"] = model->alpha();
    auto params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : model->params()) params[k] = v;
    j["params"] = params;
    j["n"] = n;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      arr.push_back({{"shape", r.shape},
                     {"count", r.count},
                     {"probability", r.probability},
                     {"log_probability", r.log_probability}});
    j["rows"] = arr;
    j["weighted_sum"] = weighted_sum;
    if (!model->notes().empty()) j["notes"] = model->notes();
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

int run_sample(const ModelOptions& opts, int n, long long count, std::uint64_t seed,
               bool histogram, const std::string& format, const std::string& output,
               const gibbspk::QuadratureSpec& spec) {
  if (count < 1) throw std::invalid_argument("--count must be >= 1");

  gibbspk::RandomSource source(seed);
  std::function<gibbspk::SetPartition()> draw;
  if (opts.model == "pd") {
    require_flag(opts.has_theta, "--theta", opts.model);
    const double alpha = opts.alpha, theta = opts.theta;
    (void)gibbspk::pd_v_weights(alpha, theta, 2);  // parameter validation
    draw = [&source, alpha, theta, n] { return gibbspk::crp_sample(alpha, theta, n, source); };
  } else if (opts.model == "fisher") {
    require_flag(opts.has_m, "--m", opts.model);
    const double alpha = opts.alpha;
    const int m = opts.m;
    draw = [&source, alpha, m, n] { return gibbspk::fisher_sample(alpha, m, n, source); };
  } else {
    const auto model = build_model(opts, n, spec);
    for (const auto& note : model.notes()) std::cerr << "note: " << note << "\n";
    draw = [&source, model, n] { return gibbspk::gibbs_predictive_sample(model, n, source); };
  }

  std::ofstream file;
  std::ostream& out = open_output(file, output);
  if (!histogram) {
    for (long long i = 0; i < count; ++i) out << draw().to_string() << '\n';
    return kExitOk;
  }

  std::map<gibbspk::PartitionShape, long long> hist;
  for (long long i = 0; i < count; ++i) ++hist[draw().shape()];
  if (format == "csv") {
    out << "shape,count,frequency\n";
    for (const auto& [shape, c] : hist)
      out << csv_quote(shape.to_string()) << ',' << c << ','
          << fmt17(static_cast<double>(c) / static_cast<double>(count)) << '\n';
  } else {
    nlohmann::ordered_json j;
    j["model"] = opts.model;
    j["n"] = n;
    j["count"] = count;
    j["seed"] = seed;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [shape, c] : hist)
      arr.push_back({{"shape", shape.to_string()},
                     {"count", c},
                     {"frequency", static_cast<double>(c) / static_cast<double>(count)}});
    j["histogram"] = arr;
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

int run_verify(const std::string& suite, const std::string& table_in, std::uint64_t seed,
               int mc_samples, int partition_n, const std::string& format,
               const std::string& output, const gibbspk::QuadratureSpec& spec) {
  gibbspk::CheckReport report;
  if (!table_in.empty()) {
    report = gibbspk::run_table_checks(gibbspk::load_v_table(table_in));
  } else {
    gibbspk::VerificationConfig config;
    config.quadrature = spec;
    config.seed = seed;
    config.mc_samples = mc_samples;
    config.partition_n = partition_n;
    if (suite == "proposition2")
      report = gibbspk::run_proposition2_suite(config);
    else if (suite == "theorem1")
      report = gibbspk::run_theorem1_suite(config);
    else if (suite == "all")
      report = gibbspk::run_all_suites(config);
    else
      throw std::invalid_argument("unknown suite '" + suite +
                                  "' (expected all, proposition2 or theorem1)");
  }

  std::ofstream file;
  std::ostream& out = open_output(file, output);
  out << (format == "json" ? report.to_json() + "\n" : report.to_text());
  if (!output.empty())  // keep a human-readable trace on stdout as well
    std::cout << report.to_text();
  return report.all_passed() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gibbs partitions and Poisson-Kingman models: EPPF tables, samplers, checks"};
  app.require_subcommand(1);
  app.fallthrough();  // tolerance flags may follow the subcommand

  gibbspk::QuadratureSpec spec;
  app.add_option("--rel-tol", spec.rel_tol, "quadrature relative tolerance")
      ->capture_default_str();
  app.add_option("--abs-tol", spec.abs_tol, "quadrature absolute tolerance")
      ->capture_default_str();
  app.add_option("--max-panels", spec.max_panels, "quadrature panel budget")
      ->capture_default_str();

  // eppf
  auto* eppf_cmd = app.add_subcommand("eppf", "exhaustive (shape, probability) table for n");
  ModelOptions eppf_opts;
  add_model_options(eppf_cmd, eppf_opts);
  eppf_cmd->get_option("--model")->required(false);
  eppf_cmd->get_option("--alpha")->required(false);
  int eppf_n = 0;
  std::string eppf_format = "csv", eppf_output, table_in, table_out;
  eppf_cmd->add_option("--n", eppf_n, "number of elements (<= 13)")
      ->required()
      ->check(CLI::Range(1, gibbspk::kEnumerationCeiling));
  eppf_cmd->add_option("--format", eppf_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  eppf_cmd->add_option("--output", eppf_output, "output path (default stdout)");
  eppf_cmd->add_option("--table-in", table_in, "evaluate an imported V-table JSON file");
  eppf_cmd->add_option("--table-out", table_out, "export the built V-table as JSON");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "draw random partitions of [n]");
  ModelOptions sample_opts;
  add_model_options(sample_cmd, sample_opts);
  int sample_n = 0;
  long long sample_count = 1;
  std::uint64_t sample_seed = 0;
  bool sample_hist = false;
  std::string sample_format = "csv", sample_output;
  sample_cmd->add_option("--n", sample_n, "number of elements")->required()->check(CLI::Range(1, 100000));
  sample_cmd->add_option("--count", sample_count, "number of partitions to draw");
  sample_cmd->add_option("--seed", sample_seed, "random seed (sole source of randomness)");
  sample_cmd->add_flag("--histogram", sample_hist, "aggregate shape counts instead of streaming");
  sample_cmd->add_option("--format", sample_format, "csv | json (histogram mode)")
      ->check(CLI::IsMember({"csv", "json"}));
  sample_cmd->add_option("--output", sample_output, "output path (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run verification suites, emit a report");
  std::string verify_suite = "all", verify_table_in, verify_format = "text", verify_output;
  std::uint64_t verify_seed = 912873;
  int verify_mc = 200000, verify_n = 6;
  verify_cmd->add_option("--suite", verify_suite, "all | proposition2 | theorem1")
      ->capture_default_str();
  verify_cmd->add_option("--table-in", verify_table_in,
                         "check an imported V-table instead of running suites");
  verify_cmd->add_option("--seed", verify_seed, "seed for Monte Carlo checks")
      ->capture_default_str();
  verify_cmd->add_option("--mc-samples", verify_mc, "samples per Monte Carlo check")
      ->capture_default_str();
  verify_cmd->add_option("--n", verify_n, "shape depth for partition-level checks")
      ->capture_default_str();
  verify_cmd->add_option("--format", verify_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--output", verify_output, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eppf_cmd->parsed()) {
      capture_presence(eppf_cmd, eppf_opts);
      const bool model_given = eppf_cmd->count("--model") > 0;
      if (model_given && eppf_cmd->count("--alpha") == 0)
        throw std::invalid_argument("--alpha is required with --model");
      return run_eppf(eppf_opts, model_given, table_in, table_out, eppf_n, eppf_format,
                      eppf_output, spec);
    }
    if (sample_cmd->parsed()) {
      capture_presence(sample_cmd, sample_opts);
      return run_sample(sample_opts, sample_n, sample_count, sample_seed, sample_hist,
                        sample_format, sample_output, spec);
    }
    if (verify_cmd->parsed()) {
      return run_verify(verify_suite, verify_table_in, verify_seed, verify_mc, verify_n,
                        verify_format, verify_output, spec);
    }
  } catch (const gibbspk::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
