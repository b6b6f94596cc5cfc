// Copyright (C) 2026 The powerlaw authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit codes: 0 success (statistical rejection is
// data, not an error), 2 input/flag errors, 3 estimation/numerical failures.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "powerlaw/errors.hpp"
#include "powerlaw/estimate.hpp"
#include "powerlaw/lrt.hpp"
#include "powerlaw/model.hpp"
#include "powerlaw/montecarlo.hpp"
#include "powerlaw/sampling.hpp"
#include "powerlaw/text_io.hpp"

namespace {

using namespace powerlaw;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitEstimationError = 3;

const std::map<std::string, Estimator> kEstimatorNames{{"approx", Estimator::approx},
                                                       {"exact", Estimator::exact}};
const std::map<std::string, SampleMethod> kMethodNames{
    {"exact", SampleMethod::exact_inverse_cdf},
    {"approx", SampleMethod::continuous_approximation}};

struct FitArgs {
  std::string input;
  std::uint64_t x_min = 1;
  Estimator estimator = Estimator::exact;
  bool json = false;
};

struct TestArgs {
  std::string input1, input2;
  std::uint64_t x_min = 1;
  Estimator estimator = Estimator::exact;
  bool truncate = false;
  bool json = false;
};

struct SampleArgs {
  double alpha = 0.0;
  std::uint64_t x_min = 1;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  SampleMethod method = SampleMethod::exact_inverse_cdf;
  std::string out = "-";
};

struct CcdfArgs {
  std::string input;
  std::optional<double> alpha;
  std::uint64_t x_min = 1;
};

struct CalibrateArgs {
  CalibrationConfig config;
  bool json = false;
  std::string lambda_csv;
};

struct PowerArgs {
  PowerConfig config;
  bool json = false;
  std::string lambda_csv;
};

void run_fit(const FitArgs& args) {
  const Sample sample(io::read_integer_file(args.input));
  const FitResult result = fit(sample, args.x_min, args.estimator);
  std::cout << (args.json ? io::to_json(result) + "\n" : io::render_text(result));
}

void run_test(const TestArgs& args) {
  auto values1 = io::read_integer_file(args.input1);
  auto values2 = io::read_integer_file(args.input2);
  if (args.truncate) {
    auto t1 = io::drop_below(std::move(values1), args.x_min);
    auto t2 = io::drop_below(std::move(values2), args.x_min);
    if (t1.kept.empty() || t2.kept.empty()) {
      throw std::domain_error("test: truncation at x_min = " + std::to_string(args.x_min) +
                              " left an empty sample");
    }
    std::cerr << "truncated " << t1.dropped << " value(s) below x_min from " << args.input1
              << ", " << t2.dropped << " from " << args.input2 << "\n";
    values1 = std::move(t1.kept);
    values2 = std::move(t2.kept);
  }
  const Sample s1(std::move(values1));
  const Sample s2(std::move(values2));
  const TestResult result = two_sample_test(s1, s2, args.x_min, args.estimator);
  std::cout << (args.json ? io::to_json(result) + "\n" : io::render_text(result));
}

void run_sample(const SampleArgs& args) {
  const SamplerConfig config{PowerLawModel(args.alpha, args.x_min), args.method, args.seed};
  const Sample sample = draw_sample(config, args.n);

  std::ofstream file;
  if (args.out != "-") {
    file.open(args.out);
    if (!file) throw std::invalid_argument("sample: cannot open output file " + args.out);
  }
  std::ostream& out = args.out == "-" ? std::cout : file;
  // Sample stores values sorted; order carries no information for i.i.d. draws.
  for (const std::uint64_t v : sample.values()) out << v << '\n';
}

void run_ccdf(const CcdfArgs& args) {
  const Sample sample(io::read_integer_file(args.input));
  std::optional<PowerLawModel> overlay;
  if (args.alpha) overlay.emplace(*args.alpha, args.x_min);
  io::write_ccdf_csv(std::cout, sample, overlay);
}

void write_lambda_csv_file(const std::string& path, const std::vector<ReplicateOutcome>& outcomes) {
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot open lambda CSV file " + path);
  io::write_lambda_csv(file, outcomes);
}

void run_calibrate(const CalibrateArgs& args) {
  const CalibrationReport report = calibrate_null(args.config);
  if (!args.lambda_csv.empty()) write_lambda_csv_file(args.lambda_csv, report.outcomes);
  std::cout << (args.json ? io::to_json(report) + "\n" : io::render_text(report));
}

void run_power(const PowerArgs& args) {
  const PowerReport report = power_sweep(args.config);
  if (!args.lambda_csv.empty()) write_lambda_csv_file(args.lambda_csv, report.outcomes);
  std::cout << (args.json ? io::to_json(report) + "\n" : io::render_text(report));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete power-law fitting and two-sample log-likelihood-ratio testing"};
  app.require_subcommand(1);

  FitArgs fit_args;
  auto* cmd_fit = app.add_subcommand("fit", "Fit a discrete power law by maximum likelihood");
  cmd_fit->add_option("input", fit_args.input, "Input file, one integer per line ('-' = stdin)")
      ->required();
  cmd_fit->add_option("--xmin", fit_args.x_min, "Lower support cutoff")->check(CLI::PositiveNumber);
  cmd_fit->add_option("--estimator", fit_args.estimator, "MLE variant")
      ->transform(CLI::CheckedTransformer(kEstimatorNames));
  cmd_fit->add_flag("--json", fit_args.json, "Emit machine-readable JSON");
  cmd_fit->callback([&] { run_fit(fit_args); });

  TestArgs test_args;
  auto* cmd_test =
      app.add_subcommand("test", "Test whether two samples share one power law");
  cmd_test->add_option("input1", test_args.input1, "First sample file")->required();
  cmd_test->add_option("input2", test_args.input2, "Second sample file")->required();
  cmd_test->add_option("--xmin", test_args.x_min, "Shared lower support cutoff")
      ->check(CLI::PositiveNumber);
  cmd_test->add_option("--estimator", test_args.estimator, "MLE variant")
      ->transform(CLI::CheckedTransformer(kEstimatorNames));
  cmd_test->add_flag("--truncate", test_args.truncate,
                     "Drop values below x_min instead of failing");
  cmd_test->add_flag("--json", test_args.json, "Emit machine-readable JSON");
  cmd_test->callback([&] { run_test(test_args); });

  SampleArgs sample_args;
  auto* cmd_sample = app.add_subcommand("sample", "Draw reproducible power-law variates");
  cmd_sample->add_option("--alpha", sample_args.alpha, "Scaling parameter (> 1)")->required();
  cmd_sample->add_option("--xmin", sample_args.x_min, "Lower support cutoff")
      ->check(CLI::PositiveNumber);
  cmd_sample->add_option("--n", sample_args.n, "Number of values")->required()
      ->check(CLI::PositiveNumber);
  cmd_sample->add_option("--seed", sample_args.seed, "Generator seed");
  cmd_sample->add_option("--method", sample_args.method,
                         "exact inverse CDF or continuous approximation")
      ->transform(CLI::CheckedTransformer(kMethodNames));
  cmd_sample->add_option("--out", sample_args.out, "Output path ('-' = stdout)");
  cmd_sample->callback([&] { run_sample(sample_args); });

  CcdfArgs ccdf_args;
  double ccdf_alpha = 0.0;
  auto* cmd_ccdf =
      app.add_subcommand("ccdf", "Empirical CCDF as CSV, optionally with a model overlay");
  cmd_ccdf->add_option("input", ccdf_args.input, "Input file")->required();
  auto* overlay_opt =
      cmd_ccdf->add_option("--alpha", ccdf_alpha, "Overlay model scaling parameter");
  cmd_ccdf->add_option("--xmin", ccdf_args.x_min, "Overlay model x_min")
      ->check(CLI::PositiveNumber);
  cmd_ccdf->callback([&] {
    if (!overlay_opt->empty()) ccdf_args.alpha = ccdf_alpha;
    run_ccdf(ccdf_args);
  });

  CalibrateArgs cal_args;
  cal_args.config.levels.clear();
  auto* cmd_cal = app.add_subcommand(
      "calibrate", "Monte Carlo check of the chi-squared(1) null distribution of lambda");
  cmd_cal->add_option("--alpha", cal_args.config.alpha, "Null scaling parameter")->required();
  cmd_cal->add_option("--xmin", cal_args.config.x_min, "Lower support cutoff")
      ->check(CLI::PositiveNumber);
  cmd_cal->add_option("--n", cal_args.config.n_per_sample, "Values per sample")->required()
      ->check(CLI::PositiveNumber);
  cmd_cal->add_option("--replicates", cal_args.config.replicates, "Replicate pairs")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_cal->add_option("--level", cal_args.config.levels,
                      "Rejection level (repeatable; default 0.05)");
  cmd_cal->add_option("--seed", cal_args.config.seed, "Master seed");
  cmd_cal->add_option("--estimator", cal_args.config.estimator, "MLE variant")
      ->transform(CLI::CheckedTransformer(kEstimatorNames));
  cmd_cal->add_option("--threads", cal_args.config.threads, "Worker threads (0 = auto)");
  cmd_cal->add_flag("--json", cal_args.json, "Emit machine-readable JSON");
  cmd_cal->add_option("--lambda-csv", cal_args.lambda_csv,
                      "Write per-replicate lambda values to this CSV file");
  cmd_cal->callback([&] {
    if (cal_args.config.levels.empty()) cal_args.config.levels = {0.05};
    run_calibrate(cal_args);
  });

  PowerArgs power_args;
  auto* cmd_power = app.add_subcommand(
      "power", "Monte Carlo rejection rate when the scaling parameters differ by delta");
  cmd_power->add_option("--alpha", power_args.config.alpha, "First scaling parameter")
      ->required();
  cmd_power->add_option("--delta", power_args.config.delta,
                        "Gap: second sample uses alpha + delta")->required();
  cmd_power->add_option("--xmin", power_args.config.x_min, "Lower support cutoff")
      ->check(CLI::PositiveNumber);
  cmd_power->add_option("--n", power_args.config.n_per_sample, "Values per sample")->required()
      ->check(CLI::PositiveNumber);
  cmd_power->add_option("--replicates", power_args.config.replicates, "Replicate pairs")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_power->add_option("--level", power_args.config.level, "Rejection level");
  cmd_power->add_option("--seed", power_args.config.seed, "Master seed");
  cmd_power->add_option("--estimator", power_args.config.estimator, "MLE variant")
      ->transform(CLI::CheckedTransformer(kEstimatorNames));
  cmd_power->add_option("--threads", power_args.config.threads, "Worker threads (0 = auto)");
  cmd_power->add_flag("--json", power_args.json, "Emit machine-readable JSON");
  cmd_power->add_option("--lambda-csv", power_args.lambda_csv,
                        "Write per-replicate lambda values to this CSV file");
  cmd_power->callback([&] { run_power(power_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const UnboundedLikelihoodError& e) {
    std::cerr << "estimation error: " << e.what() << "\n";
    return kExitEstimationError;
  } catch (const BoundaryError& e) {
    std::cerr << "estimation error: " << e.what() << "\n";
    return kExitEstimationError;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "estimation error: " << e.what() << "\n";
    return kExitEstimationError;
  } catch (const std::domain_error& e) {
    std::cerr << "estimation error: " << e.what() << "\n";
    return kExitEstimationError;
  } catch (const std::overflow_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitEstimationError;
  }
  return kExitOk;
}
