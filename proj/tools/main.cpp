#include <chrono>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using fano::cli::Options;
using fano::cli::RunReport;

void print_text(const fano::io::Json& body, const std::string& indent = "") {
  for (const auto& [key, value] : body.items()) {
    if (value.is_object() && !value.empty()) {
      std::cout << indent << key << ":\n";
      print_text(value, indent + "  ");
    } else if (value.is_string()) {
      std::cout << indent << key << ": " << value.get<std::string>() << "\n";
    } else {
      std::cout << indent << key << ": " << value.dump() << "\n";
    }
  }
}

int run(const std::function<RunReport(const Options&)>& command, const Options& opts) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    report = command(opts);
  } catch (const fano::Error& e) {
    const bool input = e.code() == fano::ErrorCode::InvalidInput || e.code() == fano::ErrorCode::ParseError ||
                       e.code() == fano::ErrorCode::DivisionByZero;
    std::cerr << "error: " << e.what() << "\n";
    return input ? fano::cli::kInputError : fano::cli::kMathFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fano::cli::kInputError;
  }
  if (opts.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    report.body["duration_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  if (opts.json) {
    std::cout << report.body.dump(2) << "\n";
  } else {
    print_text(report.body);
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson structures and Poisson cohomology on cubic and quintic Fano threefolds"};
  app.require_subcommand(1);
  Options opts;
  std::function<RunReport(const Options&)> selected;

  auto common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", opts.json, "Emit a JSON report");
    cmd->add_flag("--timing", opts.timing, "Include wall-clock duration in the report");
  };
  auto bind = [&](CLI::App* cmd, RunReport (*fn)(const Options&)) {
    common(cmd);
    cmd->callback([&selected, fn] { selected = fn; });
  };

  auto* cubic = app.add_subcommand("cubic", "Cubic threefolds in P^4");
  cubic->require_subcommand(1);
  auto* cv = cubic->add_subcommand("verify", "Check the bracket table on an affine chart");
  cv->add_option("--cubic", opts.cubic, "JSON file {\"F\": polynomial}; defaults to the Fermat cubic")
      ->check(CLI::ExistingFile);
  cv->add_option("--input", opts.input, "JSON file with an \"F\" key")->check(CLI::ExistingFile);
  bind(cv, fano::cli::cubic_verify);
  auto* cc = cubic->add_subcommand("cohomology", "Poisson test and cohomology dimensions for a bivector");
  cc->add_option("--cubic", opts.cubic, "JSON file {\"F\": polynomial}; defaults to the Fermat cubic")
      ->check(CLI::ExistingFile);
  cc->add_option("--input", opts.input, "JSON file {\"a\": {...}}, optionally with \"F\"")
      ->required()
      ->check(CLI::ExistingFile);
  bind(cc, fano::cli::cubic_cohomology);

  auto* quintic = app.add_subcommand("quintic", "The del Pezzo quintic threefold");
  quintic->require_subcommand(1);
  auto* qv = quintic->add_subcommand("verify", "Check the model, bases and bracket tables");
  bind(qv, fano::cli::quintic_verify);
  auto* qc = quintic->add_subcommand("cohomology", "Poisson test and cohomology dimensions for a bivector");
  qc->add_option("--input", opts.input, "JSON file {\"a\": {...}} over pairs of 0,1,2,3,4,5,8")
      ->required()
      ->check(CLI::ExistingFile);
  bind(qc, fano::cli::quintic_cohomology);
  auto* qk = quintic->add_subcommand("conic", "Embed a conic point and check it");
  qk->add_option("--input", opts.input, "JSON file {\"a23\", \"a28\", \"a35\"}")->required()->check(CLI::ExistingFile);
  bind(qk, fano::cli::quintic_conic);

  auto* sw = app.add_subcommand("sweep", "Sample Poisson structures and tabulate rank strata");
  sw->add_option("target", opts.target, "cubic or quintic")->required()->check(CLI::IsMember({"cubic", "quintic"}));
  sw->add_option("--count", opts.count, "Samples per family")->default_val(50)->check(CLI::PositiveNumber);
  sw->add_option("--seed", opts.seed, "Seed of the sample generator")->required();
  sw->add_option("--cubic", opts.cubic, "JSON file {\"F\": polynomial} for cubic sweeps")->check(CLI::ExistingFile);
  bind(sw, fano::cli::sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fano::cli::kInputError;
  }
  return run(selected, opts);
}
