// Copyright 2026 The Trapdoor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command-line front end: sampling, pmf queries, TV computation, learning,
// the product-to-trapdoor lift, and Monte Carlo sweeps.
//
// Exit status: 0 on success, 1 on usage errors, 2 on data/contract errors.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trapdoor/dataset_io.hpp"
#include "trapdoor/distribution.hpp"
#include "trapdoor/error.hpp"
#include "trapdoor/experiments.hpp"
#include "trapdoor/learners.hpp"
#include "trapdoor/reductions.hpp"
#include "trapdoor/total_variation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string field =
        text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw trapdoor::ParseError("malformed number '" + field +
                                 "' in list '" + text + "'");
    }
    values.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

// Shortest representation that round-trips exactly; "0.1" prints as 0.1,
// not 0.10000000000000001.
std::string format_probability(double value, int digits) {
  if (digits > 0) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
    return buffer;
  }
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

trapdoor::TrapdoorParams make_params(double w, const std::string& p_text) {
  return trapdoor::TrapdoorParams(w,
                                  trapdoor::ProbVector(parse_double_list(p_text)));
}

struct SampleArgs {
  std::size_t d = 0;
  double w = 0.0;
  std::string p;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct PmfArgs {
  std::size_t d = 0;
  double w = 0.0;
  std::string p;
  std::string atom;
  int digits = 0;
};

struct TvArgs {
  std::size_t d = 0;
  double w = 0.0;
  std::string a_p;
  std::string b_p;
  bool brute = false;
  int digits = 0;
};

struct LearnArgs {
  std::string in;
  std::string learner;
  double w = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  bool has_epsilon = false;
  bool has_delta = false;
  std::uint64_t seed = 0;
};

struct LiftArgs {
  std::string in;
  double w = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

void check_dimension(std::size_t declared, std::size_t got,
                     const char* what) {
  if (declared != got) {
    throw trapdoor::ContractError(std::string(what) + " has " +
                                  std::to_string(got) +
                                  " entries but --d is " +
                                  std::to_string(declared));
  }
}

int run_sample(const SampleArgs& args) {
  const trapdoor::TrapdoorParams params = make_params(args.w, args.p);
  check_dimension(args.d, params.dimension(), "--p");
  const trapdoor::Dataset data =
      trapdoor::sample_dataset(params, args.n, args.seed);
  trapdoor::write_dataset(data, std::filesystem::path(args.out));
  return kExitOk;
}

int run_pmf(const PmfArgs& args) {
  const trapdoor::TrapdoorParams params = make_params(args.w, args.p);
  check_dimension(args.d, params.dimension(), "--p");
  const trapdoor::Sample atom = trapdoor::parse_atom(args.atom, args.d);
  std::cout << format_probability(trapdoor::pmf(params, atom), args.digits)
            << '\n';
  return kExitOk;
}

int run_tv(const TvArgs& args) {
  const trapdoor::TrapdoorParams a = make_params(args.w, args.a_p);
  const trapdoor::TrapdoorParams b = make_params(args.w, args.b_p);
  check_dimension(args.d, a.dimension(), "--a-p");
  check_dimension(args.d, b.dimension(), "--b-p");
  const double tv = args.brute ? trapdoor::tv_exact_bruteforce(a, b)
                               : trapdoor::tv_decomposed(a, b);
  std::cout << format_probability(tv, args.digits) << '\n';
  return kExitOk;
}

int run_learn(const LearnArgs& args) {
  const trapdoor::Dataset data =
      trapdoor::read_dataset(std::filesystem::path(args.in));
  std::optional<trapdoor::PrivacyBudget> budget;
  if (args.has_epsilon || args.has_delta) {
    if (!(args.has_epsilon && args.has_delta)) {
      throw trapdoor::ConfigError(
          "--epsilon and --delta must be given together");
    }
    budget.emplace(args.epsilon, args.delta);
  }
  const trapdoor::DensityLearner learner =
      trapdoor::make_learner(args.learner, args.w, budget, args.seed);
  const trapdoor::LearnReport report = learner(data);

  // One CSV row: learner,d,key_count,fallback_used,w,p_1,...,p_d.
  std::cout << args.learner << ',' << report.inferred_d << ','
            << report.key_count << ',' << (report.fallback_used ? 1 : 0) << ','
            << trapdoor::format_full_precision(
                   report.estimate.mixing_weight());
  for (double v : report.estimate.success_probs().values()) {
    std::cout << ',' << trapdoor::format_full_precision(v);
  }
  std::cout << '\n';
  return kExitOk;
}

int run_lift(const LiftArgs& args) {
  const trapdoor::ProductDataset input =
      trapdoor::read_product_dataset(std::filesystem::path(args.in));
  const trapdoor::Dataset lifted =
      trapdoor::lift_product_samples(input, args.w, args.seed);
  trapdoor::write_dataset(lifted, std::filesystem::path(args.out));
  return kExitOk;
}

int run_sweep(const std::string& config_path) {
  const trapdoor::SweepConfig config =
      trapdoor::parse_sweep_config(std::filesystem::path(config_path));
  const std::vector<trapdoor::ExperimentRow> rows = trapdoor::run_sweep(config);
  if (config.output_path.empty()) {
    std::cout << trapdoor::rows_to_csv(rows);
  } else {
    trapdoor::write_csv(rows, std::filesystem::path(config.output_path));
    std::cerr << "wrote " << rows.size() << " rows to " << config.output_path
              << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trapdoor: binary-product/trapdoor mixture distributions, "
               "TV geometry, learners and sweep harness"};
  app.require_subcommand(1);

  SampleArgs sample_args;
  CLI::App* sample = app.add_subcommand("sample", "Draw a dataset to a file");
  sample->add_option("--d", sample_args.d, "Dimension")->required();
  sample->add_option("--w", sample_args.w, "Mixing weight in (0,1)")->required();
  sample->add_option("--p", sample_args.p, "Comma-separated probabilities")
      ->required();
  sample->add_option("--n", sample_args.n, "Number of samples")->required();
  sample->add_option("--seed", sample_args.seed, "RNG seed")->required();
  sample->add_option("--out", sample_args.out, "Output dataset file")
      ->required();

  PmfArgs pmf_args;
  CLI::App* pmf = app.add_subcommand("pmf", "Probability of one atom");
  pmf->add_option("--d", pmf_args.d, "Dimension")->required();
  pmf->add_option("--w", pmf_args.w, "Mixing weight in (0,1)")->required();
  pmf->add_option("--p", pmf_args.p, "Comma-separated probabilities")
      ->required();
  pmf->add_option("--atom", pmf_args.atom, "Atom, K:b1,...,bd or H:+-j")
      ->required();
  pmf->add_option("--digits", pmf_args.digits,
                  "Significant digits (default: shortest exact form)");

  TvArgs tv_args;
  CLI::App* tv = app.add_subcommand("tv", "Total variation distance");
  tv->add_option("--d", tv_args.d, "Dimension")->required();
  tv->add_option("--w", tv_args.w, "Shared mixing weight")->required();
  tv->add_option("--a-p", tv_args.a_p, "First probability vector")->required();
  tv->add_option("--b-p", tv_args.b_p, "Second probability vector")
      ->required();
  tv->add_flag("--brute", tv_args.brute,
               "Enumerate the full support instead of the decomposition");
  tv->add_option("--digits", tv_args.digits,
                 "Significant digits (default: shortest exact form)");

  LearnArgs learn_args;
  CLI::App* learn = app.add_subcommand(
      "learn", "Run a learner on a dataset file; prints one CSV row: "
               "learner,d,key_count,fallback_used,w,p_1,...,p_d");
  learn->add_option("--in", learn_args.in, "Input dataset file")->required();
  learn->add_option("--learner", learn_args.learner,
                    "nonprivate | dp-key | dp-hard")
      ->required();
  learn->add_option("--w", learn_args.w, "Known class weight")->required();
  auto* eps_opt = learn->add_option("--epsilon", learn_args.epsilon,
                                    "Privacy epsilon (DP learners)");
  auto* delta_opt = learn->add_option("--delta", learn_args.delta,
                                      "Privacy delta (DP learners)");
  learn->add_option("--seed", learn_args.seed, "Noise seed (DP learners)");

  LiftArgs lift_args;
  CLI::App* lift = app.add_subcommand(
      "lift", "Convert a product-dataset file to a trapdoor-dataset file");
  lift->add_option("--in", lift_args.in, "Input product-dataset file")
      ->required();
  lift->add_option("--w", lift_args.w, "Mixing weight in [0,1]")->required();
  lift->add_option("--seed", lift_args.seed, "RNG seed")->required();
  lift->add_option("--out", lift_args.out, "Output dataset file")->required();

  std::string sweep_config;
  CLI::App* sweep = app.add_subcommand("sweep", "Run a Monte Carlo sweep");
  sweep->add_option("--config", sweep_config, "Sweep config file (key=value)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    learn_args.has_epsilon = eps_opt->count() > 0;
    learn_args.has_delta = delta_opt->count() > 0;
    if (sample->parsed()) return run_sample(sample_args);
    if (pmf->parsed()) return run_pmf(pmf_args);
    if (tv->parsed()) return run_tv(tv_args);
    if (learn->parsed()) return run_learn(learn_args);
    if (lift->parsed()) return run_lift(lift_args);
    if (sweep->parsed()) return run_sweep(sweep_config);
  } catch (const trapdoor::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
