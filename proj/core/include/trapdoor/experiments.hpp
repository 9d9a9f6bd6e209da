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

#ifndef TRAPDOOR_EXPERIMENTS_HPP_
#define TRAPDOOR_EXPERIMENTS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "trapdoor/distribution.hpp"
#include "trapdoor/learners.hpp"

namespace trapdoor {

enum class TruthMode {
  kRandom,  // per-trial p drawn uniformly from [truth_low, truth_high]^d
  kFixed,   // every trial uses truth_p
};

// Full description of one sweep: the grid, the truth model, trial count, and
// seeding.  Parsed from a plain-text key=value file (see parse_sweep_config).
struct SweepConfig {
  std::vector<std::string> learners;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> sample_sizes;
  std::vector<PrivacyBudget> budgets;
  double class_weight = 0.1;
  TruthMode truth_mode = TruthMode::kRandom;
  double truth_low = 1.0 / 3.0;
  double truth_high = 2.0 / 3.0;
  std::vector<double> truth_p;  // fixed mode only
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  std::string output_path;
  unsigned threads = 0;  // 0 = hardware concurrency

  void validate() const;  // throws ConfigError
};

// Key=value format, one pair per line; '#' starts a comment.  Lists are
// comma-separated; budgets pair epsilon and delta with a colon
// (e.g. budgets=1:1e-6,0.5:1e-5).  Unknown keys are rejected.
SweepConfig parse_sweep_config(std::istream& in, const std::string& source);
SweepConfig parse_sweep_config(const std::filesystem::path& path);

// One trial's record.  tv_error is tv_decomposed for d within the
// brute-force limit; beyond it, the explicit upper bound
//   (1-w)/d * ||p_hat - p||_1 + w * [p_hat != p]
// which caps the unenumerable product term at its trivial bound.
struct ExperimentRow {
  std::string learner;
  std::size_t d = 0;
  std::size_t n = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  std::size_t trial = 0;
  double tv_error = 0.0;
  double l1_error = 0.0;
  std::size_t key_count = 0;
  bool fallback_used = false;
  std::uint64_t seed = 0;
};

// Deterministic per-trial seed: hash of the master seed with every cell
// coordinate, so any cell is reproducible in isolation.
std::uint64_t trial_seed(std::uint64_t master_seed, std::string_view learner,
                         std::size_t d, std::size_t n,
                         const PrivacyBudget& budget, std::size_t trial);

// The dimension-uniform upper-bound metric quoted above, usable at any d.
// Requires matching (w, d).
double tv_error_upper_bound(const TrapdoorParams& truth,
                            const TrapdoorParams& estimate);

// Runs every grid cell for every trial and returns the rows sorted by
// (learner, d, n, epsilon, delta, trial).  Output depends only on the
// config, not on the worker count.
std::vector<ExperimentRow> run_sweep(const SweepConfig& config);

// Per-cell aggregates over trials, sorted by cell key.  failure_rate is the
// fraction of trials with tv_error > alpha_threshold.
struct SummaryRow {
  std::string learner;
  std::size_t d = 0;
  std::size_t n = 0;
  double epsilon = 0.0;
  double delta = 0.0;
  std::size_t trials = 0;
  double tv_mean = 0.0;
  double tv_median = 0.0;
  double l1_mean = 0.0;
  double l1_median = 0.0;
  double failure_rate = 0.0;
};
std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows,
                                  double alpha_threshold);

// CSV with header
//   learner,d,n,epsilon,delta,trial,tv_error,l1_error,key_count,fallback_used,seed
// and floats rendered with 17 significant digits.
std::string rows_to_csv(const std::vector<ExperimentRow>& rows);
void write_csv(const std::vector<ExperimentRow>& rows,
               const std::filesystem::path& path);

// "%.17g" rendering used for every float in the CSV.
std::string format_full_precision(double value);

}  // namespace trapdoor

#endif  // TRAPDOOR_EXPERIMENTS_HPP_
