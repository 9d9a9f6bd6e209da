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

#include "trapdoor/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include "trapdoor/error.hpp"
#include "trapdoor/norms.hpp"
#include "trapdoor/random.hpp"
#include "trapdoor/total_variation.hpp"

namespace trapdoor {

namespace {

// Sub-seed tags under one trial seed.
constexpr std::uint64_t kTruthTag = 1;
constexpr std::uint64_t kDatasetTag = 2;
constexpr std::uint64_t kNoiseTag = 3;

struct TrialTask {
  std::size_t slot = 0;
  std::string learner;
  std::size_t d = 0;
  std::size_t n = 0;
  PrivacyBudget budget{1.0, 1e-6};
  std::size_t trial = 0;
};

std::vector<double> draw_truth(const SweepConfig& config, std::size_t d,
                               std::uint64_t seed) {
  if (config.truth_mode == TruthMode::kFixed) {
    return config.truth_p;
  }
  Rng rng(seed);
  std::vector<double> p(d);
  for (double& v : p) v = rng.uniform_in(config.truth_low, config.truth_high);
  return p;
}

// Estimates from the hard-only fallback may come back with a smaller
// dimension than the truth; missing coordinates carry no information and are
// scored as the 1/2 default.
TrapdoorParams pad_to_dimension(const TrapdoorParams& estimate,
                                std::size_t d) {
  if (estimate.dimension() == d) return estimate;
  std::vector<double> p = estimate.success_probs().values();
  p.resize(d, 0.5);
  return TrapdoorParams(estimate.mixing_weight(), ProbVector(std::move(p)));
}

ExperimentRow run_trial(const SweepConfig& config, const TrialTask& task) {
  const std::uint64_t seed = trial_seed(config.master_seed, task.learner,
                                        task.d, task.n, task.budget,
                                        task.trial);
  const std::vector<double> truth_p =
      draw_truth(config, task.d, derive_seed(seed, kTruthTag));
  const TrapdoorParams truth(config.class_weight, ProbVector(truth_p));
  const Dataset data =
      sample_dataset(truth, task.n, derive_seed(seed, kDatasetTag));
  const DensityLearner learner =
      make_learner(task.learner, config.class_weight, task.budget,
                   derive_seed(seed, kNoiseTag));
  const LearnReport report = learner(data);
  const TrapdoorParams estimate = pad_to_dimension(report.estimate, task.d);

  ExperimentRow row;
  row.learner = task.learner;
  row.d = task.d;
  row.n = task.n;
  row.epsilon = task.budget.epsilon();
  row.delta = task.budget.delta();
  row.trial = task.trial;
  row.l1_error = l1_distance(estimate.success_probs().values(),
                             truth.success_probs().values());
  row.tv_error = task.d <= kBruteForceDimensionLimit
                     ? tv_decomposed(estimate, truth)
                     : tv_error_upper_bound(truth, estimate);
  row.key_count = report.key_count;
  row.fallback_used = report.fallback_used;
  row.seed = seed;
  return row;
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    out.push_back(text.substr(0, comma));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

double parse_double(std::string_view text, const std::string& context) {
  // std::from_chars for doubles handles "1e-6" etc.; require full consumption.
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(context + ": malformed number '" + std::string(text) +
                      "'");
  }
  return value;
}

std::uint64_t parse_u64(std::string_view text, const std::string& context) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(context + ": malformed integer '" + std::string(text) +
                      "'");
  }
  return value;
}

}  // namespace

void SweepConfig::validate() const {
  if (learners.empty() || dims.empty() || sample_sizes.empty() ||
      budgets.empty()) {
    throw ConfigError("sweep config: learners, dims, sample_sizes and "
                      "budgets must all be non-empty");
  }
  for (const std::string& id : learners) {
    const auto& known = learner_ids();
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw ConfigError("sweep config: unknown learner id '" + id + "'");
    }
  }
  for (std::size_t d : dims) {
    if (d < 2) {
      throw ConfigError("sweep config: dims must all be at least 2");
    }
  }
  if (trials < 1) {
    throw ConfigError("sweep config: trials must be at least 1");
  }
  if (!(class_weight > 0.0 && class_weight < 1.0)) {
    throw ConfigError("sweep config: w must lie in (0, 1)");
  }
  if (truth_mode == TruthMode::kRandom) {
    if (!(truth_low >= 0.0 && truth_low <= truth_high && truth_high <= 1.0)) {
      throw ConfigError("sweep config: truth range must satisfy "
                        "0 <= low <= high <= 1");
    }
  } else {
    for (std::size_t d : dims) {
      if (truth_p.size() != d) {
        throw ConfigError("sweep config: fixed truth_p has dimension " +
                          std::to_string(truth_p.size()) +
                          " but dims includes " + std::to_string(d));
      }
    }
    for (double v : truth_p) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw ConfigError("sweep config: truth_p entries must lie in [0, 1]");
      }
    }
  }
}

SweepConfig parse_sweep_config(std::istream& in, const std::string& source) {
  SweepConfig config;
  bool saw_truth_mode = false;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    // Trim surrounding whitespace.
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!line.empty() && is_space(line.front())) line.erase(line.begin());
    while (!line.empty() && is_space(line.back())) line.pop_back();
    if (line.empty()) continue;

    const std::string context = source + ":" + std::to_string(line_number);
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(context + ": expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);

    if (key == "learners") {
      config.learners.clear();
      for (auto item : split_list(value)) config.learners.emplace_back(item);
    } else if (key == "dims") {
      config.dims.clear();
      for (auto item : split_list(value)) {
        config.dims.push_back(parse_u64(item, context));
      }
    } else if (key == "sample_sizes") {
      config.sample_sizes.clear();
      for (auto item : split_list(value)) {
        config.sample_sizes.push_back(parse_u64(item, context));
      }
    } else if (key == "budgets") {
      config.budgets.clear();
      for (auto item : split_list(value)) {
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos) {
          throw ConfigError(context + ": budgets entries must look like "
                            "epsilon:delta");
        }
        const double epsilon = parse_double(item.substr(0, colon), context);
        const double delta = parse_double(item.substr(colon + 1), context);
        try {
          config.budgets.emplace_back(epsilon, delta);
        } catch (const ContractError& e) {
          throw ConfigError(context + ": " + e.what());
        }
      }
    } else if (key == "w") {
      config.class_weight = parse_double(value, context);
    } else if (key == "truth_mode") {
      saw_truth_mode = true;
      if (value == "random") {
        config.truth_mode = TruthMode::kRandom;
      } else if (value == "fixed") {
        config.truth_mode = TruthMode::kFixed;
      } else {
        throw ConfigError(context + ": truth_mode must be random or fixed");
      }
    } else if (key == "truth_low") {
      config.truth_low = parse_double(value, context);
    } else if (key == "truth_high") {
      config.truth_high = parse_double(value, context);
    } else if (key == "truth_p") {
      config.truth_p.clear();
      for (auto item : split_list(value)) {
        config.truth_p.push_back(parse_double(item, context));
      }
    } else if (key == "trials") {
      config.trials = parse_u64(value, context);
    } else if (key == "master_seed") {
      config.master_seed = parse_u64(value, context);
    } else if (key == "output_path") {
      config.output_path = value;
    } else if (key == "threads") {
      config.threads = static_cast<unsigned>(parse_u64(value, context));
    } else {
      throw ConfigError(context + ": unknown key '" + key + "'");
    }
  }
  if (!saw_truth_mode && !config.truth_p.empty()) {
    config.truth_mode = TruthMode::kFixed;
  }
  config.validate();
  return config;
}

SweepConfig parse_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config file: " + path.string());
  }
  return parse_sweep_config(in, path.string());
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::string_view learner,
                         std::size_t d, std::size_t n,
                         const PrivacyBudget& budget, std::size_t trial) {
  return derive_seed(master_seed, learner, static_cast<std::uint64_t>(d),
                     static_cast<std::uint64_t>(n), budget.epsilon(),
                     budget.delta(), static_cast<std::uint64_t>(trial));
}

double tv_error_upper_bound(const TrapdoorParams& truth,
                            const TrapdoorParams& estimate) {
  if (truth.dimension() != estimate.dimension()) {
    throw ContractError("tv_error_upper_bound: dimension mismatch");
  }
  if (truth.mixing_weight() != estimate.mixing_weight()) {
    throw ContractError("tv_error_upper_bound: mixing weight mismatch");
  }
  const double w = truth.mixing_weight();
  const double l1 = l1_distance(truth.success_probs().values(),
                                estimate.success_probs().values());
  const double product_term = truth.success_probs() == estimate.success_probs()
                                  ? 0.0
                                  : 1.0;
  return w * product_term +
         (1.0 - w) / static_cast<double>(truth.dimension()) * l1;
}

std::vector<ExperimentRow> run_sweep(const SweepConfig& config) {
  config.validate();

  std::vector<TrialTask> tasks;
  tasks.reserve(config.learners.size() * config.dims.size() *
                config.sample_sizes.size() * config.budgets.size() *
                config.trials);
  for (const std::string& learner : config.learners) {
    for (std::size_t d : config.dims) {
      for (std::size_t n : config.sample_sizes) {
        for (const PrivacyBudget& budget : config.budgets) {
          for (std::size_t trial = 0; trial < config.trials; ++trial) {
            tasks.push_back(
                TrialTask{tasks.size(), learner, d, n, budget, trial});
          }
        }
      }
    }
  }

  std::vector<ExperimentRow> rows(tasks.size());
  unsigned worker_count = config.threads != 0
                              ? config.threads
                              : std::max(1u, std::thread::hardware_concurrency());
  worker_count = std::min<unsigned>(
      worker_count, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));

  // Each task writes only its own slot, so the result is independent of how
  // tasks are interleaved across workers.
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        rows[tasks[i].slot] = run_trial(config, tasks[i]);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (worker_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(rows.begin(), rows.end(),
            [](const ExperimentRow& a, const ExperimentRow& b) {
              return std::tie(a.learner, a.d, a.n, a.epsilon, a.delta,
                              a.trial) < std::tie(b.learner, b.d, b.n,
                                                  b.epsilon, b.delta, b.trial);
            });
  return rows;
}

namespace {

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double mean_of(const std::vector<double>& values) {
  KahanSum sum;
  for (double v : values) sum.add(v);
  return sum.value() / static_cast<double>(values.size());
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<ExperimentRow>& rows,
                                  double alpha_threshold) {
  if (rows.empty()) {
    throw ContractError("summarize: no rows");
  }
  using Key = std::tuple<std::string, std::size_t, std::size_t, double, double>;
  std::map<Key, std::vector<const ExperimentRow*>> cells;
  for (const ExperimentRow& row : rows) {
    cells[Key{row.learner, row.d, row.n, row.epsilon, row.delta}].push_back(
        &row);
  }
  std::vector<SummaryRow> out;
  out.reserve(cells.size());
  for (const auto& [key, cell_rows] : cells) {
    std::vector<double> tv;
    std::vector<double> l1;
    std::size_t failures = 0;
    for (const ExperimentRow* row : cell_rows) {
      tv.push_back(row->tv_error);
      l1.push_back(row->l1_error);
      if (row->tv_error > alpha_threshold) ++failures;
    }
    SummaryRow summary;
    summary.learner = std::get<0>(key);
    summary.d = std::get<1>(key);
    summary.n = std::get<2>(key);
    summary.epsilon = std::get<3>(key);
    summary.delta = std::get<4>(key);
    summary.trials = cell_rows.size();
    summary.tv_mean = mean_of(tv);
    summary.tv_median = median_of(tv);
    summary.l1_mean = mean_of(l1);
    summary.l1_median = median_of(l1);
    summary.failure_rate =
        static_cast<double>(failures) / static_cast<double>(cell_rows.size());
    out.push_back(std::move(summary));
  }
  return out;
}

std::string format_full_precision(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string rows_to_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "learner,d,n,epsilon,delta,trial,tv_error,l1_error,key_count,"
         "fallback_used,seed\n";
  for (const ExperimentRow& row : rows) {
    out << row.learner << ',' << row.d << ',' << row.n << ','
        << format_full_precision(row.epsilon) << ','
        << format_full_precision(row.delta) << ',' << row.trial << ','
        << format_full_precision(row.tv_error) << ','
        << format_full_precision(row.l1_error) << ',' << row.key_count << ','
        << (row.fallback_used ? 1 : 0) << ',' << row.seed << '\n';
  }
  return out.str();
}

void write_csv(const std::vector<ExperimentRow>& rows,
               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write CSV file: " + path.string());
  }
  out << rows_to_csv(rows);
  out.flush();
  if (!out) {
    throw IoError("error while writing CSV file: " + path.string());
  }
}

}  // namespace trapdoor
