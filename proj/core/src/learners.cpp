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

#include "trapdoor/learners.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "trapdoor/error.hpp"
#include "trapdoor/random.hpp"

namespace trapdoor {

PrivacyBudget::PrivacyBudget(double epsilon, double delta)
    : epsilon_(epsilon), delta_(delta) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw ContractError("PrivacyBudget: epsilon " + std::to_string(epsilon) +
                        " is outside (0, 1]");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ContractError("PrivacyBudget: delta " + std::to_string(delta) +
                        " is outside (0, 1)");
  }
}

bool noise_disabled() {
#if defined(TRAPDOOR_NOISE_HOOK)
  const char* flag = std::getenv("TRAPDOOR_NOISE_OFF");
  return flag != nullptr && flag[0] == '1' && flag[1] == '\0';
#else
  return false;
#endif
}

namespace {

void check_error_params(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ContractError("target error alpha must lie in (0, 1)");
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw ContractError("failure probability beta must lie in (0, 1)");
  }
}

// Clamped to the class: entries into [0, 1], dimension at least 2 (a lone
// +-1 hard sample would otherwise suggest d = 1, which the class excludes).
TrapdoorParams make_estimate(double w, std::vector<double> p_hat) {
  while (p_hat.size() < 2) p_hat.push_back(0.5);
  for (double& v : p_hat) v = std::clamp(v, 0.0, 1.0);
  return TrapdoorParams(w, ProbVector(std::move(p_hat)));
}

double gaussian_sigma(double l2_sensitivity, double epsilon, double delta) {
  return l2_sensitivity * std::sqrt(2.0 * std::log(1.25 / delta)) / epsilon;
}

}  // namespace

std::size_t required_key_samples(double alpha, double beta) {
  check_error_params(alpha, beta);
  constexpr double kKeyBudgetConstant = 8.0;
  return static_cast<std::size_t>(
      std::ceil(kKeyBudgetConstant * std::log(4.0 / beta) / (alpha * alpha)));
}

std::size_t required_samples_nonprivate(double alpha, double beta) {
  check_error_params(alpha, beta);
  const double m = static_cast<double>(required_key_samples(alpha, beta));
  return static_cast<std::size_t>(std::ceil(
      2.0 * (2.0 * alpha * m + std::log(2.0 / beta)) / (alpha * alpha)));
}

LearnReport learn_nonprivate(const Dataset& data, double w) {
  if (data.empty()) {
    throw ContractError("learn_nonprivate: dataset is empty");
  }

  // Infer the number of components from the samples themselves, not from the
  // dataset's declared dimension: any key sample pins d exactly, hard
  // samples only lower-bound it.
  std::size_t inferred_d = 0;
  std::size_t key_count = 0;
  for (const Sample& s : data.samples()) {
    if (s.is_key()) {
      inferred_d = s.bits().size();
      ++key_count;
    }
  }
  bool fallback = false;
  if (key_count == 0) {
    fallback = true;
    for (const Sample& s : data.samples()) {
      const int j = s.hard_index();
      inferred_d = std::max(inferred_d,
                            static_cast<std::size_t>(j > 0 ? j : -j));
    }
  }

  std::vector<double> p_hat(inferred_d, 0.5);
  if (key_count > 0) {
    std::vector<double> sums(inferred_d, 0.0);
    for (const Sample& s : data.samples()) {
      if (!s.is_key()) continue;
      for (std::size_t j = 0; j < inferred_d; ++j) sums[j] += s.bits()[j];
    }
    for (std::size_t j = 0; j < inferred_d; ++j) {
      p_hat[j] = sums[j] / static_cast<double>(key_count);
    }
  } else {
    std::vector<std::size_t> plus(inferred_d, 0);
    std::vector<std::size_t> total(inferred_d, 0);
    for (const Sample& s : data.samples()) {
      const int j = s.hard_index();
      const std::size_t mag = static_cast<std::size_t>(j > 0 ? j : -j);
      ++total[mag - 1];
      if (j > 0) ++plus[mag - 1];
    }
    for (std::size_t j = 0; j < inferred_d; ++j) {
      if (total[j] > 0) {
        p_hat[j] = static_cast<double>(plus[j]) / static_cast<double>(total[j]);
      }
    }
  }

  TrapdoorParams estimate = make_estimate(w, std::move(p_hat));
  const std::size_t estimate_d = estimate.dimension();
  return LearnReport{std::move(estimate), estimate_d, key_count, fallback};
}

DpKeyNoiseScales dp_key_noise_scales(std::size_t d,
                                     const PrivacyBudget& budget) {
  // Two releases (sums vector, count), each on half the budget.
  const double half_epsilon = budget.epsilon() / 2.0;
  const double half_delta = budget.delta() / 2.0;
  return DpKeyNoiseScales{
      gaussian_sigma(std::sqrt(static_cast<double>(d)), half_epsilon,
                     half_delta),
      gaussian_sigma(1.0, half_epsilon, half_delta)};
}

LearnReport learn_dp_key(const Dataset& data, double w,
                         const PrivacyBudget& budget, std::uint64_t seed) {
  if (data.empty()) {
    throw ContractError("learn_dp_key: dataset is empty");
  }
  const std::size_t d = data.dimension();
  std::vector<double> sums(d, 0.0);
  std::size_t key_count = 0;
  for (const Sample& s : data.samples()) {
    if (!s.is_key()) continue;
    ++key_count;
    for (std::size_t j = 0; j < d; ++j) sums[j] += s.bits()[j];
  }

  const DpKeyNoiseScales scales = dp_key_noise_scales(d, budget);
  Rng rng(seed);
  const bool quiet = noise_disabled();
  // Draw order is fixed: the d sum perturbations, then the count.
  for (std::size_t j = 0; j < d; ++j) {
    const double noise = rng.gaussian() * scales.sums;
    if (!quiet) sums[j] += noise;
  }
  const double count_noise = rng.gaussian() * scales.count;
  const double noisy_count =
      static_cast<double>(key_count) + (quiet ? 0.0 : count_noise);

  const double denom = std::max(noisy_count, 1.0);
  std::vector<double> p_hat(d);
  for (std::size_t j = 0; j < d; ++j) p_hat[j] = sums[j] / denom;

  TrapdoorParams estimate = make_estimate(w, std::move(p_hat));
  return LearnReport{std::move(estimate), d, key_count, false};
}

double dp_hard_noise_scale(const PrivacyBudget& budget) {
  return gaussian_sigma(std::sqrt(2.0), budget.epsilon(), budget.delta());
}

LearnReport learn_dp_hard(const Dataset& data, double w,
                          const PrivacyBudget& budget, std::uint64_t seed) {
  if (data.empty()) {
    throw ContractError("learn_dp_hard: dataset is empty");
  }
  const std::size_t d = data.dimension();
  std::vector<double> plus(d, 0.0);
  std::vector<double> minus(d, 0.0);
  std::size_t key_count = 0;
  for (const Sample& s : data.samples()) {
    if (s.is_key()) {
      ++key_count;
      continue;
    }
    const int j = s.hard_index();
    if (j > 0) {
      plus[j - 1] += 1.0;
    } else {
      minus[-j - 1] += 1.0;
    }
  }

  const double sigma = dp_hard_noise_scale(budget);
  Rng rng(seed);
  const bool quiet = noise_disabled();
  // Draw order is fixed: (+j, -j) pairs in coordinate order.
  std::vector<double> p_hat(d);
  for (std::size_t j = 0; j < d; ++j) {
    const double noisy_plus = plus[j] + (quiet ? 0.0 : rng.gaussian() * sigma);
    const double noisy_minus =
        minus[j] + (quiet ? 0.0 : rng.gaussian() * sigma);
    const double denom = noisy_plus + noisy_minus;
    p_hat[j] = denom <= 0.0 ? 0.5 : noisy_plus / denom;
  }

  TrapdoorParams estimate = make_estimate(w, std::move(p_hat));
  return LearnReport{std::move(estimate), d, key_count, false};
}

const std::vector<std::string>& learner_ids() {
  static const std::vector<std::string> ids = {
      std::string(kLearnerNonprivate), std::string(kLearnerDpKey),
      std::string(kLearnerDpHard)};
  return ids;
}

DensityLearner make_learner(std::string_view id, double w,
                            std::optional<PrivacyBudget> budget,
                            std::uint64_t seed) {
  if (id == kLearnerNonprivate) {
    return [w](const Dataset& data) { return learn_nonprivate(data, w); };
  }
  if (id == kLearnerDpKey || id == kLearnerDpHard) {
    if (!budget.has_value()) {
      throw ConfigError("learner '" + std::string(id) +
                        "' requires a privacy budget");
    }
    if (id == kLearnerDpKey) {
      return [w, b = *budget, seed](const Dataset& data) {
        return learn_dp_key(data, w, b, seed);
      };
    }
    return [w, b = *budget, seed](const Dataset& data) {
      return learn_dp_hard(data, w, b, seed);
    };
  }
  throw ConfigError("unknown learner id '" + std::string(id) + "'");
}

ProbVector reduce_then_estimate(const ProductDataset& x, double w,
                                const DensityLearner& learner,
                                std::uint64_t seed) {
  const Dataset lifted = lift_product_samples(x, w, seed);
  return extract_parameters(learner(lifted).estimate);
}

}  // namespace trapdoor
