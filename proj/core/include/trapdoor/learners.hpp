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

#ifndef TRAPDOOR_LEARNERS_HPP_
#define TRAPDOOR_LEARNERS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trapdoor/distribution.hpp"
#include "trapdoor/reductions.hpp"

namespace trapdoor {

// (epsilon, delta) governing the DP learners.  epsilon is restricted to
// (0, 1], the regime the baselines are calibrated for.
class PrivacyBudget {
 public:
  PrivacyBudget(double epsilon, double delta);

  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }

 private:
  double epsilon_;
  double delta_;
};

// What a learner hands back: a class member plus diagnostics about how the
// dimension was inferred and how many key samples carried the estimate.
struct LearnReport {
  TrapdoorParams estimate;
  std::size_t inferred_d = 0;
  std::size_t key_count = 0;
  bool fallback_used = false;
};

// Key-sample budget m = ceil(8 ln(4/beta) / alpha^2): enough key draws for a
// coordinatewise mean with l2 error at most sqrt(d)*alpha/2 with probability
// 1 - beta/2.
std::size_t required_key_samples(double alpha, double beta);

// Total draws n = ceil(2 (2 alpha m + ln(2/beta)) / alpha^2), the Hoeffding
// count guaranteeing at least m key samples except with probability beta/2.
// Monotone nonincreasing in alpha and beta; scales as log(1/beta)/alpha^3.
std::size_t required_samples_nonprivate(double alpha, double beta);

// The dimension-free learner: infer d from the samples (bit-length of any
// key sample; if none are present, the maximum hard-index magnitude, flagged
// via fallback_used), then estimate p by the coordinatewise mean of the key
// samples.  In the fallback path p comes from per-coordinate hard-sample
// frequencies.  Coordinates with no observations default to 1/2.
// Deterministic: no internal randomness.
LearnReport learn_nonprivate(const Dataset& data, double w);

// Noise standard deviations used by learn_dp_key: the d-vector of key-bit
// sums has l2 sensitivity sqrt(d) and the key count has sensitivity 1; each
// release gets half the budget (basic composition), so
//   sigma_sums  = sqrt(d) * sqrt(2 ln(1.25/(delta/2))) / (epsilon/2)
//   sigma_count =           sqrt(2 ln(1.25/(delta/2))) / (epsilon/2).
struct DpKeyNoiseScales {
  double sums = 0.0;
  double count = 0.0;
};
DpKeyNoiseScales dp_key_noise_scales(std::size_t d, const PrivacyBudget& budget);

// Gaussian-mechanism baseline on the key component: releases noisy key-bit
// sums and a noisy key count, then outputs p_hat_j = clamp(S_j / max(k, 1)).
// Takes d from the dataset.  Error grows with d through the sqrt(d) noise
// scale.
LearnReport learn_dp_key(const Dataset& data, double w,
                         const PrivacyBudget& budget, std::uint64_t seed);

// Noise standard deviation for learn_dp_hard's single release of the full
// 2d-count histogram: one sample changes at most two counts by 1 each, so
// the l2 sensitivity is sqrt(2) and
//   sigma = sqrt(2) * sqrt(2 ln(1.25/delta)) / epsilon.
double dp_hard_noise_scale(const PrivacyBudget& budget);

// Noisy-histogram baseline on the hard component: perturbs the per-coordinate
// (+j, -j) counts and outputs p_hat_j = clamp(n+_j / (n+_j + n-_j)), falling
// back to 1/2 when the noisy denominator is nonpositive.
LearnReport learn_dp_hard(const Dataset& data, double w,
                          const PrivacyBudget& budget, std::uint64_t seed);

// A density learner bound to its configuration; any learner in this module
// qualifies.
using DensityLearner = std::function<LearnReport(const Dataset&)>;

inline constexpr std::string_view kLearnerNonprivate = "nonprivate";
inline constexpr std::string_view kLearnerDpKey = "dp-key";
inline constexpr std::string_view kLearnerDpHard = "dp-hard";
const std::vector<std::string>& learner_ids();

// Binds a learner id to (w, budget, seed).  The DP learners require a
// budget; unknown ids raise ConfigError.
DensityLearner make_learner(std::string_view id, double w,
                            std::optional<PrivacyBudget> budget,
                            std::uint64_t seed);

// The sampling reduction composed with a learner: lift the product rows into
// trapdoor samples, learn, and read the parameter vector back out.  The lift
// maps neighbors to neighbors and the extraction is post-processing, so the
// composition inherits the learner's privacy guarantee.
ProbVector reduce_then_estimate(const ProductDataset& x, double w,
                                const DensityLearner& learner,
                                std::uint64_t seed);

// True when the build carries the test hook and TRAPDOOR_NOISE_OFF=1 is set,
// in which case the DP learners add no noise.  Always false in builds
// without the hook.
bool noise_disabled();

}  // namespace trapdoor

#endif  // TRAPDOOR_LEARNERS_HPP_
