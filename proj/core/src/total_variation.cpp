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

#include "trapdoor/total_variation.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "trapdoor/error.hpp"
#include "trapdoor/norms.hpp"
#include "trapdoor/summation.hpp"

namespace trapdoor {

namespace {

void check_guard(std::size_t d, const char* what) {
  if (d > kBruteForceDimensionLimit) {
    throw CapabilityError(std::string(what) + ": dimension " +
                          std::to_string(d) +
                          " exceeds the brute-force limit " +
                          std::to_string(kBruteForceDimensionLimit));
  }
}

double product_mass(const ProbVector& p, std::size_t mask) {
  double mass = 1.0;
  for (std::size_t j = 0; j < p.dimension(); ++j) {
    mass *= ((mask >> j) & 1u) ? p[j] : 1.0 - p[j];
  }
  return mass;
}

}  // namespace

double tv_product_bruteforce(const ProbVector& p1, const ProbVector& p2) {
  if (p1.dimension() != p2.dimension()) {
    throw ContractError("tv_product_bruteforce: dimension mismatch");
  }
  const std::size_t d = p1.dimension();
  check_guard(d, "tv_product_bruteforce");
  KahanSum sum;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    sum.add(std::abs(product_mass(p1, mask) - product_mass(p2, mask)));
  }
  return 0.5 * sum.value();
}

double tv_exact_bruteforce(const TrapdoorParams& a, const TrapdoorParams& b) {
  if (a.dimension() != b.dimension()) {
    throw ContractError("tv_exact_bruteforce: dimension mismatch");
  }
  const std::size_t d = a.dimension();
  check_guard(d, "tv_exact_bruteforce");
  KahanSum sum;
  const std::size_t atoms = support_size(d);
  for (std::size_t i = 0; i < atoms; ++i) {
    const Sample atom = atom_at(i, d);
    sum.add(std::abs(pmf(a, atom) - pmf(b, atom)));
  }
  return 0.5 * sum.value();
}

double tv_decomposed(const TrapdoorParams& a, const TrapdoorParams& b) {
  if (a.dimension() != b.dimension()) {
    throw ContractError("tv_decomposed: dimension mismatch");
  }
  if (a.mixing_weight() != b.mixing_weight()) {
    throw ContractError(
        "tv_decomposed: mixing weights differ; use tv_exact_bruteforce");
  }
  const double w = a.mixing_weight();
  const std::size_t d = a.dimension();
  const double product_tv =
      tv_product_bruteforce(a.success_probs(), b.success_probs());
  const double l1 =
      l1_distance(a.success_probs().values(), b.success_probs().values());
  return w * product_tv + (1.0 - w) / static_cast<double>(d) * l1;
}

double empirical_tv(const Dataset& data, const TrapdoorParams& params) {
  if (data.dimension() != params.dimension()) {
    throw ContractError("empirical_tv: dimension mismatch");
  }
  const std::size_t d = params.dimension();
  check_guard(d, "empirical_tv");
  if (data.empty()) {
    return 1.0;  // zero histogram vs. a proper distribution
  }
  std::vector<std::size_t> counts(support_size(d), 0);
  for (const Sample& s : data.samples()) {
    ++counts[atom_index(s, d)];
  }
  const double n = static_cast<double>(data.size());
  KahanSum sum;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double frequency = static_cast<double>(counts[i]) / n;
    sum.add(std::abs(frequency - pmf(params, atom_at(i, d))));
  }
  return 0.5 * sum.value();
}

}  // namespace trapdoor
