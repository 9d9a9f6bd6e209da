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

#include "trapdoor/distribution.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "trapdoor/error.hpp"
#include "trapdoor/random.hpp"

namespace trapdoor {

ProbVector::ProbVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw ContractError("ProbVector: dimension must be positive");
  }
  for (std::size_t j = 0; j < values_.size(); ++j) {
    const double v = values_[j];
    if (!(v >= 0.0 && v <= 1.0)) {  // also rejects NaN
      throw ContractError("ProbVector: entry " + std::to_string(j + 1) +
                          " = " + std::to_string(v) + " is outside [0, 1]");
    }
  }
}

TrapdoorParams::TrapdoorParams(double mixing_weight, ProbVector success_probs)
    : w_(mixing_weight), p_(std::move(success_probs)) {
  if (p_.dimension() < 2) {
    throw ContractError("TrapdoorParams: dimension must be at least 2");
  }
  if (!(w_ > 0.0 && w_ < 1.0)) {
    throw ContractError("TrapdoorParams: mixing weight " +
                        std::to_string(w_) + " is outside (0, 1)");
  }
}

Sample Sample::key(Bits bits) {
  for (std::uint8_t b : bits) {
    if (b > 1) {
      throw ContractError("Sample: key bits must be 0 or 1");
    }
  }
  return Sample(std::variant<Bits, int>(std::move(bits)));
}

Sample Sample::hard(int index) {
  if (index == 0) {
    throw ContractError("Sample: hard index must be nonzero");
  }
  return Sample(std::variant<Bits, int>(index));
}

Dataset::Dataset(std::size_t dimension) : d_(dimension) {
  if (d_ < 2) {
    throw ContractError("Dataset: dimension must be at least 2");
  }
}

void Dataset::append(Sample sample) {
  if (sample.is_key()) {
    if (sample.bits().size() != d_) {
      throw ContractError("Dataset: key sample has " +
                          std::to_string(sample.bits().size()) +
                          " bits, expected " + std::to_string(d_));
    }
  } else {
    const int j = sample.hard_index();
    if (static_cast<std::size_t>(j > 0 ? j : -j) > d_) {
      throw ContractError("Dataset: hard index " + std::to_string(j) +
                          " exceeds dimension " + std::to_string(d_));
    }
  }
  samples_.push_back(std::move(sample));
}

namespace {

void check_brute_force_guard(std::size_t d, const char* what) {
  if (d > kBruteForceDimensionLimit) {
    throw CapabilityError(std::string(what) + ": dimension " +
                          std::to_string(d) + " exceeds the brute-force limit " +
                          std::to_string(kBruteForceDimensionLimit));
  }
}

}  // namespace

std::size_t support_size(std::size_t d) {
  check_brute_force_guard(d, "support_size");
  return (std::size_t{1} << d) + 2 * d;
}

std::size_t atom_index(const Sample& sample, std::size_t d) {
  check_brute_force_guard(d, "atom_index");
  if (sample.is_key()) {
    if (sample.bits().size() != d) {
      throw ContractError("atom_index: key sample dimension mismatch");
    }
    std::size_t idx = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (sample.bits()[j]) idx |= std::size_t{1} << j;
    }
    return idx;
  }
  const int j = sample.hard_index();
  const std::size_t mag = static_cast<std::size_t>(j > 0 ? j : -j);
  if (mag > d) {
    throw ContractError("atom_index: hard index out of range");
  }
  const std::size_t base = std::size_t{1} << d;
  return j > 0 ? base + (mag - 1) : base + d + (mag - 1);
}

Sample atom_at(std::size_t index, std::size_t d) {
  check_brute_force_guard(d, "atom_at");
  const std::size_t base = std::size_t{1} << d;
  if (index < base) {
    Bits bits(d);
    for (std::size_t j = 0; j < d; ++j) {
      bits[j] = static_cast<std::uint8_t>((index >> j) & 1u);
    }
    return Sample::key(std::move(bits));
  }
  const std::size_t offset = index - base;
  if (offset >= 2 * d) {
    throw ContractError("atom_at: index out of range");
  }
  return offset < d ? Sample::hard(static_cast<int>(offset + 1))
                    : Sample::hard(-static_cast<int>(offset - d + 1));
}

double pmf(const TrapdoorParams& params, const Sample& sample) {
  const std::size_t d = params.dimension();
  const ProbVector& p = params.success_probs();
  if (sample.is_key()) {
    if (sample.bits().size() != d) {
      throw ContractError("pmf: key sample has " +
                          std::to_string(sample.bits().size()) +
                          " bits, expected " + std::to_string(d));
    }
    double mass = params.mixing_weight();
    for (std::size_t j = 0; j < d; ++j) {
      mass *= sample.bits()[j] ? p[j] : 1.0 - p[j];
    }
    return mass;
  }
  const int j = sample.hard_index();
  const std::size_t mag = static_cast<std::size_t>(j > 0 ? j : -j);
  if (mag > d) {
    throw ContractError("pmf: hard index " + std::to_string(j) +
                        " exceeds dimension " + std::to_string(d));
  }
  const double slot = (1.0 - params.mixing_weight()) / static_cast<double>(d);
  return slot * (j > 0 ? p[mag - 1] : 1.0 - p[mag - 1]);
}

Dataset sample_dataset(const TrapdoorParams& params, std::size_t n,
                       std::uint64_t seed) {
  const std::size_t d = params.dimension();
  const ProbVector& p = params.success_probs();
  Dataset data(d);
  data.reserve(n);
  Rng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.bernoulli(params.mixing_weight())) {
      Bits bits(d);
      for (std::size_t j = 0; j < d; ++j) {
        bits[j] = rng.bernoulli(p[j]) ? 1 : 0;
      }
      data.append(Sample::key(std::move(bits)));
    } else {
      const std::size_t j = rng.uniform_index(d);
      const int index = static_cast<int>(j + 1);
      data.append(Sample::hard(rng.bernoulli(p[j]) ? index : -index));
    }
  }
  return data;
}

}  // namespace trapdoor
