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

#ifndef TRAPDOOR_DISTRIBUTION_HPP_
#define TRAPDOOR_DISTRIBUTION_HPP_

#include <cstdint>
#include <cstddef>
#include <variant>
#include <vector>

namespace trapdoor {

// Bit vector in {0,1}^d; entries are 0 or 1.
using Bits = std::vector<std::uint8_t>;

// Per-coordinate Bernoulli success probabilities.  Entries must lie in
// [0, 1]; degenerate 0/1 entries are allowed.
class ProbVector {
 public:
  explicit ProbVector(std::vector<double> values);

  std::size_t dimension() const { return values_.size(); }
  double operator[](std::size_t j) const { return values_[j]; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const ProbVector& other) const = default;

 private:
  std::vector<double> values_;
};

// Parameters (w, d, p) of one trapdoor distribution: a mixture whose "key"
// component (weight w) is the binary product distribution over {0,1}^d with
// success probabilities p, and whose "hard" component (weight 1-w, split
// evenly over d coordinate slots) emits the signed index +j with probability
// p_j and -j with probability 1-p_j.
//
// d = 1 is rejected: the two components would have overlapping supports.
class TrapdoorParams {
 public:
  TrapdoorParams(double mixing_weight, ProbVector success_probs);

  double mixing_weight() const { return w_; }
  std::size_t dimension() const { return p_.dimension(); }
  const ProbVector& success_probs() const { return p_; }

  bool operator==(const TrapdoorParams& other) const = default;

 private:
  double w_;
  ProbVector p_;
};

// One observation: either a key-component bit vector or a hard-component
// signed coordinate index j with 1 <= |j| <= d.
class Sample {
 public:
  static Sample key(Bits bits);
  static Sample hard(int index);  // index != 0

  bool is_key() const { return std::holds_alternative<Bits>(value_); }
  bool is_hard() const { return !is_key(); }
  const Bits& bits() const { return std::get<Bits>(value_); }
  int hard_index() const { return std::get<int>(value_); }

  bool operator==(const Sample& other) const = default;

 private:
  explicit Sample(std::variant<Bits, int> value) : value_(std::move(value)) {}
  std::variant<Bits, int> value_;
};

// Ordered collection of samples with a declared dimension.  append() checks
// each sample structurally against d, so a constructed Dataset is always
// well-formed.
class Dataset {
 public:
  explicit Dataset(std::size_t dimension);

  void append(Sample sample);
  void reserve(std::size_t n) { samples_.reserve(n); }

  std::size_t dimension() const { return d_; }
  std::size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  const std::vector<Sample>& samples() const { return samples_; }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }

  bool operator==(const Dataset& other) const = default;

 private:
  std::size_t d_;
  std::vector<Sample> samples_;
};

// Exact enumeration is limited to supports of at most 2^20 + 40 atoms.
inline constexpr std::size_t kBruteForceDimensionLimit = 20;

// Number of atoms in the support {0,1}^d u {+-1,...,+-d}, i.e. 2^d + 2d.
// Requires d <= kBruteForceDimensionLimit.
std::size_t support_size(std::size_t d);

// Bijection between support atoms and [0, support_size(d)).  Key samples map
// to their bit pattern read as a little-endian integer; Hard(+j) maps to
// 2^d + (j-1) and Hard(-j) to 2^d + d + (j-1).
std::size_t atom_index(const Sample& sample, std::size_t d);
Sample atom_at(std::size_t index, std::size_t d);

// Probability mass of one atom:
//   Key(x):   w * prod_j p_j^{x_j} (1-p_j)^{1-x_j}   (0^0 taken as 1)
//   Hard(+j): (1-w)/d * p_j
//   Hard(-j): (1-w)/d * (1-p_j)
double pmf(const TrapdoorParams& params, const Sample& sample);

// n independent draws, deterministic given the seed: with probability w emit
// a Key sample from the product of Bern(p_j); otherwise pick a coordinate j
// uniformly and emit Hard(+j) with probability p_j, else Hard(-j).
Dataset sample_dataset(const TrapdoorParams& params, std::size_t n,
                       std::uint64_t seed);

}  // namespace trapdoor

#endif  // TRAPDOOR_DISTRIBUTION_HPP_
