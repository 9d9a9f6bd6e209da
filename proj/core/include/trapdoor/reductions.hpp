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

#ifndef TRAPDOOR_REDUCTIONS_HPP_
#define TRAPDOOR_REDUCTIONS_HPP_

#include <cstdint>
#include <vector>

#include "trapdoor/distribution.hpp"

namespace trapdoor {

// Rows drawn from a binary product distribution over {0,1}^d.
class ProductDataset {
 public:
  explicit ProductDataset(std::size_t dimension);

  void append(Bits row);
  void reserve(std::size_t n) { rows_.reserve(n); }

  std::size_t dimension() const { return d_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<Bits>& rows() const { return rows_; }
  const Bits& operator[](std::size_t i) const { return rows_[i]; }

  bool operator==(const ProductDataset& other) const = default;

 private:
  std::size_t d_;
  std::vector<Bits> rows_;
};

// Finite set of candidate parameters sharing one (w, d); the projection
// target for improper-to-proper conversion.  Callers choose the net (e.g. a
// coordinate grid); no covering guarantee is implied by this type.
class HypothesisNet {
 public:
  explicit HypothesisNet(std::vector<TrapdoorParams> elements);

  const std::vector<TrapdoorParams>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t dimension() const { return elements_.front().dimension(); }
  double mixing_weight() const { return elements_.front().mixing_weight(); }

 private:
  std::vector<TrapdoorParams> elements_;
};

// The randomness one lifted row consumes, derived from (seed, row_index)
// only -- never from the row's contents.  Holding the seed fixed therefore
// pins every row's draw, which is what makes the neighbor-preservation
// property of the lift exactly testable.
struct LiftDraw {
  bool use_key = false;     // true: copy the row as a Key sample
  std::size_t coordinate = 0;  // used only when use_key is false
};

LiftDraw lift_draw(std::uint64_t seed, std::uint64_t row_index, double w,
                   std::size_t d);

// Deterministic single-row lift: Key(row) when the draw says so, otherwise
// Hard(+(coordinate+1)) if the chosen bit is 1, else Hard(-(coordinate+1)).
Sample lift_row(const Bits& row, const LiftDraw& draw);

// Maps product-distribution samples to trapdoor samples: row i becomes a Key
// sample with probability w, otherwise a Hard sample of one uniformly chosen
// coordinate.  Ordering is preserved (row i -> sample i) and each row's
// randomness is independent, so changing one input row changes at most one
// output sample.  When the rows follow a binary product distribution with
// mean p, the output follows the trapdoor distribution (w, d, p) exactly.
//
// w = 0 and w = 1 are accepted here (always-hard / always-key); class
// constructors elsewhere still require w strictly inside (0, 1).
Dataset lift_product_samples(const ProductDataset& x, double w,
                             std::uint64_t seed);

// Reads the probability vector back out of a class member.  The class is
// parameterized, so identification is exact; composed with any density
// learner this yields an l1 parameter estimator by post-processing.
ProbVector extract_parameters(const TrapdoorParams& params);

// Nearest net element under tv_decomposed; ties break to the lowest net
// index, so the projection is deterministic.  The candidate must share the
// net's (w, d).
TrapdoorParams project_to_class(const TrapdoorParams& candidate,
                                const HypothesisNet& net);

}  // namespace trapdoor

#endif  // TRAPDOOR_REDUCTIONS_HPP_
