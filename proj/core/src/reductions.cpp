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

#include "trapdoor/reductions.hpp"

#include <string>
#include <utility>

#include "trapdoor/error.hpp"
#include "trapdoor/random.hpp"
#include "trapdoor/total_variation.hpp"

namespace trapdoor {

ProductDataset::ProductDataset(std::size_t dimension) : d_(dimension) {
  if (d_ < 2) {
    throw ContractError("ProductDataset: dimension must be at least 2");
  }
}

void ProductDataset::append(Bits row) {
  if (row.size() != d_) {
    throw ContractError("ProductDataset: row has " +
                        std::to_string(row.size()) + " bits, expected " +
                        std::to_string(d_));
  }
  for (std::uint8_t b : row) {
    if (b > 1) {
      throw ContractError("ProductDataset: row bits must be 0 or 1");
    }
  }
  rows_.push_back(std::move(row));
}

HypothesisNet::HypothesisNet(std::vector<TrapdoorParams> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw ContractError("HypothesisNet: net must be non-empty");
  }
  const std::size_t d = elements_.front().dimension();
  const double w = elements_.front().mixing_weight();
  for (const TrapdoorParams& e : elements_) {
    if (e.dimension() != d || e.mixing_weight() != w) {
      throw ContractError("HypothesisNet: all members must share (w, d)");
    }
  }
}

LiftDraw lift_draw(std::uint64_t seed, std::uint64_t row_index, double w,
                   std::size_t d) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw ContractError("lift_draw: mixing weight outside [0, 1]");
  }
  if (d == 0) {
    throw ContractError("lift_draw: dimension must be positive");
  }
  SplitMix stream(derive_seed(seed, row_index));
  LiftDraw draw;
  draw.use_key = stream.uniform() < w;  // w = 0 never fires, w = 1 always
  draw.coordinate = stream.uniform_index(d);
  return draw;
}

Sample lift_row(const Bits& row, const LiftDraw& draw) {
  if (draw.use_key) {
    return Sample::key(row);
  }
  if (draw.coordinate >= row.size()) {
    throw ContractError("lift_row: coordinate out of range");
  }
  const int index = static_cast<int>(draw.coordinate + 1);
  return Sample::hard(row[draw.coordinate] ? index : -index);
}

Dataset lift_product_samples(const ProductDataset& x, double w,
                             std::uint64_t seed) {
  Dataset out(x.dimension());
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.append(lift_row(x[i], lift_draw(seed, i, w, x.dimension())));
  }
  return out;
}

ProbVector extract_parameters(const TrapdoorParams& params) {
  return params.success_probs();
}

TrapdoorParams project_to_class(const TrapdoorParams& candidate,
                                const HypothesisNet& net) {
  if (candidate.dimension() != net.dimension()) {
    throw ContractError("project_to_class: dimension mismatch with net");
  }
  if (candidate.mixing_weight() != net.mixing_weight()) {
    throw ContractError("project_to_class: mixing weight mismatch with net");
  }
  std::size_t best = 0;
  double best_tv = tv_decomposed(candidate, net.elements()[0]);
  for (std::size_t i = 1; i < net.size(); ++i) {
    const double tv = tv_decomposed(candidate, net.elements()[i]);
    if (tv < best_tv) {
      best = i;
      best_tv = tv;
    }
  }
  return net.elements()[best];
}

}  // namespace trapdoor
