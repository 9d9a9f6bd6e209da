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

#ifndef TRAPDOOR_TOTAL_VARIATION_HPP_
#define TRAPDOOR_TOTAL_VARIATION_HPP_

#include "trapdoor/distribution.hpp"

namespace trapdoor {

// TV distance between the binary product distributions with success
// probabilities p1 and p2: half-sum of |pmf difference| over {0,1}^d.
// Dimensions must match and stay within kBruteForceDimensionLimit.
double tv_product_bruteforce(const ProbVector& p1, const ProbVector& p2);

// TV distance between two trapdoor distributions by enumerating the full
// support (2^d + 2d atoms).  The mixing weights may differ; dimensions must
// match and stay within the brute-force limit.
double tv_exact_bruteforce(const TrapdoorParams& a, const TrapdoorParams& b);

// TV distance between two trapdoor distributions with a shared mixing weight,
// via the disjoint-support split
//   w * d_TV(product_a, product_b) + (1-w)/d * ||p_a - p_b||_1.
// The split is only valid for equal weights; unequal-w comparisons must use
// tv_exact_bruteforce.  The product term is enumerated, so the same dimension
// guard applies.
double tv_decomposed(const TrapdoorParams& a, const TrapdoorParams& b);

// TV distance between the empirical atom histogram of `data` and the exact
// pmf.  An empty dataset yields 1 by convention (the zero histogram is at
// total-variation distance 1 from any proper distribution); this keeps
// harness code free of special cases.
double empirical_tv(const Dataset& data, const TrapdoorParams& params);

}  // namespace trapdoor

#endif  // TRAPDOOR_TOTAL_VARIATION_HPP_
