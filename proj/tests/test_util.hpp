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

#ifndef TRAPDOOR_TESTS_TEST_UTIL_HPP_
#define TRAPDOOR_TESTS_TEST_UTIL_HPP_

#include <vector>

#include "trapdoor/distribution.hpp"
#include "trapdoor/random.hpp"
#include "trapdoor/reductions.hpp"

namespace trapdoor::testing {

// Random probability vector; occasionally plants exact 0/1 entries so the
// degenerate corners stay covered.
inline ProbVector random_prob_vector(Rng& rng, std::size_t d,
                                     bool allow_degenerate = true) {
  std::vector<double> p(d);
  for (double& v : p) {
    const double u = rng.uniform();
    if (allow_degenerate && u < 0.05) {
      v = 0.0;
    } else if (allow_degenerate && u > 0.95) {
      v = 1.0;
    } else {
      v = rng.uniform();
    }
  }
  return ProbVector(std::move(p));
}

inline TrapdoorParams random_params(Rng& rng, std::size_t d,
                                    bool allow_degenerate = true) {
  const double w = rng.uniform_in(0.05, 0.95);
  return TrapdoorParams(w, random_prob_vector(rng, d, allow_degenerate));
}

inline Bits random_row(Rng& rng, std::size_t d) {
  Bits row(d);
  for (auto& b : row) b = rng.bernoulli(0.5) ? 1 : 0;
  return row;
}

inline ProductDataset random_product_dataset(Rng& rng, std::size_t d,
                                             std::size_t n) {
  ProductDataset data(d);
  data.reserve(n);
  for (std::size_t i = 0; i < n; ++i) data.append(random_row(rng, d));
  return data;
}

}  // namespace trapdoor::testing

#endif  // TRAPDOOR_TESTS_TEST_UTIL_HPP_
