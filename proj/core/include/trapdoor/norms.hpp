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

#ifndef TRAPDOOR_NORMS_HPP_
#define TRAPDOOR_NORMS_HPP_

#include <cmath>
#include <span>

#include "trapdoor/error.hpp"
#include "trapdoor/summation.hpp"

namespace trapdoor {

inline double l1_norm(std::span<const double> x) {
  KahanSum sum;
  for (double v : x) sum.add(std::abs(v));
  return sum.value();
}

inline double l2_norm(std::span<const double> x) {
  KahanSum sum;
  for (double v : x) sum.add(v * v);
  return std::sqrt(sum.value());
}

inline double linf_norm(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

inline double l1_distance(std::span<const double> a,
                          std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ContractError("l1_distance: length mismatch");
  }
  KahanSum sum;
  for (std::size_t j = 0; j < a.size(); ++j) sum.add(std::abs(a[j] - b[j]));
  return sum.value();
}

}  // namespace trapdoor

#endif  // TRAPDOOR_NORMS_HPP_
