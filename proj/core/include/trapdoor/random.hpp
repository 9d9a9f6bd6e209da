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

#ifndef TRAPDOOR_RANDOM_HPP_
#define TRAPDOOR_RANDOM_HPP_

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace trapdoor {

// All randomness in the library flows through explicit 64-bit seeds.  Seeds
// for sub-tasks (trials, rows, noise draws) are derived by hashing the parent
// seed with the sub-task's identifying fields, so any unit of work is
// reproducible in isolation and independent of execution order.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return splitmix64(seed ^ (splitmix64(value) + 0x9e3779b97f4a7c15ULL +
                            (seed << 6) + (seed >> 2)));
}

inline std::uint64_t hash_combine(std::uint64_t seed, double value) {
  return hash_combine(seed, std::bit_cast<std::uint64_t>(value));
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::string_view text) {
  // FNV-1a over the bytes, then folded into the running seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return hash_combine(seed, h);
}

template <typename... Parts>
std::uint64_t derive_seed(std::uint64_t master, Parts... parts) {
  std::uint64_t h = splitmix64(master);
  ((h = hash_combine(h, parts)), ...);
  return h;
}

// Counter-based SplitMix64 stream.  Construction is free, so it suits
// one-shot per-item draws (e.g. one record per lifted row) where building a
// full engine per item would dominate the work.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    const std::uint64_t out = splitmix64(state_);
    state_ += 0x9e3779b97f4a7c15ULL;
    return out;
  }

  double uniform() {
    return std::ldexp(static_cast<double>(next_u64() >> 11), -53);
  }

  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    std::uint64_t x = 0;
    std::uint64_t r = 0;
    do {
      x = next_u64();
      r = x % bound;
    } while (x - r > std::numeric_limits<std::uint64_t>::max() - (bound - 1));
    return static_cast<std::size_t>(r);
  }

 private:
  std::uint64_t state_;
};

// Deterministic random source: a std::mt19937_64 engine (whose output
// sequence is fixed by the standard) plus hand-rolled variate transforms, so
// streams are identical across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return std::ldexp(static_cast<double>(engine_() >> 11), -53);
  }

  // Exact at the endpoints: p = 0 never fires, p = 1 always fires.
  bool bernoulli(double p) { return uniform() < p; }

  // Uniform index in [0, n). Rejection sampling, no modulo bias.
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    std::uint64_t x = 0;
    std::uint64_t r = 0;
    do {
      x = engine_();
      r = x % bound;
    } while (x - r > std::numeric_limits<std::uint64_t>::max() - (bound - 1));
    return static_cast<std::size_t>(r);
  }

  // Uniform double in [low, high).
  double uniform_in(double low, double high) {
    return low + (high - low) * uniform();
  }

  // Standard normal via Box-Muller (one value per pair of uniforms).
  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace trapdoor

#endif  // TRAPDOOR_RANDOM_HPP_
