// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "wsnsec/numeric/biguint.hpp"

namespace wsnsec {

// Seeded randomness stream. All stochastic operations take one explicitly so
// that runs are reproducible from a single 64-bit seed.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  // Independent named sub-stream, e.g. Rng::derive(seed, "keygen").
  static Rng derive(std::uint64_t seed, std::string_view name);
  Rng fork(std::string_view name) { return derive(next_u64(), name); }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return engine_(); }

  std::uint64_t next_u64() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  double uniform01();

  // Exactly `bits` random bits (value < 2^bits).
  BigUint random_bits(std::size_t bits);
  // Uniform in [0, bound) by rejection; bound > 0.
  BigUint below(const BigUint& bound);

  static std::uint64_t mix(std::uint64_t x);

 private:
  std::mt19937_64 engine_;
};

}  // namespace wsnsec
