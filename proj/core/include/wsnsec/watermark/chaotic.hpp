// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wsnsec/numeric/fraction.hpp"
#include "wsnsec/watermark/grid.hpp"

namespace wsnsec::watermark {

// Piecewise linear chaotic map with control parameter p in (0, 1/2).
Fraction64 plcm_step(Fraction64 x, Fraction64 p);

// S^n = floor(N K^n) + 1 clamped to N, with K^0 = seed xor K and
// K^{n+1} = F(K^n, p). Values are 1-based positions.
std::vector<std::size_t> ciis_strategy(Fraction64 key, Fraction64 seed, Fraction64 p,
                                       std::size_t iterations, std::size_t positions);

using BoolVec = std::vector<bool>;
using UpdateFn = std::function<BoolVec(const BoolVec&)>;

BoolVec vectorial_negation(const BoolVec& x);

// x^n equals x^{n-1} except at component S^n (1-based), which takes
// f(x^{n-1})_{S^n}.
BoolVec ci_iterate(BoolVec x0, const std::vector<std::size_t>& strategy, std::size_t steps,
                   const UpdateFn& f = vectorial_negation);

enum class Mode {
  kAuthentication,    // strategy seeded by the MSCs: fragile
  kUnauthentication,  // strategy seeded by the key only: robust
};

std::string to_string(Mode m);
// "auth" or "robust".
Mode parse_mode(const std::string& s);

struct WatermarkKey {
  Fraction64 k;
  Fraction64 p;     // control parameter, strictly inside (0, 1/2)
  Fraction64 rest;  // seed used in kUnauthentication
};

// All three parts come from one 64-bit key through a named sub-stream.
WatermarkKey derive_key(std::uint64_t key);

struct WatermarkConfig {
  WatermarkKey key;
  Mode mode = Mode::kUnauthentication;
  std::size_t iterations = 0;  // 0: one per LSC
  double msc_threshold = kDefaultMsc;
  double lsc_threshold = kDefaultLsc;
};

// Authentication: the MSC bit stream, first bit most significant, folded by
// XOR of consecutive 62-bit blocks. Unauthentication: key.rest.
Fraction64 derive_mode_seed(const SensorGrid& g, const SignificanceSplit& split,
                            const WatermarkConfig& cfg);

// Default 64-bit watermark drawn from the key stream.
std::vector<bool> default_watermark(std::uint64_t key);
// '0' / '1' characters, whitespace ignored. kMalformedInput otherwise.
std::vector<bool> parse_watermark(const std::string& text);
std::string format_watermark(const std::vector<bool>& bits);

// Writes watermark[n mod |w|] at LSC position S^n for every n. MSCs and
// passive bits are never touched.
SensorGrid embed_watermark(const SensorGrid& g, const WatermarkConfig& cfg,
                           const std::vector<bool>& watermark);

struct Similarity {
  std::size_t matches = 0;
  std::size_t visited = 0;
  double percent() const;
  // Two fractional digits, e.g. "100.00".
  std::string str() const;
};

// Recomputes the strategy from the received grid and compares each visited
// LSC against the bit its last visit wrote.
Similarity extract_similarity(const SensorGrid& g, const WatermarkConfig& cfg,
                              const std::vector<bool>& watermark);

}  // namespace wsnsec::watermark
