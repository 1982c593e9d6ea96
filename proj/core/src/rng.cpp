// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/rng.hpp"

#include "wsnsec/error.hpp"

namespace wsnsec {

std::uint64_t Rng::mix(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::derive(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Rng(mix(seed) ^ h);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  // Values below `threshold` would bias the modulo; 2^64 - threshold is a
  // multiple of bound.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v < threshold);
  return v % bound;
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

BigUint Rng::random_bits(std::size_t bits) {
  BigUint out = 0;
  std::size_t remaining = bits;
  while (remaining > 0) {
    const std::size_t take = remaining < 64 ? remaining : 64;
    std::uint64_t word = engine_();
    if (take < 64) word &= (std::uint64_t{1} << take) - 1;
    out <<= take;
    out += from_u64(word);
    remaining -= take;
  }
  return out;
}

BigUint Rng::below(const BigUint& bound) {
  if (bound <= 0) throw Error(ErrorCode::kInvalidArgument, "empty range");
  if (bound == 1) return 0;
  const std::size_t bits = bit_length(bound - 1);
  BigUint v;
  do {
    v = random_bits(bits);
  } while (v >= bound);
  return v;
}

}  // namespace wsnsec
