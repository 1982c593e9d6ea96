// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>

#include "wsnsec/numeric/biguint.hpp"
#include "wsnsec/rng.hpp"

namespace wsnsec::aggregation {

inline constexpr std::array<std::size_t, 4> kRsaModulusBits = {472, 945, 1416, 1891};

// Baseline key with a full-size public exponent, so that node-side
// encryption costs a complete modular exponentiation.
struct RsaBaselineKey {
  BigUint n;
  BigUint e;
  BigUint d;
  std::size_t bits = 0;
};

// Deterministic per size: moduli come from a fixed sub-stream keyed by `bits`.
// Cached after the first call.
const RsaBaselineKey& rsa_baseline_key(std::size_t bits);
RsaBaselineKey rsa_generate(std::size_t bits, Rng& rng);

BigUint rsa_encrypt(const RsaBaselineKey& key, const BigUint& m);
BigUint rsa_decrypt(const RsaBaselineKey& key, const BigUint& c);

struct TimedCiphertext {
  BigUint ciphertext;
  std::chrono::nanoseconds elapsed{};
};

// m is reduced below n by the caller's contract; m >= n is kMessageOutOfRange.
TimedCiphertext rsa_baseline_encrypt(std::size_t bits, const BigUint& m);

}  // namespace wsnsec::aggregation
