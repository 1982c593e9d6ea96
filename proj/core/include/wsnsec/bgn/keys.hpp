// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsnsec/ec/curve.hpp"
#include "wsnsec/numeric/biguint.hpp"
#include "wsnsec/rng.hpp"

namespace wsnsec::bgn {

inline constexpr std::uint64_t kDefaultMessageBound = (1u << 16) - 1;

// (n, p, l, g, h) on y^2 = x^3 + 1 over F_p with p = l n - 1.
// message_bound (T) and product_bound (T2) are the largest plaintexts that
// level-1 and level-2 decryption will search for; both are below q2.
struct PublicKey {
  BigUint n;
  BigUint p;
  BigUint l;
  CurveParams curve;
  CurvePoint g;  // order n
  CurvePoint h;  // q2 * u, order q1
  std::uint64_t message_bound = 0;
  std::uint64_t product_bound = 0;

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct PrivateKey {
  BigUint q1;

  friend bool operator==(const PrivateKey&, const PrivateKey&) = default;
};

struct KeyPair {
  PublicKey pub;
  PrivateKey priv;
};

struct KeygenOptions {
  // Unset: min(2^16 - 1, q2 - 1). Set: must be below q2.
  std::optional<std::uint64_t> message_bound;
  std::optional<std::uint64_t> product_bound;
  // Fresh prime pairs tried before kGenerationFailure.
  int max_attempts = 32;
  // Largest cofactor l scanned for each prime pair.
  std::uint64_t max_cofactor = 1u << 20;
};

// q1, q2 <- gen_prime(tau); smallest l with p = l n - 1 prime, p = 2 mod 3 and
// p = 3 mod 4 (the last one makes cryptograms compressible); generators are
// random multiples of l X for a point X of order p + 1.
KeyPair keygen(std::size_t tau, Rng& rng, const KeygenOptions& options = {});

// Same construction from given primes (toy instances, tests).
KeyPair keygen_from_primes(const BigUint& q1, const BigUint& q2, Rng& rng,
                           const KeygenOptions& options = {});

// Checks every public-key invariant that can be verified without q1:
// p = l n - 1 prime, p = 2 mod 3, curve y^2 = x^3 + 1, g of order dividing n
// and on the curve, h on the curve with n h = O, bounds consistent.
void validate(const PublicKey& pk);

// Distinct prime factors of v by trial division up to `limit`; the
// remaining cofactor is appended when it is > 1.
std::vector<BigUint> small_prime_factors(BigUint v, std::uint64_t limit = 1u << 20);

// True when P has order exactly `order`, given its prime factors.
bool has_exact_order(const CurvePoint& p, const BigUint& order,
                     const std::vector<BigUint>& prime_factors, const CurveParams& curve);

std::string public_key_to_json(const PublicKey& pk);
PublicKey public_key_from_json(const std::string& text);
std::string private_key_to_json(const PrivateKey& sk);
PrivateKey private_key_from_json(const std::string& text);

}  // namespace wsnsec::bgn
