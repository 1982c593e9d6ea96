// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "wsnsec/numeric/biguint.hpp"
#include "wsnsec/rng.hpp"

namespace wsnsec {

// b with a*b = 1 mod p, b in [1, p). Throws kNonInvertible if gcd(a, p) != 1.
BigUint mod_inv(const BigUint& a, const BigUint& p);

// Square root for p = 3 mod 4 via z^((p+1)/4). The candidate is verified;
// kNotAResidue is thrown when z has no root.
BigUint mod_sqrt_3mod4(const BigUint& z, const BigUint& p);

// Tonelli-Shanks for any odd prime p; same error contract.
BigUint mod_sqrt(const BigUint& z, const BigUint& p);

// Legendre symbol (z | p) as -1, 0 or 1 for odd prime p.
int legendre(const BigUint& z, const BigUint& p);

// Miller-Rabin. Deterministic below 3,317,044,064,679,887,385,961,981 (first
// thirteen primes as witnesses); above that, `rounds` extra witnesses drawn
// from a stream seeded by n itself, so answers are reproducible.
bool is_prime(const BigUint& n, int rounds = 32);

// Prime with exactly `bits` bits (top bit set).
BigUint gen_prime(std::size_t bits, Rng& rng);

}  // namespace wsnsec
