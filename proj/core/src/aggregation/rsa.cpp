// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/aggregation/rsa.hpp"

#include <map>
#include <mutex>

#include "wsnsec/error.hpp"
#include "wsnsec/numeric/modular.hpp"

namespace wsnsec::aggregation {

RsaBaselineKey rsa_generate(std::size_t bits, Rng& rng) {
  if (bits < 16) throw Error(ErrorCode::kInvalidArgument, "RSA modulus too small");
  const std::size_t half = bits / 2;
  for (;;) {
    const BigUint p = gen_prime(half, rng);
    const BigUint q = gen_prime(bits - half, rng);
    if (p == q) continue;
    RsaBaselineKey key;
    key.n = p * q;
    if (bit_length(key.n) != bits) continue;
    key.bits = bits;
    const BigUint phi = (p - 1) * (q - 1);
    for (;;) {
      key.e = rng.below(key.n);
      if (bit_length(key.e) < bits - 1) continue;
      BigUint g;
      mpz_gcd(g.get_mpz_t(), key.e.get_mpz_t(), phi.get_mpz_t());
      if (g == 1) break;
    }
    key.d = mod_inv(key.e, phi);
    return key;
  }
}

const RsaBaselineKey& rsa_baseline_key(std::size_t bits) {
  static std::mutex mu;
  static std::map<std::size_t, RsaBaselineKey> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(bits);
  if (it == cache.end()) {
    Rng rng = Rng::derive(bits, "rsa-baseline");
    it = cache.emplace(bits, rsa_generate(bits, rng)).first;
  }
  return it->second;
}

BigUint rsa_encrypt(const RsaBaselineKey& key, const BigUint& m) {
  if (m >= key.n) throw Error(ErrorCode::kMessageOutOfRange, "message not below modulus");
  BigUint c;
  mpz_powm(c.get_mpz_t(), m.get_mpz_t(), key.e.get_mpz_t(), key.n.get_mpz_t());
  return c;
}

BigUint rsa_decrypt(const RsaBaselineKey& key, const BigUint& c) {
  BigUint m;
  mpz_powm(m.get_mpz_t(), c.get_mpz_t(), key.d.get_mpz_t(), key.n.get_mpz_t());
  return m;
}

TimedCiphertext rsa_baseline_encrypt(std::size_t bits, const BigUint& m) {
  const RsaBaselineKey& key = rsa_baseline_key(bits);
  const auto start = std::chrono::steady_clock::now();
  TimedCiphertext out{rsa_encrypt(key, m), {}};
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

}  // namespace wsnsec::aggregation
