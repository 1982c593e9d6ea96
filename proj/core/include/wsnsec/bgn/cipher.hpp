// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>

#include "wsnsec/bgn/dlog.hpp"
#include "wsnsec/bgn/keys.hpp"
#include "wsnsec/ec/fixed_base.hpp"
#include "wsnsec/ec/pairing.hpp"

namespace wsnsec::bgn {

enum class Level : std::uint8_t { kOne = 1, kTwo = 2 };

// Level 1: a curve point m g + r h. Level 2: a pairing value
// e(C1, C2) * h1^r, produced by the single homomorphic multiplication.
class Ciphertext {
 public:
  static Ciphertext level_one(CurvePoint point) { return Ciphertext(std::move(point)); }
  static Ciphertext level_two(Fp2Element value) { return Ciphertext(std::move(value)); }

  Level level() const { return payload_.index() == 0 ? Level::kOne : Level::kTwo; }
  // kLevelMismatch when the ciphertext is at the other level.
  const CurvePoint& point() const;
  const Fp2Element& value() const;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;

 private:
  explicit Ciphertext(CurvePoint p) : payload_(std::move(p)) {}
  explicit Ciphertext(Fp2Element v) : payload_(std::move(v)) {}
  std::variant<CurvePoint, Fp2Element> payload_;
};

struct BgnOptions {
  // Adding two level-2 ciphertexts (payload product re-randomized by h1^r).
  bool level2_addition = false;
};

// Pairing engine for the key's subgroup plus g1 = e(g, g) and h1 = e(g, h).
class PairingContext {
 public:
  explicit PairingContext(const PublicKey& pk);

  const PublicKey& key() const { return pk_; }
  const WeilPairing& pairing() const { return pairing_; }
  const Fp2Field& field() const { return pairing_.field(); }
  const Fp2Element& g1() const { return g1_; }
  const Fp2Element& h1() const { return h1_; }

 private:
  PublicKey pk_;
  WeilPairing pairing_;
  Fp2Element g1_;
  Fp2Element h1_;
};

// C = m g + r h with r uniform in [0, n - 1]. kMessageOutOfRange if m > T.
Ciphertext encrypt(const PublicKey& pk, std::uint64_t m, Rng& rng);
Ciphertext encrypt_with_randomness(const PublicKey& pk, std::uint64_t m, const BigUint& r);

// Node-side encryption with fixed-base tables for g and h. Consumes the
// randomness stream exactly like encrypt(), so outputs are identical.
class Encryptor {
 public:
  explicit Encryptor(const PublicKey& pk);

  const PublicKey& key() const { return pk_; }
  Ciphertext encrypt(std::uint64_t m, Rng& rng) const;
  Ciphertext encrypt_with_randomness(std::uint64_t m, const BigUint& r) const;
  // r h for a fresh r in [0, n - 1].
  CurvePoint mask(Rng& rng) const;
  // Same as the free hom_sum.
  Ciphertext hom_sum(std::span<const Ciphertext> inputs, Rng& rng) const;

 private:
  PublicKey pk_;
  FixedBaseMul g_;
  FixedBaseMul h_;
};

// log_{q1 g}(q1 C) in [0, T]; table lookup when given, baby-step giant-step
// otherwise. kDlogNotFound when no exponent in range matches.
std::uint64_t decrypt(const PublicKey& pk, const PrivateKey& sk, const Ciphertext& c,
                      const PointDlogTable* table = nullptr);

// C1 + C2 + r h.
Ciphertext hom_add(const PublicKey& pk, const Ciphertext& c1, const Ciphertext& c2, Rng& rng);
// Level-aware variant; level-2 inputs need options.level2_addition.
Ciphertext hom_add(const PairingContext& ctx, const Ciphertext& c1, const Ciphertext& c2,
                   Rng& rng, const BgnOptions& options = {});

// sum(C_i) + r h with one fresh r. Distributed exactly as a chain of hom_add
// calls; used by aggregators to fold all children at once.
Ciphertext hom_sum(const PublicKey& pk, std::span<const Ciphertext> inputs, Rng& rng);

// e(C1, C2) * h1^r, r uniform in [0, n - 1].
Ciphertext hom_mul(const PairingContext& ctx, const Ciphertext& c1, const Ciphertext& c2,
                   Rng& rng);
Ciphertext hom_mul(const PublicKey& pk, const Ciphertext& c1, const Ciphertext& c2, Rng& rng);

// log_{g1^q1}(C^q1) in [0, T2].
std::uint64_t decrypt_product(const PairingContext& ctx, const PrivateKey& sk,
                              const Ciphertext& c, const GtDlogTable* table = nullptr);
std::uint64_t decrypt_product(const PublicKey& pk, const PrivateKey& sk, const Ciphertext& c,
                              const GtDlogTable* table = nullptr);

PointDlogTable build_dlog_table(const CurvePoint& base, std::uint64_t max,
                                const CurveParams& curve,
                                std::uint64_t cap = kDefaultTableCap);
GtDlogTable build_dlog_table(const Fp2Element& base, std::uint64_t max, const Fp2Field& field,
                             std::uint64_t cap = kDefaultTableCap);

// Tables over q1 g (bound T) and g1^q1 (bound T2).
PointDlogTable make_decryption_table(const PublicKey& pk, const PrivateKey& sk);
GtDlogTable make_product_table(const PairingContext& ctx, const PrivateKey& sk);

// Level byte 0x01 then the compressed point text, or 0x02 then "a0,a1" in
// decimal.
std::string to_wire(const Ciphertext& c);
Ciphertext from_wire(const std::string& bytes, const PublicKey& pk);

// Size of a compressed level-1 cryptogram: |x| + 1 parity bit.
std::size_t compressed_bits(const Ciphertext& c);

}  // namespace wsnsec::bgn
