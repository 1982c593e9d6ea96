// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/bgn/cipher.hpp"

#include "wsnsec/error.hpp"

namespace wsnsec::bgn {

const CurvePoint& Ciphertext::point() const {
  if (const auto* p = std::get_if<CurvePoint>(&payload_)) return *p;
  throw Error(ErrorCode::kLevelMismatch, "expected a level-1 ciphertext");
}

const Fp2Element& Ciphertext::value() const {
  if (const auto* v = std::get_if<Fp2Element>(&payload_)) return *v;
  throw Error(ErrorCode::kLevelMismatch, "expected a level-2 ciphertext");
}

PairingContext::PairingContext(const PublicKey& pk)
    : pk_(pk),
      pairing_(pk.curve, pk.n),
      g1_(pairing_.modified(pk.g, pk.g)),
      h1_(pairing_.modified(pk.g, pk.h)) {}

Ciphertext encrypt_with_randomness(const PublicKey& pk, std::uint64_t m, const BigUint& r) {
  if (m > pk.message_bound) {
    throw Error(ErrorCode::kMessageOutOfRange,
                std::to_string(m) + " exceeds T = " + std::to_string(pk.message_bound));
  }
  const auto group = curve_group(pk.curve);
  return Ciphertext::level_one(
      group.add(group.mul(from_u64(m), pk.g), group.mul(r, pk.h)));
}

Ciphertext encrypt(const PublicKey& pk, std::uint64_t m, Rng& rng) {
  return encrypt_with_randomness(pk, m, rng.below(pk.n));
}

Encryptor::Encryptor(const PublicKey& pk)
    : pk_(pk),
      g_(pk.curve, pk.g, bit_length(from_u64(pk.message_bound))),
      h_(pk.curve, pk.h, bit_length(pk.n)) {}

Ciphertext Encryptor::encrypt_with_randomness(std::uint64_t m, const BigUint& r) const {
  if (m > pk_.message_bound) {
    throw Error(ErrorCode::kMessageOutOfRange,
                std::to_string(m) + " exceeds T = " + std::to_string(pk_.message_bound));
  }
  return Ciphertext::level_one(point_add(g_.mul(from_u64(m)), h_.mul(r), pk_.curve));
}

Ciphertext Encryptor::encrypt(std::uint64_t m, Rng& rng) const {
  return encrypt_with_randomness(m, rng.below(pk_.n));
}

CurvePoint Encryptor::mask(Rng& rng) const { return h_.mul(rng.below(pk_.n)); }

Ciphertext Encryptor::hom_sum(std::span<const Ciphertext> inputs, Rng& rng) const {
  const auto group = curve_group(pk_.curve);
  CurvePoint acc = CurvePoint::infinity();
  for (const Ciphertext& c : inputs) acc = group.add(acc, c.point());
  return Ciphertext::level_one(group.add(acc, mask(rng)));
}

std::uint64_t decrypt(const PublicKey& pk, const PrivateKey& sk, const Ciphertext& c,
                      const PointDlogTable* table) {
  const CurveGroupOps ops(pk.curve);
  const CurvePoint target = ops.power(c.point(), sk.q1);
  std::optional<std::uint64_t> m;
  if (table) {
    m = table->lookup(target);
  } else {
    m = bsgs(ops, ops.power(pk.g, sk.q1), target, pk.message_bound);
  }
  if (!m) {
    throw Error(ErrorCode::kDlogNotFound,
                "no plaintext in [0, " + std::to_string(table ? table->max() : pk.message_bound) +
                    "]");
  }
  return *m;
}

Ciphertext hom_add(const PublicKey& pk, const Ciphertext& c1, const Ciphertext& c2, Rng& rng) {
  const auto group = curve_group(pk.curve);
  const CurvePoint sum = group.add(c1.point(), c2.point());
  return Ciphertext::level_one(group.add(sum, group.mul(rng.below(pk.n), pk.h)));
}

Ciphertext hom_add(const PairingContext& ctx, const Ciphertext& c1, const Ciphertext& c2,
                   Rng& rng, const BgnOptions& options) {
  if (c1.level() != c2.level()) {
    throw Error(ErrorCode::kLevelMismatch, "operands are at different levels");
  }
  if (c1.level() == Level::kOne) return hom_add(ctx.key(), c1, c2, rng);
  if (!options.level2_addition) {
    throw Error(ErrorCode::kLevelMismatch, "level-2 addition is disabled");
  }
  const Fp2Field& f = ctx.field();
  const Fp2Element mask = f.pow(ctx.h1(), rng.below(ctx.key().n));
  return Ciphertext::level_two(f.mul(f.mul(c1.value(), c2.value()), mask));
}

Ciphertext hom_sum(const PublicKey& pk, std::span<const Ciphertext> inputs, Rng& rng) {
  const auto group = curve_group(pk.curve);
  CurvePoint acc = CurvePoint::infinity();
  for (const Ciphertext& c : inputs) acc = group.add(acc, c.point());
  return Ciphertext::level_one(group.add(acc, group.mul(rng.below(pk.n), pk.h)));
}

Ciphertext hom_mul(const PairingContext& ctx, const Ciphertext& c1, const Ciphertext& c2,
                   Rng& rng) {
  const Fp2Field& f = ctx.field();
  const Fp2Element paired = ctx.pairing().modified(c1.point(), c2.point());
  const Fp2Element mask = f.pow(ctx.h1(), rng.below(ctx.key().n));
  return Ciphertext::level_two(f.mul(paired, mask));
}

Ciphertext hom_mul(const PublicKey& pk, const Ciphertext& c1, const Ciphertext& c2, Rng& rng) {
  // Check levels before paying for the pairing context.
  c1.point();
  c2.point();
  return hom_mul(PairingContext(pk), c1, c2, rng);
}

std::uint64_t decrypt_product(const PairingContext& ctx, const PrivateKey& sk,
                              const Ciphertext& c, const GtDlogTable* table) {
  const GtGroupOps ops(ctx.field());
  const Fp2Element target = ops.power(c.value(), sk.q1);
  std::optional<std::uint64_t> m;
  const std::uint64_t bound = ctx.key().product_bound;
  if (table) {
    m = table->lookup(target);
  } else {
    m = bsgs(ops, ops.power(ctx.g1(), sk.q1), target, bound);
  }
  if (!m) {
    throw Error(ErrorCode::kDlogNotFound,
                "no product in [0, " + std::to_string(table ? table->max() : bound) + "]");
  }
  return *m;
}

std::uint64_t decrypt_product(const PublicKey& pk, const PrivateKey& sk, const Ciphertext& c,
                              const GtDlogTable* table) {
  c.value();
  return decrypt_product(PairingContext(pk), sk, c, table);
}

PointDlogTable build_dlog_table(const CurvePoint& base, std::uint64_t max,
                                const CurveParams& curve, std::uint64_t cap) {
  return PointDlogTable(CurveGroupOps(curve), base, max, cap);
}

GtDlogTable build_dlog_table(const Fp2Element& base, std::uint64_t max, const Fp2Field& field,
                             std::uint64_t cap) {
  return GtDlogTable(GtGroupOps(field), base, max, cap);
}

PointDlogTable make_decryption_table(const PublicKey& pk, const PrivateKey& sk) {
  return build_dlog_table(scalar_mul(sk.q1, pk.g, pk.curve), pk.message_bound, pk.curve);
}

GtDlogTable make_product_table(const PairingContext& ctx, const PrivateKey& sk) {
  return build_dlog_table(ctx.field().pow(ctx.g1(), sk.q1), ctx.key().product_bound,
                          ctx.field());
}

std::string to_wire(const Ciphertext& c) {
  std::string out;
  if (c.level() == Level::kOne) {
    out.push_back(static_cast<char>(0x01));
    out += point_to_hex(c.point());
  } else {
    out.push_back(static_cast<char>(0x02));
    out += to_dec(c.value().a0) + "," + to_dec(c.value().a1);
  }
  return out;
}

Ciphertext from_wire(const std::string& bytes, const PublicKey& pk) {
  if (bytes.empty()) throw Error(ErrorCode::kMalformedInput, "empty ciphertext");
  std::string body = bytes.substr(1);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
  switch (static_cast<unsigned char>(bytes[0])) {
    case 0x01:
      return Ciphertext::level_one(point_from_hex(body, pk.curve));
    case 0x02: {
      const auto comma = body.find(',');
      if (comma == std::string::npos) {
        throw Error(ErrorCode::kMalformedInput, "level-2 payload needs two components");
      }
      Fp2Element v{from_dec(body.substr(0, comma)), from_dec(body.substr(comma + 1))};
      if (v.a0 >= pk.p || v.a1 >= pk.p) {
        throw Error(ErrorCode::kMalformedInput, "level-2 component not reduced mod p");
      }
      return Ciphertext::level_two(std::move(v));
    }
    default:
      throw Error(ErrorCode::kMalformedInput, "unknown ciphertext level byte");
  }
}

std::size_t compressed_bits(const Ciphertext& c) {
  const CurvePoint& p = c.point();
  if (p.is_infinity()) return 1;
  return bit_length(p.x()) + 1;
}

}  // namespace wsnsec::bgn
