// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "../toy_oracle.hpp"
#include "wsnsec/bgn/cipher.hpp"
#include "wsnsec/error.hpp"

namespace wsnsec::bgn {
namespace {

KeyPair toy_key(const KeygenOptions& opts = {}) {
  Rng rng(7);
  return keygen_from_primes(5, 7, rng, opts);
}

oracle::ToyPoint to_toy(const CurvePoint& p) {
  if (p.is_infinity()) return {};
  return {false, static_cast<std::int64_t>(low_u64(p.x())),
          static_cast<std::int64_t>(low_u64(p.y()))};
}

const KeyPair& mid_key() {
  static const KeyPair kp = [] {
    Rng rng(2026);
    KeygenOptions opts;
    opts.message_bound = 5000;
    opts.product_bound = 5000;
    return keygen(20, rng, opts);
  }();
  return kp;
}

void expect_code(ErrorCode code, const auto& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(BgnKeygen, ToyPrimesGiveCofactorTwelve) {
  const KeyPair kp = toy_key();
  EXPECT_EQ(kp.pub.n, 35);
  EXPECT_EQ(kp.pub.l, 12);
  EXPECT_EQ(kp.pub.p, 419);
  EXPECT_EQ(kp.pub.message_bound, 6u);
  EXPECT_EQ(kp.pub.product_bound, 6u);
  EXPECT_EQ(kp.priv.q1, 5);

  const oracle::ToyCurve toy{419, 0, 1};
  EXPECT_EQ(toy.order(to_toy(kp.pub.g)), 35);
  EXPECT_EQ(toy.order(to_toy(kp.pub.h)), 5);
  EXPECT_TRUE(scalar_mul(kp.priv.q1, kp.pub.h, kp.pub.curve).is_infinity());
}

TEST(BgnKeygen, CofactorScanSkipsResiduesOneModThree) {
  // l = 4 and l = 10 give primes 139 and 349, both 1 mod 3.
  for (int l : {4, 10}) {
    const int p = l * 35 - 1;
    EXPECT_TRUE(oracle::is_prime_trial(p));
    EXPECT_EQ(p % 3, 1);
  }
  for (int l = 1; l < 12; ++l) {
    const int p = l * 35 - 1;
    EXPECT_FALSE(oracle::is_prime_trial(p) && p % 3 == 2) << l;
  }
}

TEST(BgnKeygen, DeterministicForSeed) {
  Rng a(99), b(99);
  EXPECT_EQ(keygen(16, a).pub, keygen(16, b).pub);
}

TEST(BgnKeygen, SecurityParameter80) {
  Rng rng(80);
  const KeyPair kp = keygen(80, rng);
  const auto bits = bit_length(kp.pub.p);
  EXPECT_GE(bits, 161u);
  EXPECT_LE(bits, 200u);
  EXPECT_EQ(kp.pub.message_bound, kDefaultMessageBound);
  EXPECT_NO_THROW(validate(kp.pub));
  EXPECT_TRUE(scalar_mul(kp.priv.q1, kp.pub.h, kp.pub.curve).is_infinity());
  EXPECT_TRUE(scalar_mul(kp.pub.n, kp.pub.g, kp.pub.curve).is_infinity());
}

TEST(BgnKeygen, RejectsBoundsAtOrAboveQ2) {
  KeygenOptions opts;
  opts.product_bound = 36;
  expect_code(ErrorCode::kInvalidArgument, [&] { toy_key(opts); });
  Rng rng(1);
  expect_code(ErrorCode::kInvalidArgument, [&] { keygen(1, rng); });
}

TEST(BgnKeygen, JsonRoundTrip) {
  const KeyPair& kp = mid_key();
  EXPECT_EQ(public_key_from_json(public_key_to_json(kp.pub)), kp.pub);
  EXPECT_EQ(private_key_from_json(private_key_to_json(kp.priv)), kp.priv);
  expect_code(ErrorCode::kMalformedInput, [] { public_key_from_json("{\"n\": 3"); });
}

TEST(BgnEncrypt, ZeroWithZeroRandomnessIsInfinity) {
  const KeyPair kp = toy_key();
  EXPECT_TRUE(encrypt_with_randomness(kp.pub, 0, 0).point().is_infinity());
}

TEST(BgnEncrypt, ExhaustiveToySweepMatchesOracle) {
  const KeyPair kp = toy_key();
  const oracle::ToyCurve toy{419, 0, 1};
  const auto g = to_toy(kp.pub.g);
  const auto h = to_toy(kp.pub.h);
  const PointDlogTable table = make_decryption_table(kp.pub, kp.priv);
  for (std::uint64_t m = 0; m <= 6; ++m) {
    for (int r = 0; r < 35; ++r) {
      const Ciphertext c = encrypt_with_randomness(kp.pub, m, r);
      const auto expected = toy.add(toy.times(static_cast<std::int64_t>(m), g), toy.times(r, h));
      ASSERT_EQ(to_toy(c.point()), expected) << m << " " << r;
      EXPECT_EQ(decrypt(kp.pub, kp.priv, c), m);
      EXPECT_EQ(decrypt(kp.pub, kp.priv, c, &table), m);
    }
  }
}

TEST(BgnEncrypt, MessageAboveBoundRejected) {
  const KeyPair kp = toy_key();
  Rng rng(3);
  expect_code(ErrorCode::kMessageOutOfRange, [&] { encrypt(kp.pub, 7, rng); });
}

TEST(BgnEncrypt, FreshRandomnessGivesDistinctPayloads) {
  const KeyPair& kp = mid_key();
  Rng rng(5);
  std::set<std::string> seen;
  for (int i = 0; i < 100; ++i) seen.insert(to_wire(encrypt(kp.pub, 5, rng)));
  EXPECT_GE(seen.size(), 99u);
}

TEST(BgnDecrypt, OverflowBeyondBoundNotFound) {
  KeygenOptions opts;
  opts.message_bound = 4;
  const KeyPair kp = toy_key(opts);
  Rng rng(11);
  std::vector<Ciphertext> ones;
  for (int i = 0; i < 5; ++i) ones.push_back(encrypt(kp.pub, 1, rng));
  const Ciphertext sum = hom_sum(kp.pub, ones, rng);
  expect_code(ErrorCode::kDlogNotFound, [&] { decrypt(kp.pub, kp.priv, sum); });
  const PointDlogTable table = make_decryption_table(kp.pub, kp.priv);
  expect_code(ErrorCode::kDlogNotFound, [&] { decrypt(kp.pub, kp.priv, sum, &table); });
}

TEST(BgnDecrypt, SumsWrapModuloQ2) {
  // q1 g has order q2 = 7, so ten encryptions of 1 decrypt to 10 mod 7.
  const KeyPair kp = toy_key();
  Rng rng(12);
  std::vector<Ciphertext> ones;
  for (int i = 0; i < 10; ++i) ones.push_back(encrypt(kp.pub, 1, rng));
  EXPECT_EQ(decrypt(kp.pub, kp.priv, hom_sum(kp.pub, ones, rng)), 3u);
}

TEST(BgnAdd, ToyIdentities) {
  const KeyPair kp = toy_key();
  Rng rng(13);
  for (int r1 = 0; r1 < 35; ++r1) {
    const Ciphertext c2 = encrypt_with_randomness(kp.pub, 2, r1);
    const Ciphertext c3 = encrypt(kp.pub, 3, rng);
    EXPECT_EQ(decrypt(kp.pub, kp.priv, hom_add(kp.pub, c2, c3, rng)), 5u);
  }
  for (std::uint64_t m = 0; m <= 6; ++m) {
    const Ciphertext c = hom_add(kp.pub, encrypt(kp.pub, m, rng), encrypt(kp.pub, 0, rng), rng);
    EXPECT_EQ(decrypt(kp.pub, kp.priv, c), m);
  }
  Ciphertext acc = encrypt(kp.pub, 1, rng);
  for (int i = 1; i < 6; ++i) acc = hom_add(kp.pub, acc, encrypt(kp.pub, 1, rng), rng);
  EXPECT_EQ(decrypt(kp.pub, kp.priv, acc), 6u);
}

TEST(BgnAdd, RandomMultisets) {
  const KeyPair& kp = mid_key();
  const PointDlogTable table = make_decryption_table(kp.pub, kp.priv);
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t count = 1 + rng.below(50);
    std::vector<Ciphertext> cs;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t m = rng.below(100);
      total += m;
      cs.push_back(encrypt(kp.pub, m, rng));
    }
    EXPECT_EQ(decrypt(kp.pub, kp.priv, hom_sum(kp.pub, cs, rng), &table), total);
    Ciphertext acc = cs[0];
    for (std::size_t i = 1; i < cs.size(); ++i) acc = hom_add(kp.pub, acc, cs[i], rng);
    EXPECT_EQ(decrypt(kp.pub, kp.priv, acc, &table), total);
  }
}

TEST(BgnAdd, OutputIsRerandomized) {
  const KeyPair& kp = mid_key();
  const auto group = curve_group(kp.pub.curve);
  Rng rng(15);
  int same = 0;
  for (int i = 0; i < 200; ++i) {
    const Ciphertext a = encrypt(kp.pub, 1, rng);
    const Ciphertext b = encrypt(kp.pub, 2, rng);
    if (hom_add(kp.pub, a, b, rng).point() == group.add(a.point(), b.point())) ++same;
  }
  EXPECT_EQ(same, 0);
}

TEST(BgnAdd, LevelMismatch) {
  const KeyPair kp = toy_key();
  const PairingContext ctx(kp.pub);
  Rng rng(16);
  const Ciphertext c1 = encrypt(kp.pub, 1, rng);
  const Ciphertext c2 = hom_mul(ctx, c1, c1, rng);
  expect_code(ErrorCode::kLevelMismatch, [&] { hom_add(ctx, c1, c2, rng); });
  expect_code(ErrorCode::kLevelMismatch, [&] { hom_add(kp.pub, c2, c2, rng); });
  expect_code(ErrorCode::kLevelMismatch, [&] { hom_add(ctx, c2, c2, rng); });
}

TEST(BgnAdd, LevelTwoExtension) {
  const KeyPair kp = toy_key();
  const PairingContext ctx(kp.pub);
  Rng rng(17);
  const Ciphertext a = hom_mul(ctx, encrypt(kp.pub, 1, rng), encrypt(kp.pub, 2, rng), rng);
  const Ciphertext b = hom_mul(ctx, encrypt(kp.pub, 3, rng), encrypt(kp.pub, 1, rng), rng);
  const Ciphertext s = hom_add(ctx, a, b, rng, BgnOptions{.level2_addition = true});
  EXPECT_EQ(s.level(), Level::kTwo);
  EXPECT_EQ(decrypt_product(ctx, kp.priv, s), 5u);
}

TEST(BgnMul, TwoTimesThreeOverAllRandomness) {
  const KeyPair kp = toy_key();
  const PairingContext ctx(kp.pub);
  const GtDlogTable table = make_product_table(ctx, kp.priv);
  Rng rng(18);
  for (int r1 = 0; r1 < 35; ++r1) {
    const Ciphertext c2 = encrypt_with_randomness(kp.pub, 2, r1);
    const Ciphertext c3 = encrypt_with_randomness(kp.pub, 3, rng.below(35));
    const Ciphertext prod = hom_mul(ctx, c2, c3, rng);
    ASSERT_EQ(prod.level(), Level::kTwo);
    EXPECT_EQ(decrypt_product(ctx, kp.priv, prod), 6u);
    EXPECT_EQ(decrypt_product(ctx, kp.priv, prod, &table), 6u);
  }
}

TEST(BgnMul, AllToyPairs) {
  const KeyPair kp = toy_key();
  const PairingContext ctx(kp.pub);
  Rng rng(19);
  for (std::uint64_t a = 0; a <= 6; ++a) {
    for (std::uint64_t b = 0; a * b <= 6 && b <= 6; ++b) {
      const Ciphertext prod = hom_mul(ctx, encrypt(kp.pub, a, rng), encrypt(kp.pub, b, rng), rng);
      EXPECT_EQ(decrypt_product(ctx, kp.priv, prod), a * b) << a << "*" << b;
    }
  }
}

TEST(BgnMul, ProductBoundCannotExceedSubgroupOrder) {
  // g1^q1 has order q2 = 7, so a product table with T2 = 36 collides.
  const KeyPair kp = toy_key();
  const PairingContext ctx(kp.pub);
  const Fp2Element base = ctx.field().pow(ctx.g1(), kp.priv.q1);
  expect_code(ErrorCode::kTableCollision, [&] { build_dlog_table(base, 36, ctx.field()); });
}

TEST(BgnMul, MidSizeProducts) {
  const KeyPair& kp = mid_key();
  const PairingContext ctx(kp.pub);
  Rng rng(20);
  const Ciphertext c6 = encrypt(kp.pub, 6, rng);
  const Ciphertext c5 = encrypt(kp.pub, 5, rng);
  EXPECT_EQ(decrypt_product(ctx, kp.priv, hom_mul(ctx, c6, c5, rng)), 30u);
  EXPECT_EQ(decrypt_product(kp.pub, kp.priv, hom_mul(kp.pub, c6, c5, rng)), 30u);
  const Ciphertext c1 = encrypt(kp.pub, 1, rng);
  const Ciphertext c0 = encrypt(kp.pub, 0, rng);
  for (std::uint64_t m : {0u, 1u, 77u, 4999u}) {
    const Ciphertext cm = encrypt(kp.pub, m, rng);
    EXPECT_EQ(decrypt_product(ctx, kp.priv, hom_mul(ctx, c1, cm, rng)), m);
    EXPECT_EQ(decrypt_product(ctx, kp.priv, hom_mul(ctx, c0, cm, rng)), 0u);
  }
}

TEST(BgnMul, LevelMismatch) {
  const KeyPair kp = toy_key();
  const PairingContext ctx(kp.pub);
  Rng rng(21);
  const Ciphertext c1 = encrypt(kp.pub, 1, rng);
  const Ciphertext c2 = hom_mul(ctx, c1, c1, rng);
  expect_code(ErrorCode::kLevelMismatch, [&] { decrypt_product(ctx, kp.priv, c1); });
  expect_code(ErrorCode::kLevelMismatch, [&] { hom_mul(ctx, c2, c1, rng); });
  expect_code(ErrorCode::kLevelMismatch, [&] { decrypt(kp.pub, kp.priv, c2); });
}

TEST(BgnTable, SizesAndCap) {
  const KeyPair kp = toy_key();
  const CurvePoint base = scalar_mul(kp.priv.q1, kp.pub.g, kp.pub.curve);
  const PointDlogTable zero = build_dlog_table(base, 0, kp.pub.curve);
  EXPECT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero.lookup(CurvePoint::infinity()), 0u);
  EXPECT_FALSE(zero.lookup(base).has_value());

  const PointDlogTable six = build_dlog_table(base, 6, kp.pub.curve);
  EXPECT_EQ(six.size(), 7u);
  std::set<std::string> distinct;
  for (std::uint64_t i = 0; i <= 6; ++i) {
    distinct.insert(point_to_hex(scalar_mul(from_u64(i), base, kp.pub.curve)));
  }
  EXPECT_EQ(distinct.size(), 7u);

  expect_code(ErrorCode::kTableTooLarge, [&] { build_dlog_table(base, 6, kp.pub.curve, 6); });
}

TEST(BgnTable, AgreesWithBabyStepGiantStep) {
  const KeyPair& kp = mid_key();
  const PointDlogTable table = make_decryption_table(kp.pub, kp.priv);
  const CurveGroupOps ops(kp.pub.curve);
  const CurvePoint base = ops.power(kp.pub.g, kp.priv.q1);
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t e = rng.below(kp.pub.message_bound + 1);
    const CurvePoint target = ops.power(base, from_u64(e));
    EXPECT_EQ(table.lookup(target), e);
    EXPECT_EQ(bsgs(ops, base, target, kp.pub.message_bound), e);
  }
}

TEST(BgnWire, RoundTrip) {
  const KeyPair& kp = mid_key();
  const PairingContext ctx(kp.pub);
  Rng rng(23);
  const Ciphertext c1 = encrypt(kp.pub, 42, rng);
  const Ciphertext c2 = hom_mul(ctx, c1, c1, rng);
  const Ciphertext inf = encrypt_with_randomness(kp.pub, 0, 0);
  for (const Ciphertext& c : {c1, c2, inf}) {
    const std::string wire = to_wire(c);
    EXPECT_EQ(static_cast<int>(wire[0]), static_cast<int>(c.level()));
    EXPECT_EQ(from_wire(wire, kp.pub), c);
  }
  EXPECT_EQ(compressed_bits(inf), 1u);
  EXPECT_EQ(compressed_bits(c1), bit_length(c1.point().x()) + 1);
  EXPECT_LE(compressed_bits(c1), bit_length(kp.pub.p) + 1);
  expect_code(ErrorCode::kMalformedInput, [&] { from_wire("", kp.pub); });
  expect_code(ErrorCode::kMalformedInput, [&] { from_wire("\x03" "00", kp.pub); });
  expect_code(ErrorCode::kMalformedInput, [&] { from_wire("\x02" "12", kp.pub); });
}

}  // namespace
}  // namespace wsnsec::bgn
