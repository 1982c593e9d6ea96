// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <set>

#include "../toy_oracle.hpp"
#include "wsnsec/error.hpp"
#include "wsnsec/numeric/fp2.hpp"
#include "wsnsec/numeric/fraction.hpp"
#include "wsnsec/numeric/modular.hpp"
#include "wsnsec/rng.hpp"

namespace wsnsec {
namespace {

const BigUint kToyP = 419;

BigUint big_prime_167() {
  Rng rng(7);
  return gen_prime(167, rng);
}

TEST(ModInv, ToyExamples) {
  EXPECT_EQ(mod_inv(1, kToyP), 1);
  EXPECT_EQ(mod_inv(2, kToyP), 210);
  EXPECT_EQ(mod_inv(418, kToyP), 418);
}

TEST(ModInv, AgreesWithBruteForceOnToyField) {
  for (int a = 1; a < 419; ++a) {
    EXPECT_EQ(mod_inv(a, kToyP), oracle::inv_brute(a, 419)) << a;
  }
}

TEST(ModInv, RandomLargeField) {
  const BigUint p = big_prime_167();
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const BigUint a = rng.below(p - 1) + 1;
    EXPECT_EQ(mod_reduce(mod_inv(a, p) * a, p), 1);
  }
}

TEST(ModInv, ZeroIsNotInvertible) {
  try {
    mod_inv(0, kToyP);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonInvertible);
  }
  EXPECT_THROW(mod_inv(6, 9), Error);
}

TEST(ModSqrt, ToyExamples) {
  EXPECT_EQ(mod_sqrt_3mod4(1, kToyP), 1);
  EXPECT_EQ(mod_sqrt_3mod4(0, kToyP), 0);
  const BigUint y = mod_sqrt_3mod4(4, kToyP);
  EXPECT_TRUE(y == 2 || y == 417);
}

TEST(ModSqrt, MatchesSquareTable) {
  std::set<int> squares;
  for (int y = 0; y < 419; ++y) squares.insert(y * y % 419);
  for (int z = 0; z < 419; ++z) {
    if (squares.count(z)) {
      const BigUint y = mod_sqrt_3mod4(z, kToyP);
      EXPECT_EQ(mod_reduce(y * y, kToyP), z);
    } else {
      try {
        mod_sqrt_3mod4(z, kToyP);
        ADD_FAILURE() << z;
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kNotAResidue);
      }
    }
  }
}

TEST(ModSqrt, RootsOfRandomSquares) {
  const BigUint p = big_prime_167();
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const BigUint y = rng.below(p);
    const BigUint z = mod_reduce(y * y, p);
    const BigUint r = mod_sqrt(z, p);
    EXPECT_TRUE(r == y || r == mod_reduce(p - y, p));
  }
}

TEST(ModSqrt, TonelliShanksOnOneModFour) {
  // 353 = 1 mod 4, 1153 = 1 mod 128
  for (int p : {353, 1153}) {
    for (int y = 0; y < p; ++y) {
      const BigUint r = mod_sqrt(y * y % p, p);
      EXPECT_EQ(mod_reduce(r * r, p), y * y % p);
    }
  }
}

TEST(IsPrime, SmallExamples) {
  EXPECT_TRUE(is_prime(419));
  EXPECT_FALSE(is_prime(420));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(0));
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (int n = 0; n < 5000; ++n) {
    EXPECT_EQ(is_prime(n), oracle::is_prime_trial(n)) << n;
  }
}

TEST(IsPrime, StrongPseudoprimesAndLargeValues) {
  // 3215031751 fools bases 2, 3, 5, 7.
  EXPECT_FALSE(is_prime(from_u64(3215031751ULL)));
  // Mersenne primes above the deterministic witness bound.
  EXPECT_TRUE(is_prime((BigUint(1) << 89) - 1));
  EXPECT_TRUE(is_prime((BigUint(1) << 127) - 1));
  EXPECT_FALSE(is_prime((BigUint(1) << 128) + 1));
  EXPECT_FALSE(is_prime(((BigUint(1) << 127) - 1) * ((BigUint(1) << 89) - 1)));
}

TEST(GenPrime, ThreeBitPrimes) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const BigUint p = gen_prime(3, rng);
    EXPECT_TRUE(p == 5 || p == 7);
  }
}

TEST(GenPrime, DeterministicGivenSeed) {
  Rng a(1234), b(1234);
  EXPECT_EQ(gen_prime(8, a), gen_prime(8, b));
}

TEST(GenPrime, ExactBitLength) {
  Rng rng(99);
  for (int i = 0; i < 20; ++i) {
    const BigUint p = gen_prime(16, rng);
    EXPECT_GE(p, 1 << 15);
    EXPECT_LT(p, 1 << 16);
    EXPECT_TRUE(oracle::is_prime_trial(p.get_si()));
  }
  const BigUint big = gen_prime(167, rng);
  EXPECT_EQ(bit_length(big), 167u);
}

TEST(Fp2, IdentityAndInverse) {
  const Fp2Field f(kToyP);
  EXPECT_EQ(f.nonresidue(), 2);  // 419 = 3 mod 8, so 2 is a non-residue
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Fp2Element y{rng.below(kToyP), rng.below(kToyP)};
    EXPECT_EQ(f.mul(f.one(), y), y);
    if (!f.is_zero(y)) EXPECT_EQ(f.mul(f.inv(y), y), f.one());
  }
  EXPECT_THROW(f.inv(f.zero()), Error);
}

TEST(Fp2, FieldAxiomsOnRandomTriples) {
  const BigUint p = big_prime_167();
  const Fp2Field f(p);
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Fp2Element x{rng.below(p), rng.below(p)};
    const Fp2Element y{rng.below(p), rng.below(p)};
    const Fp2Element z{rng.below(p), rng.below(p)};
    EXPECT_EQ(f.mul(x, y), f.mul(y, x));
    EXPECT_EQ(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
    EXPECT_EQ(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
  }
}

TEST(Fp2, FermatAtToySize) {
  const Fp2Field f(kToyP);
  const BigUint order = kToyP * kToyP - 1;
  Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const Fp2Element x{rng.below(kToyP), rng.below(kToyP)};
    if (f.is_zero(x)) continue;
    EXPECT_EQ(f.pow(x, order), f.one());
  }
}

TEST(Fp2, CubeRootOfUnityMatchesExhaustiveSearch) {
  const Fp2Field f(kToyP);
  // Exhaustive: all z = a0 + a1 i with z^2 + z + 1 = 0 and a1 != 0.
  std::vector<Fp2Element> roots;
  for (int a0 = 0; a0 < 419; ++a0) {
    for (int a1 = 1; a1 < 419; ++a1) {
      const Fp2Element z{a0, a1};
      if (f.is_zero(f.add(f.add(f.sqr(z), z), f.one()))) roots.push_back(z);
    }
  }
  ASSERT_EQ(roots.size(), 2u);
  const Fp2Element zeta = f.primitive_cube_root_of_unity();
  EXPECT_EQ(zeta, std::min(roots[0], roots[1]));
  EXPECT_EQ(f.mul(f.sqr(zeta), zeta), f.one());
  EXPECT_NE(zeta, f.one());
  EXPECT_FALSE(f.in_base_field(zeta));
}

TEST(Fraction, XorExamples) {
  const Fraction64 half = Fraction64::half();
  const Fraction64 quarter = Fraction64::from_double(0.25);
  EXPECT_EQ(frac_xor(half, quarter), Fraction64::from_double(0.75));
  EXPECT_EQ(frac_xor(quarter, Fraction64::zero()), quarter);
  EXPECT_EQ(frac_xor(quarter, quarter), Fraction64::zero());
}

TEST(Fraction, XorIsAnInvolution) {
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const auto a = Fraction64::from_raw(rng.next_u64() & Fraction64::kFracMask);
    const auto b = Fraction64::from_raw(rng.next_u64() & Fraction64::kFracMask);
    EXPECT_EQ(frac_xor(frac_xor(a, b), b), a);
  }
}

TEST(Fraction, DivisionTruncates) {
  const auto third = frac_div(Fraction64::from_raw(1), Fraction64::from_raw(3));
  EXPECT_EQ(third.raw(), Fraction64::kOneRaw / 3);
  EXPECT_EQ(frac_div(Fraction64::half(), Fraction64::half()), Fraction64::one());
  EXPECT_THROW(frac_div(Fraction64::one(), Fraction64::half()), Error);
  EXPECT_THROW(frac_xor(Fraction64::one(), Fraction64::half()), Error);
  EXPECT_EQ(frac_scale_floor(Fraction64::half(), 8), 4u);
  EXPECT_EQ(frac_scale_floor(Fraction64::one(), 8), 8u);
}

TEST(Rng, SubStreamsAreReproducibleAndDistinct) {
  Rng a = Rng::derive(42, "keygen");
  Rng b = Rng::derive(42, "keygen");
  Rng c = Rng::derive(42, "topology");
  const auto va = a.next_u64();
  EXPECT_EQ(va, b.next_u64());
  EXPECT_NE(va, c.next_u64());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(BigUint(37)), 37);
}

}  // namespace
}  // namespace wsnsec
