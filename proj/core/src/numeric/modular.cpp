// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/numeric/modular.hpp"

#include <array>

#include "wsnsec/error.hpp"
#include "wsnsec/numeric/prime_field.hpp"

namespace wsnsec {

BigUint mod_inv(const BigUint& a, const BigUint& p) {
  BigUint r;
  const BigUint reduced = mod_reduce(a, p);
  if (reduced == 0 ||
      mpz_invert(r.get_mpz_t(), reduced.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kNonInvertible,
                to_dec(a) + " has no inverse mod " + to_dec(p));
  }
  return r;
}

int legendre(const BigUint& z, const BigUint& p) {
  const BigUint r = mod_reduce(z, p);
  if (r == 0) return 0;
  BigUint e = (p - 1) / 2;
  BigUint t;
  mpz_powm(t.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return t == 1 ? 1 : -1;
}

BigUint mod_sqrt_3mod4(const BigUint& z, const BigUint& p) {
  const BigUint r = mod_reduce(z, p);
  const BigUint e = (p + 1) / 4;
  BigUint y;
  mpz_powm(y.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  if (mod_reduce(y * y, p) != r) {
    throw Error(ErrorCode::kNotAResidue,
                to_dec(r) + " is not a square mod " + to_dec(p));
  }
  return y;
}

BigUint mod_sqrt(const BigUint& z, const BigUint& p) {
  const BigUint r = mod_reduce(z, p);
  if (r == 0) return 0;
  if (p == 2) return r;
  if (mod_reduce(p, 4) == 3) return mod_sqrt_3mod4(r, p);
  if (legendre(r, p) != 1) {
    throw Error(ErrorCode::kNotAResidue,
                to_dec(r) + " is not a square mod " + to_dec(p));
  }
  // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
  BigUint q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q >>= 1;
    ++s;
  }
  BigUint c_base = 2;
  while (legendre(c_base, p) != -1) ++c_base;

  PrimeField f(p);
  unsigned long m = s;
  BigUint c = f.pow(c_base, q);
  BigUint t = f.pow(r, q);
  BigUint x = f.pow(r, (q + 1) / 2);
  while (t != 1) {
    unsigned long i = 0;
    BigUint t2 = t;
    while (t2 != 1) {
      t2 = f.sqr(t2);
      ++i;
    }
    BigUint b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = f.sqr(b);
    m = i;
    c = f.sqr(b);
    t = f.mul(t, c);
    x = f.mul(x, b);
  }
  return x;
}

namespace {

// Strong probable-prime test to base a; n odd, n > 3.
bool miller_rabin_round(const BigUint& n, const BigUint& n_minus_1,
                        const BigUint& d, unsigned long s, const BigUint& a) {
  BigUint x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = mod_reduce(x * x, n);
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

constexpr std::array<unsigned, 13> kWitnesses = {2,  3,  5,  7,  11, 13, 17,
                                                 19, 23, 29, 31, 37, 41};

}  // namespace

bool is_prime(const BigUint& n, int rounds) {
  if (n < 2) return false;
  for (unsigned w : kWitnesses) {
    if (n == w) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), w)) return false;
  }
  const BigUint n_minus_1 = n - 1;
  BigUint d = n_minus_1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned w : kWitnesses) {
    if (!miller_rabin_round(n, n_minus_1, d, s, BigUint(w))) return false;
  }
  static const BigUint kDeterministicBound =
      from_dec("3317044064679887385961981");
  if (n < kDeterministicBound) return true;

  Rng witness_rng = Rng::derive(low_u64(n) ^ bit_length(n), "miller-rabin");
  for (int i = 0; i < rounds; ++i) {
    const BigUint a = witness_rng.below(n - 3) + 2;  // [2, n-2]
    if (!miller_rabin_round(n, n_minus_1, d, s, a)) return false;
  }
  return true;
}

BigUint gen_prime(std::size_t bits, Rng& rng) {
  if (bits < 2) throw Error(ErrorCode::kInvalidArgument, "bits must be >= 2");
  if (bits == 2) return rng.below(2) == 0 ? BigUint(2) : BigUint(3);
  const BigUint top = BigUint(1) << (bits - 1);
  for (;;) {
    BigUint candidate = rng.random_bits(bits - 1) | top;
    candidate |= 1;
    if (is_prime(candidate)) return candidate;
  }
}

}  // namespace wsnsec
