// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/numeric/fp2.hpp"

#include "wsnsec/error.hpp"
#include "wsnsec/numeric/modular.hpp"

namespace wsnsec {

std::uint64_t hash_value(const Fp2Element& x) {
  return low_u64(x.a0) * 0x9e3779b97f4a7c15ULL ^ low_u64(x.a1);
}

Fp2Field::Fp2Field(const BigUint& p) : base_(p) {
  if (p < 3) throw Error(ErrorCode::kInvalidArgument, "Fp2 needs an odd prime");
  d_ = 2;
  while (legendre(d_, p) != -1) ++d_;
}

Fp2Element Fp2Field::add(const Element& x, const Element& y) const {
  return {base_.add(x.a0, y.a0), base_.add(x.a1, y.a1)};
}

Fp2Element Fp2Field::sub(const Element& x, const Element& y) const {
  return {base_.sub(x.a0, y.a0), base_.sub(x.a1, y.a1)};
}

Fp2Element Fp2Field::neg(const Element& x) const {
  return {base_.neg(x.a0), base_.neg(x.a1)};
}

Fp2Element Fp2Field::mul(const Element& x, const Element& y) const {
  // (a0 + a1 i)(b0 + b1 i) = a0 b0 + d a1 b1 + (a0 b1 + a1 b0) i
  const BigUint& p = modulus();
  BigUint r0 = x.a0 * y.a0 + d_ * (x.a1 * y.a1);
  BigUint r1 = x.a0 * y.a1 + x.a1 * y.a0;
  mpz_mod(r0.get_mpz_t(), r0.get_mpz_t(), p.get_mpz_t());
  mpz_mod(r1.get_mpz_t(), r1.get_mpz_t(), p.get_mpz_t());
  return {std::move(r0), std::move(r1)};
}

Fp2Element Fp2Field::scale(const Element& x, const BigUint& k) const {
  return {base_.mul(x.a0, k), base_.mul(x.a1, k)};
}

Fp2Element Fp2Field::inv(const Element& x) const {
  if (is_zero(x)) throw Error(ErrorCode::kNonInvertible, "inverse of zero in Fp2");
  // 1 / (a0 + a1 i) = (a0 - a1 i) / (a0^2 - d a1^2)
  const BigUint norm = base_.sub(base_.sqr(x.a0), base_.mul(d_, base_.sqr(x.a1)));
  const BigUint norm_inv = base_.inv(norm);
  return {base_.mul(x.a0, norm_inv), base_.mul(base_.neg(x.a1), norm_inv)};
}

Fp2Element Fp2Field::pow(const Element& x, const BigUint& e) const {
  Element result = one();
  if (e == 0) return result;
  const std::size_t bits = bit_length(e);
  for (std::size_t i = bits; i-- > 0;) {
    result = sqr(result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, x);
  }
  return result;
}

Fp2Element Fp2Field::conj(const Element& x) const {
  return {x.a0, base_.neg(x.a1)};
}

Fp2Element Fp2Field::primitive_cube_root_of_unity() const {
  const BigUint& p = modulus();
  if (mod_reduce(p, 3) != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "cube roots of unity lie outside F_p only when p = 2 mod 3");
  }
  // zeta = (-1 + c i) / 2 with (c i)^2 = -3, i.e. c^2 = -3 / d.
  const BigUint c = mod_sqrt(base_.mul(base_.neg(BigUint(3)), base_.inv(d_)), p);
  const BigUint half = base_.inv(BigUint(2));
  const BigUint a0 = base_.mul(base_.neg(BigUint(1)), half);
  const BigUint a1 = base_.mul(c, half);
  const BigUint a1_alt = base_.neg(a1);
  return {a0, a1 < a1_alt ? a1 : a1_alt};
}

}  // namespace wsnsec
