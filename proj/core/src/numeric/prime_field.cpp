// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/numeric/prime_field.hpp"

#include "wsnsec/numeric/modular.hpp"

namespace wsnsec {

BigUint PrimeField::add(const BigUint& a, const BigUint& b) const {
  BigUint r = a + b;
  if (r >= p_) r -= p_;
  return r;
}

BigUint PrimeField::sub(const BigUint& a, const BigUint& b) const {
  BigUint r = a - b;
  if (r < 0) r += p_;
  return r;
}

BigUint PrimeField::neg(const BigUint& a) const {
  if (a == 0) return a;
  return p_ - a;
}

BigUint PrimeField::mul(const BigUint& a, const BigUint& b) const {
  BigUint r = a * b;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
  return r;
}

BigUint PrimeField::inv(const BigUint& a) const { return mod_inv(a, p_); }

BigUint PrimeField::pow(const BigUint& a, const BigUint& e) const {
  BigUint r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
  return r;
}

}  // namespace wsnsec
