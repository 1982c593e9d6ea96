// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>

#include "wsnsec/numeric/biguint.hpp"
#include "wsnsec/numeric/prime_field.hpp"

namespace wsnsec {

// a0 + a1*i with i^2 = d, both components reduced mod p.
struct Fp2Element {
  BigUint a0;
  BigUint a1;

  friend bool operator==(const Fp2Element& x, const Fp2Element& y) {
    return x.a0 == y.a0 && x.a1 == y.a1;
  }
  // Lexicographic on (a0, a1).
  friend bool operator<(const Fp2Element& x, const Fp2Element& y) {
    if (x.a0 != y.a0) return x.a0 < y.a0;
    return x.a1 < y.a1;
  }
};

std::uint64_t hash_value(const Fp2Element& x);

// F_p[i]/(i^2 - d), d the smallest positive quadratic non-residue mod p.
class Fp2Field {
 public:
  using Element = Fp2Element;

  explicit Fp2Field(const BigUint& p);

  const PrimeField& base() const { return base_; }
  const BigUint& modulus() const { return base_.modulus(); }
  const BigUint& nonresidue() const { return d_; }

  Element zero() const { return {BigUint(0), BigUint(0)}; }
  Element one() const { return {BigUint(1), BigUint(0)}; }
  Element lift(const BigUint& a) const { return {base_.from(a), BigUint(0)}; }

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element mul(const Element& x, const Element& y) const;
  Element sqr(const Element& x) const { return mul(x, x); }
  Element scale(const Element& x, const BigUint& k) const;
  Element inv(const Element& x) const;  // kNonInvertible on zero
  Element pow(const Element& x, const BigUint& e) const;
  Element conj(const Element& x) const;

  bool is_zero(const Element& x) const { return x.a0 == 0 && x.a1 == 0; }
  bool equal(const Element& x, const Element& y) const { return x == y; }
  bool in_base_field(const Element& x) const { return x.a1 == 0; }

  // The lexicographically smallest zeta with zeta^2 + zeta + 1 = 0 that is
  // not in F_p. Requires p = 2 mod 3.
  Element primitive_cube_root_of_unity() const;

 private:
  PrimeField base_;
  BigUint d_;
};

}  // namespace wsnsec
