// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "wsnsec/numeric/biguint.hpp"

namespace wsnsec {

// Arithmetic in F_p on canonical residues. Used directly and as the `Field`
// parameter of the generic curve code.
class PrimeField {
 public:
  using Element = BigUint;

  explicit PrimeField(BigUint p) : p_(std::move(p)) {}

  const BigUint& modulus() const { return p_; }

  Element zero() const { return BigUint(0); }
  Element one() const { return BigUint(1); }
  Element from(const BigUint& v) const { return mod_reduce(v, p_); }

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element sqr(const Element& a) const { return mul(a, a); }
  Element inv(const Element& a) const;
  Element pow(const Element& a, const BigUint& e) const;

  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

 private:
  BigUint p_;
};

}  // namespace wsnsec
