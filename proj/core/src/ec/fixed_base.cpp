// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/ec/fixed_base.hpp"

#include "wsnsec/numeric/modular.hpp"

namespace wsnsec {

namespace {

constexpr unsigned kDigits = (1u << FixedBaseMul::kWindow) - 1;

// Jacobian accumulator: (X, Y, Z) represents (X / Z^2, Y / Z^3).
struct Jacobian {
  const CurveParams& c;
  BigUint X, Y, Z;
  bool inf = true;
  BigUint t1, t2, t3, t4, t5;

  explicit Jacobian(const CurveParams& curve) : c(curve) {}

  void reduce(BigUint& v) const { mpz_mod(v.get_mpz_t(), v.get_mpz_t(), c.p.get_mpz_t()); }

  void dbl() {
    if (inf) return;
    if (Y == 0) {
      inf = true;
      return;
    }
    // S = 4 X Y^2, M = 3 X^2 + a Z^4.
    t1 = Y * Y;
    reduce(t1);
    t2 = 4 * X * t1;
    reduce(t2);
    t3 = 3 * X * X;
    if (c.a != 0) {
      t4 = Z * Z;
      reduce(t4);
      t4 = t4 * t4;
      reduce(t4);
      t3 += c.a * t4;
    }
    reduce(t3);
    Z = 2 * Y * Z;
    reduce(Z);
    X = t3 * t3 - 2 * t2;
    reduce(X);
    t1 = t1 * t1;
    reduce(t1);
    Y = t3 * (t2 - X) - 8 * t1;
    reduce(Y);
  }

  void add_affine(const CurvePoint& q) {
    if (q.is_infinity()) return;
    if (inf) {
      X = q.x();
      Y = q.y();
      Z = 1;
      inf = false;
      return;
    }
    t1 = Z * Z;
    reduce(t1);
    t2 = q.x() * t1;  // U2
    reduce(t2);
    t3 = q.y() * t1;
    reduce(t3);
    t3 = t3 * Z;  // S2
    reduce(t3);
    t4 = t2 - X;  // H
    reduce(t4);
    t5 = t3 - Y;  // r
    reduce(t5);
    if (t4 == 0) {
      if (t5 == 0) {
        dbl();
      } else {
        inf = true;
      }
      return;
    }
    t1 = t4 * t4;  // H^2
    reduce(t1);
    t2 = t1 * t4;  // H^3
    reduce(t2);
    t1 = X * t1;  // X1 H^2
    reduce(t1);
    X = t5 * t5 - t2 - 2 * t1;
    reduce(X);
    Y = t5 * (t1 - X) - Y * t2;
    reduce(Y);
    Z = Z * t4;
    reduce(Z);
  }

  CurvePoint to_affine() const {
    if (inf) return CurvePoint::infinity();
    const BigUint zi = mod_inv(Z, c.p);
    BigUint zi2 = zi * zi;
    mpz_mod(zi2.get_mpz_t(), zi2.get_mpz_t(), c.p.get_mpz_t());
    BigUint x = X * zi2;
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), c.p.get_mpz_t());
    BigUint y = Y * zi2 * zi;
    mpz_mod(y.get_mpz_t(), y.get_mpz_t(), c.p.get_mpz_t());
    return CurvePoint::unchecked(std::move(x), std::move(y));
  }
};

}  // namespace

FixedBaseMul::FixedBaseMul(const CurveParams& curve, const CurvePoint& base, std::size_t max_bits)
    : curve_(curve),
      base_(base),
      windows_((max_bits + kWindow - 1) / kWindow) {
  const auto group = curve_group(curve_);
  table_.reserve(windows_ * kDigits);
  CurvePoint b = base_;
  for (std::size_t i = 0; i < windows_; ++i) {
    CurvePoint acc = b;
    for (unsigned j = 1; j <= kDigits; ++j) {
      table_.push_back(acc);
      acc = group.add(acc, b);
    }
    b = acc;  // 16 * b
  }
}

CurvePoint FixedBaseMul::mul(const BigUint& k) const {
  if (k < 0 || bit_length(k) > windows_ * kWindow) return scalar_mul(k, base_, curve_);
  Jacobian acc(curve_);
  for (std::size_t i = 0; i < windows_; ++i) {
    const unsigned digit = static_cast<unsigned>(
        (mpz_tstbit(k.get_mpz_t(), i * kWindow) << 0) |
        (mpz_tstbit(k.get_mpz_t(), i * kWindow + 1) << 1) |
        (mpz_tstbit(k.get_mpz_t(), i * kWindow + 2) << 2) |
        (mpz_tstbit(k.get_mpz_t(), i * kWindow + 3) << 3));
    if (digit != 0) acc.add_affine(table_[i * kDigits + digit - 1]);
  }
  return acc.to_affine();
}

}  // namespace wsnsec
