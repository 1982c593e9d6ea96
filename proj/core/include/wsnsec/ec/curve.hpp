// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wsnsec/ec/weierstrass.hpp"
#include "wsnsec/numeric/biguint.hpp"
#include "wsnsec/numeric/fp2.hpp"
#include "wsnsec/numeric/prime_field.hpp"
#include "wsnsec/rng.hpp"

namespace wsnsec {

// y^2 = x^3 + a x + b over F_p.
struct CurveParams {
  BigUint p;
  BigUint a;
  BigUint b;

  // Throws kInvalidArgument when 4a^3 + 27b^2 = 0 mod p.
  void validate() const;

  friend bool operator==(const CurveParams&, const CurveParams&) = default;
};

// The cryptosystem's curve y^2 = x^3 + 1.
CurveParams supersingular_curve(const BigUint& p);

using CurvePoint = AffinePoint<BigUint>;
using Fp2Point = AffinePoint<Fp2Element>;

struct CompressedPoint {
  BigUint x;
  int parity = 0;

  friend bool operator==(const CompressedPoint&, const CompressedPoint&) = default;
};

Weierstrass<PrimeField> curve_group(const CurveParams& curve);
Weierstrass<Fp2Field> curve_group_fp2(const CurveParams& curve);

// Checked construction: kInvalidPoint when (x, y) is off the curve.
CurvePoint make_point(const BigUint& x, const BigUint& y, const CurveParams& curve);
bool on_curve(const CurvePoint& p, const CurveParams& curve);

CurvePoint point_add(const CurvePoint& p, const CurvePoint& q, const CurveParams& curve);
CurvePoint point_neg(const CurvePoint& p, const CurveParams& curve);
CurvePoint scalar_mul(const BigUint& k, const CurvePoint& p, const CurveParams& curve);

// (x, y mod 2). kCannotCompressInfinity for O.
CompressedPoint compress_point(const CurvePoint& p);
// Needs p = 3 mod 4; kInvalidCompressedPoint when x^3 + ax + b is not a square.
CurvePoint decompress_point(const CompressedPoint& c, const CurveParams& curve);

// Wire text: lowercase hex x, ':', parity bit; "inf" for the identity.
std::string point_to_hex(const CurvePoint& p);
CurvePoint point_from_hex(std::string_view text, const CurveParams& curve);

// Uniformly sampled finite point (rejection on x).
CurvePoint random_point(const CurveParams& curve, Rng& rng);

// Every point of E(F_p) by exhaustive scan. Only for small p.
std::vector<CurvePoint> enumerate_points(const CurveParams& curve);

Fp2Point lift(const CurvePoint& p, const Fp2Field& field);

}  // namespace wsnsec
