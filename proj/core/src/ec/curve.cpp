// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/ec/curve.hpp"

#include "wsnsec/error.hpp"
#include "wsnsec/numeric/modular.hpp"

namespace wsnsec {

void CurveParams::validate() const {
  const BigUint disc = 4 * a * a * a + 27 * b * b;
  if (mod_reduce(disc, p) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "singular curve (4a^3 + 27b^2 = 0)");
  }
}

CurveParams supersingular_curve(const BigUint& p) {
  return CurveParams{p, BigUint(0), BigUint(1)};
}

Weierstrass<PrimeField> curve_group(const CurveParams& curve) {
  PrimeField f(curve.p);
  return Weierstrass<PrimeField>(f, f.from(curve.a), f.from(curve.b));
}

Weierstrass<Fp2Field> curve_group_fp2(const CurveParams& curve) {
  Fp2Field f(curve.p);
  Fp2Element a = f.lift(curve.a);
  Fp2Element b = f.lift(curve.b);
  return Weierstrass<Fp2Field>(std::move(f), std::move(a), std::move(b));
}

CurvePoint make_point(const BigUint& x, const BigUint& y, const CurveParams& curve) {
  if (x < 0 || y < 0 || x >= curve.p || y >= curve.p) {
    throw Error(ErrorCode::kInvalidPoint, "coordinate not reduced mod p");
  }
  CurvePoint pt = CurvePoint::unchecked(x, y);
  if (!curve_group(curve).on_curve(pt)) {
    throw Error(ErrorCode::kInvalidPoint,
                "(" + to_dec(x) + ", " + to_dec(y) + ") is not on the curve");
  }
  return pt;
}

bool on_curve(const CurvePoint& p, const CurveParams& curve) {
  return curve_group(curve).on_curve(p);
}

CurvePoint point_add(const CurvePoint& p, const CurvePoint& q, const CurveParams& curve) {
  return curve_group(curve).add(p, q);
}

CurvePoint point_neg(const CurvePoint& p, const CurveParams& curve) {
  return curve_group(curve).neg(p);
}

CurvePoint scalar_mul(const BigUint& k, const CurvePoint& p, const CurveParams& curve) {
  return curve_group(curve).mul(k, p);
}

CompressedPoint compress_point(const CurvePoint& p) {
  if (p.is_infinity()) {
    throw Error(ErrorCode::kCannotCompressInfinity, "point at infinity");
  }
  return CompressedPoint{p.x(), mpz_odd_p(p.y().get_mpz_t()) ? 1 : 0};
}

CurvePoint decompress_point(const CompressedPoint& c, const CurveParams& curve) {
  if (mod_reduce(curve.p, 4) != 3) {
    throw Error(ErrorCode::kInvalidArgument, "decompression needs p = 3 mod 4");
  }
  if (c.x < 0 || c.x >= curve.p || (c.parity != 0 && c.parity != 1)) {
    throw Error(ErrorCode::kInvalidCompressedPoint, "field out of range");
  }
  const BigUint z = curve_group(curve).rhs(c.x);
  BigUint y;
  try {
    y = mod_sqrt_3mod4(z, curve.p);
  } catch (const Error&) {
    throw Error(ErrorCode::kInvalidCompressedPoint,
                "x = " + to_hex(c.x) + " has no point on the curve");
  }
  const int parity = mpz_odd_p(y.get_mpz_t()) ? 1 : 0;
  if (parity != c.parity) {
    // y = 0 admits a single parity.
    if (y == 0) {
      throw Error(ErrorCode::kInvalidCompressedPoint, "parity has no matching root");
    }
    y = curve.p - y;
  }
  return CurvePoint::unchecked(c.x, y);
}

std::string point_to_hex(const CurvePoint& p) {
  if (p.is_infinity()) return "inf";
  const CompressedPoint c = compress_point(p);
  return to_hex(c.x) + ":" + (c.parity ? "1" : "0");
}

CurvePoint point_from_hex(std::string_view text, const CurveParams& curve) {
  if (text == "inf") return CurvePoint::infinity();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || colon + 2 != text.size() ||
      (text.back() != '0' && text.back() != '1')) {
    throw Error(ErrorCode::kMalformedInput,
                "expected <hex>:<parity>, got '" + std::string(text) + "'");
  }
  CompressedPoint c{from_hex(text.substr(0, colon)), text.back() == '1' ? 1 : 0};
  return decompress_point(c, curve);
}

CurvePoint random_point(const CurveParams& curve, Rng& rng) {
  const auto group = curve_group(curve);
  for (;;) {
    const BigUint x = rng.below(curve.p);
    const BigUint z = group.rhs(x);
    if (legendre(z, curve.p) < 0) continue;
    BigUint y = mod_sqrt(z, curve.p);
    if (rng.below(2) == 1) y = group.field().neg(y);
    return CurvePoint::unchecked(x, y);
  }
}

std::vector<CurvePoint> enumerate_points(const CurveParams& curve) {
  const auto group = curve_group(curve);
  std::vector<CurvePoint> out{CurvePoint::infinity()};
  for (BigUint x = 0; x < curve.p; ++x) {
    const BigUint z = group.rhs(x);
    const int l = legendre(z, curve.p);
    if (l < 0) continue;
    const BigUint y = mod_sqrt(z, curve.p);
    out.push_back(CurvePoint::unchecked(x, y));
    if (l > 0) out.push_back(CurvePoint::unchecked(x, curve.p - y));
  }
  return out;
}

Fp2Point lift(const CurvePoint& p, const Fp2Field& field) {
  if (p.is_infinity()) return Fp2Point::infinity();
  return Fp2Point::unchecked(field.lift(p.x()), field.lift(p.y()));
}

}  // namespace wsnsec
