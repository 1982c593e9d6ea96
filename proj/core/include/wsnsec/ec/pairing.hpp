// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "wsnsec/ec/curve.hpp"
#include "wsnsec/numeric/fp2.hpp"

namespace wsnsec {

// Weil pairing e_n on E(F_p^2)[n] by Miller's algorithm, evaluated through a
// shifted divisor (Q + S) - (S). Degenerate evaluations (a line vanishing
// at an evaluation point) are retried with a new auxiliary point S, up to
// kMaxAttempts times, after which kPairingDegenerate is thrown. The value
// does not depend on S, so results are deterministic.
class WeilPairing {
 public:
  static constexpr int kMaxAttempts = 8;

  WeilPairing(const CurveParams& curve, BigUint order);

  const CurveParams& curve() const { return curve_; }
  const BigUint& order() const { return order_; }
  const Fp2Field& field() const { return fp2_; }
  // Primitive cube root of unity used by the distortion map (y^2 = x^3 + 1).
  const Fp2Element& zeta() const { return zeta_; }

  Fp2Element weil(const Fp2Point& p, const Fp2Point& q) const;
  Fp2Element weil(const CurvePoint& p, const CurvePoint& q) const;

  // (x, y) -> (zeta x, y)
  Fp2Point distort(const CurvePoint& p) const;

  // e(P, Q) = weil(distort(P), Q). Non-degenerate on the order-n subgroup of
  // the supersingular curve.
  Fp2Element modified(const CurvePoint& p, const CurvePoint& q) const;

 private:
  CurveParams curve_;
  BigUint order_;
  Fp2Field fp2_;
  Weierstrass<Fp2Field> group_;
  Fp2Element zeta_;
};

Fp2Element weil_pairing(const CurvePoint& p, const CurvePoint& q,
                        const BigUint& order, const CurveParams& curve);
Fp2Element modified_weil(const CurvePoint& p, const CurvePoint& q,
                         const BigUint& order, const CurveParams& curve);

}  // namespace wsnsec
