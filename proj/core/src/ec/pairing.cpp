// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/ec/pairing.hpp"

#include <array>
#include <optional>

#include "wsnsec/error.hpp"
#include "wsnsec/numeric/modular.hpp"

namespace wsnsec {

namespace {

using Fp2Group = Weierstrass<Fp2Field>;

// Ratio f(R1) / f(R2) kept as a fraction to avoid inversions in the loop.
struct Ratio {
  Fp2Element num;
  Fp2Element den;
};

// Thrown inside a single attempt; never escapes the pairing.
struct Degenerate {};

// Accumulates g_{T,U}(R) = line_{T,U}(R) / vertical_{T+U}(R) for the two
// evaluation points and returns T + U.
Fp2Point miller_step(const Fp2Group& group, const Fp2Point& t, const Fp2Point& u,
                     const std::array<const Fp2Point*, 2>& eval,
                     std::array<Ratio, 2>& acc) {
  const Fp2Field& f = group.field();
  if (t.is_infinity()) return u;
  if (u.is_infinity()) return t;

  if (group.sums_to_infinity(t, u)) {
    // Vertical line through T; T + U = O contributes no denominator.
    for (std::size_t k = 0; k < 2; ++k) {
      const Fp2Element line = f.sub(eval[k]->x(), t.x());
      if (f.is_zero(line)) throw Degenerate{};
      acc[k].num = f.mul(acc[k].num, line);
    }
    return Fp2Point::infinity();
  }

  const Fp2Element lambda = group.slope(t, u);
  Fp2Point v = group.add_with_slope(t, u, lambda);
  for (std::size_t k = 0; k < 2; ++k) {
    const Fp2Point& r = *eval[k];
    const Fp2Element line =
        f.sub(f.sub(r.y(), t.y()), f.mul(lambda, f.sub(r.x(), t.x())));
    const Fp2Element vertical = f.sub(r.x(), v.x());
    if (f.is_zero(line) || f.is_zero(vertical)) throw Degenerate{};
    acc[k].num = f.mul(acc[k].num, line);
    acc[k].den = f.mul(acc[k].den, vertical);
  }
  return v;
}

// f_{n,P}(R1) / f_{n,P}(R2) where div(f_{n,P}) = n(P) - n(O).
Fp2Element miller_ratio(const Fp2Group& group, const BigUint& n, const Fp2Point& p,
                        const Fp2Point& r1, const Fp2Point& r2) {
  const Fp2Field& f = group.field();
  std::array<Ratio, 2> acc{Ratio{f.one(), f.one()}, Ratio{f.one(), f.one()}};
  const std::array<const Fp2Point*, 2> eval{&r1, &r2};
  Fp2Point t = p;
  const std::size_t bits = bit_length(n);
  for (std::size_t i = bits - 1; i-- > 0;) {
    for (auto& a : acc) {
      a.num = f.sqr(a.num);
      a.den = f.sqr(a.den);
    }
    t = miller_step(group, t, t, eval, acc);
    if (mpz_tstbit(n.get_mpz_t(), i)) t = miller_step(group, t, p, eval, acc);
  }
  if (!t.is_infinity()) {
    throw Error(ErrorCode::kInvalidArgument, "point is not in the n-torsion");
  }
  // (num1 / den1) / (num2 / den2)
  const Fp2Element top = f.mul(acc[0].num, acc[1].den);
  const Fp2Element bottom = f.mul(acc[0].den, acc[1].num);
  if (f.is_zero(top) || f.is_zero(bottom)) throw Degenerate{};
  return f.mul(top, f.inv(bottom));
}

}  // namespace

WeilPairing::WeilPairing(const CurveParams& curve, BigUint order)
    : curve_(curve),
      order_(std::move(order)),
      fp2_(curve.p),
      group_(curve_group_fp2(curve)) {
  if (order_ < 2) throw Error(ErrorCode::kInvalidArgument, "pairing order below 2");
  if (mod_reduce(curve_.p, 3) == 2) zeta_ = fp2_.primitive_cube_root_of_unity();
}

Fp2Point WeilPairing::distort(const CurvePoint& p) const {
  if (p.is_infinity()) return Fp2Point::infinity();
  return Fp2Point::unchecked(fp2_.mul(zeta_, fp2_.lift(p.x())), fp2_.lift(p.y()));
}

Fp2Element WeilPairing::weil(const Fp2Point& p, const Fp2Point& q) const {
  if (p.is_infinity() || q.is_infinity() || p == q) return fp2_.one();

  // e_n(P, Q) = [f_P(Q + S) / f_P(S)] / [f_Q(P - S) / f_Q(-S)]
  const CurveParams base = curve_;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng = Rng::derive(static_cast<std::uint64_t>(attempt), "weil-offset");
    const Fp2Point s = lift(random_point(base, rng), fp2_);
    const Fp2Point neg_s = group_.neg(s);
    const Fp2Point q_plus_s = group_.add(q, s);
    const Fp2Point p_minus_s = group_.add(p, neg_s);
    if (q_plus_s.is_infinity() || p_minus_s.is_infinity()) continue;
    try {
      const Fp2Element fp = miller_ratio(group_, order_, p, q_plus_s, s);
      const Fp2Element fq = miller_ratio(group_, order_, q, p_minus_s, neg_s);
      return fp2_.mul(fp, fp2_.inv(fq));
    } catch (const Degenerate&) {
      continue;
    }
  }
  throw Error(ErrorCode::kPairingDegenerate,
              "no usable auxiliary point after " + std::to_string(kMaxAttempts) +
                  " attempts");
}

Fp2Element WeilPairing::weil(const CurvePoint& p, const CurvePoint& q) const {
  return weil(lift(p, fp2_), lift(q, fp2_));
}

Fp2Element WeilPairing::modified(const CurvePoint& p, const CurvePoint& q) const {
  if (curve_.a != 0 || curve_.b != 1 || mod_reduce(curve_.p, 3) != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "distortion map needs y^2 = x^3 + 1 with p = 2 mod 3");
  }
  return weil(distort(p), lift(q, fp2_));
}

Fp2Element weil_pairing(const CurvePoint& p, const CurvePoint& q,
                        const BigUint& order, const CurveParams& curve) {
  return WeilPairing(curve, order).weil(p, q);
}

Fp2Element modified_weil(const CurvePoint& p, const CurvePoint& q,
                         const BigUint& order, const CurveParams& curve) {
  return WeilPairing(curve, order).modified(p, q);
}

}  // namespace wsnsec
