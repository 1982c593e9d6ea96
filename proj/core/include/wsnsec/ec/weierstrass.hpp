// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "wsnsec/numeric/biguint.hpp"

namespace wsnsec {

// Affine point or the point at infinity.
template <class Elem>
class AffinePoint {
 public:
  AffinePoint() = default;

  static AffinePoint infinity() { return AffinePoint(); }
  // No curve-membership check; see make_point() for the checked form.
  static AffinePoint unchecked(Elem x, Elem y) {
    AffinePoint p;
    p.infinity_ = false;
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    return p;
  }

  bool is_infinity() const { return infinity_; }
  const Elem& x() const { return x_; }
  const Elem& y() const { return y_; }

  friend bool operator==(const AffinePoint& a, const AffinePoint& b) {
    if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  bool infinity_ = true;
  Elem x_{};
  Elem y_{};
};

// Group law on y^2 = x^3 + a x + b over `Field`, affine coordinates.
template <class Field>
class Weierstrass {
 public:
  using Elem = typename Field::Element;
  using Point = AffinePoint<Elem>;

  Weierstrass(Field field, Elem a, Elem b)
      : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {}

  const Field& field() const { return field_; }
  const Elem& a() const { return a_; }
  const Elem& b() const { return b_; }

  Elem rhs(const Elem& x) const {
    const Field& f = field_;
    return f.add(f.add(f.mul(f.sqr(x), x), f.mul(a_, x)), b_);
  }

  bool on_curve(const Point& p) const {
    if (p.is_infinity()) return true;
    return field_.equal(field_.sqr(p.y()), rhs(p.x()));
  }

  Point neg(const Point& p) const {
    if (p.is_infinity()) return p;
    return Point::unchecked(p.x(), field_.neg(p.y()));
  }

  // Chord slope for P != Q, tangent slope for P == Q. Caller guarantees the
  // sum is finite.
  Elem slope(const Point& p, const Point& q) const {
    const Field& f = field_;
    if (f.equal(p.x(), q.x())) {
      const Elem three_x2 = f.add(f.add(f.sqr(p.x()), f.sqr(p.x())), f.sqr(p.x()));
      return f.mul(f.add(three_x2, a_), f.inv(f.add(p.y(), p.y())));
    }
    return f.mul(f.sub(q.y(), p.y()), f.inv(f.sub(q.x(), p.x())));
  }

  // True when P + Q = O for finite P, Q.
  bool sums_to_infinity(const Point& p, const Point& q) const {
    return field_.equal(p.x(), q.x()) &&
           field_.equal(p.y(), field_.neg(q.y()));
  }

  Point add_with_slope(const Point& p, const Point& q, const Elem& lambda) const {
    const Field& f = field_;
    Elem x3 = f.sub(f.sub(f.sqr(lambda), p.x()), q.x());
    Elem y3 = f.sub(f.mul(lambda, f.sub(p.x(), x3)), p.y());
    return Point::unchecked(std::move(x3), std::move(y3));
  }

  Point add(const Point& p, const Point& q) const {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    if (sums_to_infinity(p, q)) return Point::infinity();
    if (field_.equal(p.x(), q.x()) && !field_.equal(p.y(), q.y())) {
      return Point::infinity();
    }
    return add_with_slope(p, q, slope(p, q));
  }

  Point dbl(const Point& p) const { return add(p, p); }

  // Left-to-right double-and-add.
  Point mul(const BigUint& k, const Point& p) const {
    if (k < 0) return mul(BigUint(-k), neg(p));
    Point acc = Point::infinity();
    const std::size_t bits = bit_length(k);
    for (std::size_t i = bits; i-- > 0;) {
      acc = dbl(acc);
      if (mpz_tstbit(k.get_mpz_t(), i)) acc = add(acc, p);
    }
    return acc;
  }

 private:
  Field field_;
  Elem a_;
  Elem b_;
};

}  // namespace wsnsec
