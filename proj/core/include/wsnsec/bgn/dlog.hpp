// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wsnsec/ec/curve.hpp"
#include "wsnsec/error.hpp"
#include "wsnsec/numeric/fp2.hpp"

namespace wsnsec::bgn {

inline constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 24;

// Additive group of curve points, seen multiplicatively by the dlog code.
class CurveGroupOps {
 public:
  using Element = CurvePoint;
  explicit CurveGroupOps(const CurveParams& curve) : group_(curve_group(curve)) {}
  Element identity() const { return CurvePoint::infinity(); }
  Element op(const Element& a, const Element& b) const { return group_.add(a, b); }
  Element inverse(const Element& a) const { return group_.neg(a); }
  Element power(const Element& a, const BigUint& k) const { return group_.mul(k, a); }
  static std::uint64_t hash(const Element& a) {
    if (a.is_infinity()) return 0x5bd1e995ULL;
    return low_u64(a.x()) ^ (low_u64(a.y()) << 1);
  }

 private:
  Weierstrass<PrimeField> group_;
};

// Multiplicative group of F_{p^2}, where pairing values live.
class GtGroupOps {
 public:
  using Element = Fp2Element;
  explicit GtGroupOps(const Fp2Field& field) : field_(field) {}
  Element identity() const { return field_.one(); }
  Element op(const Element& a, const Element& b) const { return field_.mul(a, b); }
  Element inverse(const Element& a) const { return field_.inv(a); }
  Element power(const Element& a, const BigUint& k) const { return field_.pow(a, k); }
  static std::uint64_t hash(const Element& a) { return hash_value(a); }

 private:
  Fp2Field field_;
};

// Exact lookup base^i -> i for i in [0, max]. Construction fails with
// kTableCollision when two exponents in range map to the same element (max
// reaches the order of base) and with kTableTooLarge above `cap` entries.
template <class Group>
class DlogTable {
 public:
  using Element = typename Group::Element;

  DlogTable(const Group& group, const Element& base, std::uint64_t max,
            std::uint64_t cap = kDefaultTableCap)
      : base_(base), max_(max) {
    if (max >= cap) {
      throw Error(ErrorCode::kTableTooLarge,
                  std::to_string(max + 1) + " entries exceed the cap of " +
                      std::to_string(cap));
    }
    powers_.reserve(max + 1);
    index_.reserve(max + 1);
    Element acc = group.identity();
    for (std::uint64_t i = 0; i <= max; ++i) {
      if (lookup(acc).has_value()) {
        throw Error(ErrorCode::kTableCollision,
                    "exponent " + std::to_string(i) + " repeats an earlier entry");
      }
      index_.emplace(Group::hash(acc), i);
      powers_.push_back(acc);
      acc = group.op(acc, base);
    }
  }

  std::optional<std::uint64_t> lookup(const Element& e) const {
    const auto [first, last] = index_.equal_range(Group::hash(e));
    for (auto it = first; it != last; ++it) {
      if (powers_[it->second] == e) return it->second;
    }
    return std::nullopt;
  }

  const Element& base() const { return base_; }
  std::uint64_t max() const { return max_; }
  std::size_t size() const { return powers_.size(); }

 private:
  Element base_;
  std::uint64_t max_;
  std::vector<Element> powers_;
  std::unordered_multimap<std::uint64_t, std::uint64_t> index_;
};

using PointDlogTable = DlogTable<CurveGroupOps>;
using GtDlogTable = DlogTable<GtGroupOps>;

// Baby-step giant-step: the smallest e in [0, max] with base^e = target, in
// O(sqrt(max)) group operations.
template <class Group>
std::optional<std::uint64_t> bsgs(const Group& group, const typename Group::Element& base,
                                  const typename Group::Element& target, std::uint64_t max) {
  using Element = typename Group::Element;
  const std::uint64_t m =
      static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(max) + 1.0)));
  std::unordered_multimap<std::uint64_t, std::uint64_t> baby;
  std::vector<Element> baby_elems;
  baby_elems.reserve(m);
  Element acc = group.identity();
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(Group::hash(acc), j);
    baby_elems.push_back(acc);
    acc = group.op(acc, base);
  }
  // acc = base^m
  const Element giant = group.inverse(acc);
  Element gamma = target;
  for (std::uint64_t i = 0; i * m <= max; ++i) {
    std::optional<std::uint64_t> best;
    const auto [first, last] = baby.equal_range(Group::hash(gamma));
    for (auto it = first; it != last; ++it) {
      if (baby_elems[it->second] == gamma && (!best || it->second < *best)) best = it->second;
    }
    if (best) {
      const std::uint64_t e = i * m + *best;
      if (e <= max) return e;
      return std::nullopt;
    }
    gamma = group.op(gamma, giant);
  }
  return std::nullopt;
}

}  // namespace wsnsec::bgn
