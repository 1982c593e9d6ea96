// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "wsnsec/ec/curve.hpp"

namespace wsnsec {

// k * base for a fixed base: precomputed affine multiples j * 2^(w i) * base
// and Jacobian mixed additions, so one multiplication costs a single field
// inversion.
class FixedBaseMul {
 public:
  static constexpr unsigned kWindow = 4;

  // Scalars up to `max_bits` bits use the table; larger ones fall back to
  // the generic double-and-add.
  FixedBaseMul(const CurveParams& curve, const CurvePoint& base, std::size_t max_bits);

  CurvePoint mul(const BigUint& k) const;
  const CurvePoint& base() const { return base_; }

 private:
  CurveParams curve_;
  CurvePoint base_;
  std::size_t windows_;
  // table_[i * 15 + (j - 1)] = j * 16^i * base.
  std::vector<CurvePoint> table_;
};

}  // namespace wsnsec
