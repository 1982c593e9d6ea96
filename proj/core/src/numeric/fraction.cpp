// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/numeric/fraction.hpp"

#include <cmath>

#include "wsnsec/error.hpp"

namespace wsnsec {

using u128 = unsigned __int128;

Fraction64 Fraction64::from_raw(std::uint64_t raw) {
  if (raw > kOneRaw) throw Error(ErrorCode::kInvalidArgument, "fraction above one");
  return Fraction64(raw);
}

Fraction64 Fraction64::from_double(double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "fraction outside [0, 1]");
  }
  return Fraction64(static_cast<std::uint64_t>(std::ldexp(v, kFracBits)));
}

double Fraction64::to_double() const {
  return std::ldexp(static_cast<double>(raw_), -kFracBits);
}

Fraction64 frac_sub(Fraction64 a, Fraction64 b) {
  if (a < b) throw Error(ErrorCode::kInvalidArgument, "negative fraction");
  return Fraction64::from_raw(a.raw() - b.raw());
}

Fraction64 frac_div(Fraction64 a, Fraction64 b) {
  if (b.raw() == 0 || a > b) {
    throw Error(ErrorCode::kInvalidArgument, "quotient outside [0, 1]");
  }
  const u128 num = static_cast<u128>(a.raw()) << Fraction64::kFracBits;
  return Fraction64::from_raw(static_cast<std::uint64_t>(num / b.raw()));
}

Fraction64 frac_xor(Fraction64 a, Fraction64 b) {
  if (a.is_one() || b.is_one()) {
    throw Error(ErrorCode::kInvalidArgument, "xor operands must be below one");
  }
  return Fraction64::from_raw(a.raw() ^ b.raw());
}

std::uint64_t frac_scale_floor(Fraction64 x, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<u128>(x.raw()) * n) >>
                                    Fraction64::kFracBits);
}

}  // namespace wsnsec
