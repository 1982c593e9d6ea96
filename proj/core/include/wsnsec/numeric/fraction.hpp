// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace wsnsec {

// Q0.62 fixed-point value in [0, 1]. The raw word counts units of 2^-62;
// raw == 2^62 is exactly one. Division truncates toward zero, so iterated
// maps are bit-exact on every platform.
class Fraction64 {
 public:
  static constexpr int kFracBits = 62;
  static constexpr std::uint64_t kOneRaw = std::uint64_t{1} << kFracBits;
  static constexpr std::uint64_t kHalfRaw = kOneRaw >> 1;
  static constexpr std::uint64_t kFracMask = kOneRaw - 1;

  constexpr Fraction64() = default;

  static Fraction64 from_raw(std::uint64_t raw);
  static Fraction64 from_double(double v);  // truncates, v in [0, 1]
  static constexpr Fraction64 zero() { return Fraction64(0); }
  static constexpr Fraction64 one() { return Fraction64(kOneRaw); }
  static constexpr Fraction64 half() { return Fraction64(kHalfRaw); }

  constexpr std::uint64_t raw() const { return raw_; }
  constexpr bool is_one() const { return raw_ == kOneRaw; }
  double to_double() const;

  friend constexpr bool operator==(Fraction64, Fraction64) = default;
  friend constexpr auto operator<=>(Fraction64, Fraction64) = default;

 private:
  constexpr explicit Fraction64(std::uint64_t raw) : raw_(raw) {}
  std::uint64_t raw_ = 0;
};

// a - b, requires a >= b.
Fraction64 frac_sub(Fraction64 a, Fraction64 b);
// a / b truncated, requires a <= b and b > 0.
Fraction64 frac_div(Fraction64 a, Fraction64 b);
// XOR of the 62 fractional bits; both operands in [0, 1).
Fraction64 frac_xor(Fraction64 a, Fraction64 b);
// floor(n * x) for x in [0, 1].
std::uint64_t frac_scale_floor(Fraction64 x, std::uint64_t n);

}  // namespace wsnsec
