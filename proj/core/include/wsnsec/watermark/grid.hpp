// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wsnsec/rng.hpp"

namespace wsnsec::watermark {

// One 8-bit reading per node, row-major. Bit index k addresses bit
// 7 - (k mod 8) of byte k / 8, so k = 0 is the MSB of the first node.
struct SensorGrid {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> values;

  SensorGrid() = default;
  SensorGrid(std::size_t w, std::size_t h, std::uint8_t fill = 0)
      : width(w), height(h), values(w * h, fill) {}

  std::uint8_t& at(std::size_t x, std::size_t y) { return values[y * width + x]; }
  std::uint8_t at(std::size_t x, std::size_t y) const { return values[y * width + x]; }
  std::size_t bit_count() const { return values.size() * 8; }
  bool bit(std::size_t k) const { return (values[k / 8] >> (7 - k % 8)) & 1u; }
  void set_bit(std::size_t k, bool v);

  friend bool operator==(const SensorGrid&, const SensorGrid&) = default;
};

SensorGrid random_grid(std::size_t w, std::size_t h, Rng& rng);

// P2 or P5 with maxval 255. kMalformedPgm otherwise.
SensorGrid load_pgm(const std::string& bytes);
// Binary P5.
std::string save_pgm(const SensorGrid& g);
std::string save_pgm_ascii(const SensorGrid& g);

// u^k = 8 - (k mod 8).
inline int significance(std::size_t k) { return 8 - static_cast<int>(k % 8); }

struct SignificanceSplit {
  std::vector<std::size_t> msc;      // u^k >= M
  std::vector<std::size_t> lsc;      // u^k <= m
  std::vector<std::size_t> passive;  // m < u^k < M
};

inline constexpr double kDefaultMsc = 5.0;
inline constexpr double kDefaultLsc = 4.0;

// kOverlappingThresholds when m >= M.
SignificanceSplit significance_split(const SensorGrid& g, double M = kDefaultMsc,
                                     double m = kDefaultLsc);

// LSC nibble of each node scaled by 17 for display.
SensorGrid lsc_view(const SensorGrid& g);
SensorGrid msc_view(const SensorGrid& g);

}  // namespace wsnsec::watermark
