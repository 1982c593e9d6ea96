// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/watermark/attacks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "wsnsec/error.hpp"

namespace wsnsec::watermark {

namespace {

std::uint8_t to_byte(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

SensorGrid rotate_once(const SensorGrid& g, double radians) {
  SensorGrid out(g.width, g.height);
  const double cx = static_cast<double>(g.width) / 2.0;
  const double cy = static_cast<double>(g.height) / 2.0;
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  const double max_x = static_cast<double>(g.width - 1);
  const double max_y = static_cast<double>(g.height - 1);
  for (std::size_t y = 0; y < g.height; ++y) {
    for (std::size_t x = 0; x < g.width; ++x) {
      // Inverse mapping: the source of output (x, y) is R(-theta) applied to it.
      const double dx = static_cast<double>(x) - cx;
      const double dy = static_cast<double>(y) - cy;
      const double sx = std::clamp(c * dx + s * dy + cx, 0.0, max_x);
      const double sy = std::clamp(-s * dx + c * dy + cy, 0.0, max_y);
      const auto x0 = static_cast<std::size_t>(std::floor(sx));
      const auto y0 = static_cast<std::size_t>(std::floor(sy));
      const std::size_t x1 = std::min(x0 + 1, g.width - 1);
      const std::size_t y1 = std::min(y0 + 1, g.height - 1);
      const double fx = sx - static_cast<double>(x0);
      const double fy = sy - static_cast<double>(y0);
      const double top = (1 - fx) * g.at(x0, y0) + fx * g.at(x1, y0);
      const double bottom = (1 - fx) * g.at(x0, y1) + fx * g.at(x1, y1);
      out.at(x, y) = to_byte((1 - fy) * top + fy * bottom);
    }
  }
  return out;
}

constexpr std::array<int, 64> kLuminance = {
    16, 11, 10, 16, 24,  40,  51,  61,  12, 12, 14, 19, 26,  58,  60,  55,
    14, 13, 16, 24, 40,  57,  69,  56,  14, 17, 22, 29, 51,  87,  80,  62,
    18, 22, 37, 56, 68,  109, 103, 77,  24, 35, 55, 64, 81,  104, 113, 92,
    49, 64, 78, 87, 103, 121, 120, 101, 72, 92, 95, 98, 112, 100, 103, 99};

// Orthonormal DCT-II basis: kBasis[u][x].
const std::array<std::array<double, 8>, 8>& dct_basis() {
  static const auto basis = [] {
    std::array<std::array<double, 8>, 8> b{};
    for (int u = 0; u < 8; ++u) {
      const double a = u == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
      for (int x = 0; x < 8; ++x) {
        b[u][x] = a * std::cos((2 * x + 1) * u * std::numbers::pi / 16.0);
      }
    }
    return b;
  }();
  return basis;
}

}  // namespace

SensorGrid attack_zeroing(const SensorGrid& g, std::size_t s) {
  SensorGrid out = g;
  auto span = [s](std::size_t n) {
    const std::size_t len = std::min(s, n);
    const std::size_t start = n / 2 >= len / 2 ? n / 2 - len / 2 : 0;
    return std::pair{start, std::min(start + len, n)};
  };
  const auto [x0, x1] = span(g.width);
  const auto [y0, y1] = span(g.height);
  for (std::size_t y = y0; y < y1; ++y) {
    for (std::size_t x = x0; x < x1; ++x) out.at(x, y) = 0;
  }
  return out;
}

SensorGrid attack_rotation(const SensorGrid& g, double theta_degrees) {
  if (theta_degrees == 0.0 || g.values.empty()) return g;
  const double r = theta_degrees * std::numbers::pi / 180.0;
  return rotate_once(rotate_once(g, r), -r);
}

SensorGrid attack_gaussian(const SensorGrid& g, double sigma, std::uint64_t seed) {
  if (sigma < 0) throw Error(ErrorCode::kInvalidArgument, "sigma must be >= 0");
  if (sigma == 0.0) return g;
  Rng rng = Rng::derive(seed, "noise");
  std::normal_distribution<double> noise(0.0, sigma);
  SensorGrid out = g;
  for (auto& v : out.values) v = to_byte(v + noise(rng));
  return out;
}

SensorGrid attack_jpeg(const SensorGrid& g, double level) {
  if (level < 0) throw Error(ErrorCode::kInvalidArgument, "compression level must be >= 0");
  const auto& b = dct_basis();
  SensorGrid out = g;
  std::array<double, 64> block{}, coef{}, tmp{};
  for (std::size_t by = 0; by < g.height; by += 8) {
    for (std::size_t bx = 0; bx < g.width; bx += 8) {
      // Edge blocks are padded by replicating the last row / column.
      for (std::size_t y = 0; y < 8; ++y) {
        for (std::size_t x = 0; x < 8; ++x) {
          const std::size_t sx = std::min(bx + x, g.width - 1);
          const std::size_t sy = std::min(by + y, g.height - 1);
          block[y * 8 + x] = g.at(sx, sy) - 128.0;
        }
      }
      for (int v = 0; v < 8; ++v) {
        for (int x = 0; x < 8; ++x) {
          double acc = 0;
          for (int y = 0; y < 8; ++y) acc += b[v][y] * block[y * 8 + x];
          tmp[v * 8 + x] = acc;
        }
      }
      for (int v = 0; v < 8; ++v) {
        for (int u = 0; u < 8; ++u) {
          double acc = 0;
          for (int x = 0; x < 8; ++x) acc += b[u][x] * tmp[v * 8 + x];
          coef[v * 8 + u] = acc;
        }
      }
      if (level > 0) {
        for (int i = 0; i < 64; ++i) {
          const double q = kLuminance[i] * level / 10.0;
          coef[i] = std::round(coef[i] / q) * q;
        }
      }
      for (int v = 0; v < 8; ++v) {
        for (int x = 0; x < 8; ++x) {
          double acc = 0;
          for (int u = 0; u < 8; ++u) acc += b[u][x] * coef[v * 8 + u];
          tmp[v * 8 + x] = acc;
        }
      }
      for (std::size_t y = 0; y < 8; ++y) {
        for (std::size_t x = 0; x < 8; ++x) {
          double acc = 0;
          for (int v = 0; v < 8; ++v) acc += b[v][y] * tmp[v * 8 + x];
          if (by + y < g.height && bx + x < g.width) out.at(bx + x, by + y) = to_byte(acc + 128.0);
        }
      }
    }
  }
  return out;
}

}  // namespace wsnsec::watermark
