// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

#include "wsnsec/watermark/grid.hpp"

namespace wsnsec::watermark {

// s x s block around the grid center set to zero (clipped at the borders).
SensorGrid attack_zeroing(const SensorGrid& g, std::size_t s);

// Rotation by theta then by -theta about (W/2, H/2), bilinear sampling with
// edge clamping; the intermediate grid is rounded to 8 bits.
SensorGrid attack_rotation(const SensorGrid& g, double theta_degrees);

// Adds N(0, sigma^2) per node, rounds, clamps to [0, 255].
SensorGrid attack_gaussian(const SensorGrid& g, double sigma, std::uint64_t seed);

// 8x8 block DCT, quantization by the standard luminance table times
// level / 10, inverse DCT, round, clamp. level 0 skips quantization.
SensorGrid attack_jpeg(const SensorGrid& g, double level);

}  // namespace wsnsec::watermark
