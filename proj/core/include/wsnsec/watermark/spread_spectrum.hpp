// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wsnsec::watermark {

enum class Modulation { kClassical, kIss, kNaturalWatermarking };

struct SsParams {
  Modulation modulation = Modulation::kClassical;
  std::size_t nc = 32;    // carriers (payload bits)
  std::size_t nv = 1024;  // host samples
  double gamma = 1.0;     // classical
  double alpha = 1.0;     // ISS
  double lambda = 0.0;    // ISS
  double eta = 1.0;       // NW
  std::uint64_t key = 0;
};

using Vec = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);

// Gaussian vectors from the key, orthonormalized by modified Gram-Schmidt.
// kInvalidArgument when nc > nv.
std::vector<Vec> make_carriers(std::size_t nc, std::size_t nv, std::uint64_t key);

// y = x + sum_i s_i u_i with the per-modulation s_i. kDegenerateHost for NW
// when some <x, u_i> is zero.
Vec ss_embed(std::span<const double> host, const std::vector<bool>& bits, const SsParams& params,
             const std::vector<Vec>& carriers);
Vec ss_embed(std::span<const double> host, const std::vector<bool>& bits, const SsParams& params);

// Classical and ISS: bit 0 iff <y, u_i> > 0. NW: bit 1 iff <y, u_i> > 0.
std::vector<bool> ss_detect(std::span<const double> y, const SsParams& params,
                            const std::vector<Vec>& carriers);
std::vector<bool> ss_detect(std::span<const double> y, const SsParams& params);

// <x, u_i> for every carrier.
Vec project(std::span<const double> x, const std::vector<Vec>& carriers);

struct KsResult {
  double statistic = 0.0;  // sup |F1 - F2|
  double p_value = 1.0;    // asymptotic Kolmogorov tail
  bool rejects(double alpha) const { return p_value < alpha; }
};

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// P(K > lambda) for the Kolmogorov distribution.
double kolmogorov_tail(double lambda);

}  // namespace wsnsec::watermark
