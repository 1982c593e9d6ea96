// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/watermark/spread_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wsnsec/error.hpp"
#include "wsnsec/rng.hpp"

namespace wsnsec::watermark {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::vector<Vec> make_carriers(std::size_t nc, std::size_t nv, std::uint64_t key) {
  if (nc > nv) throw Error(ErrorCode::kInvalidArgument, "need Nc <= Nv");
  Rng rng = Rng::derive(key, "ss-carriers");
  std::normal_distribution<double> normal;
  std::vector<Vec> u(nc, Vec(nv));
  for (std::size_t i = 0; i < nc; ++i) {
    for (double& v : u[i]) v = normal(rng);
    for (std::size_t j = 0; j < i; ++j) {
      const double c = dot(u[i], u[j]);
      for (std::size_t t = 0; t < nv; ++t) u[i][t] -= c * u[j][t];
    }
    const double norm = std::sqrt(dot(u[i], u[i]));
    for (double& v : u[i]) v /= norm;
  }
  return u;
}

Vec project(std::span<const double> x, const std::vector<Vec>& carriers) {
  Vec out;
  out.reserve(carriers.size());
  for (const Vec& u : carriers) out.push_back(dot(x, u));
  return out;
}

Vec ss_embed(std::span<const double> host, const std::vector<bool>& bits, const SsParams& params,
             const std::vector<Vec>& carriers) {
  if (bits.size() != carriers.size()) {
    throw Error(ErrorCode::kInvalidArgument, "need one bit per carrier");
  }
  Vec y(host.begin(), host.end());
  for (std::size_t i = 0; i < carriers.size(); ++i) {
    const Vec& u = carriers[i];
    if (u.size() != host.size()) throw Error(ErrorCode::kInvalidArgument, "carrier size");
    const double sign = bits[i] ? -1.0 : 1.0;  // (-1)^m
    const double proj = dot(host, u) / dot(u, u);
    double s = 0.0;
    switch (params.modulation) {
      case Modulation::kClassical:
        s = params.gamma * sign;
        break;
      case Modulation::kIss:
        s = sign * params.alpha - params.lambda * proj;
        break;
      case Modulation::kNaturalWatermarking: {
        if (proj == 0.0) {
          throw Error(ErrorCode::kDegenerateHost, "host is orthogonal to a carrier");
        }
        const double host_sign = proj > 0 ? 1.0 : -1.0;
        s = -(1.0 + params.eta * sign * host_sign) * proj;
        break;
      }
    }
    for (std::size_t t = 0; t < y.size(); ++t) y[t] += s * u[t];
  }
  return y;
}

Vec ss_embed(std::span<const double> host, const std::vector<bool>& bits,
             const SsParams& params) {
  return ss_embed(host, bits, params, make_carriers(params.nc, params.nv, params.key));
}

std::vector<bool> ss_detect(std::span<const double> y, const SsParams& params,
                            const std::vector<Vec>& carriers) {
  std::vector<bool> bits;
  bits.reserve(carriers.size());
  const bool nw = params.modulation == Modulation::kNaturalWatermarking;
  // A zero correlation always reads as bit 0.
  for (const Vec& u : carriers) {
    const double c = dot(y, u);
    bits.push_back(nw ? c > 0.0 : c < 0.0);
  }
  return bits;
}

std::vector<bool> ss_detect(std::span<const double> y, const SsParams& params) {
  return ss_detect(y, params, make_carriers(params.nc, params.nv, params.key));
}

double kolmogorov_tail(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-16) break;
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::kInvalidArgument, "empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = std::sqrt(na * nb / (na + nb));
  KsResult r;
  r.statistic = d;
  r.p_value = kolmogorov_tail((ne + 0.12 + 0.11 / ne) * d);
  return r;
}

}  // namespace wsnsec::watermark
