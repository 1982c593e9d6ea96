// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/watermark/chaotic.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "wsnsec/error.hpp"

namespace wsnsec::watermark {

Fraction64 plcm_step(Fraction64 x, Fraction64 p) {
  const Fraction64 half = Fraction64::half();
  if (x > half) x = frac_sub(Fraction64::one(), x);
  if (x <= p) return frac_div(x, p);
  return frac_div(frac_sub(x, p), frac_sub(half, p));
}

std::vector<std::size_t> ciis_strategy(Fraction64 key, Fraction64 seed, Fraction64 p,
                                       std::size_t iterations, std::size_t positions) {
  if (positions == 0) throw Error(ErrorCode::kInvalidArgument, "strategy needs N >= 1");
  std::vector<std::size_t> s;
  s.reserve(iterations);
  Fraction64 k = frac_xor(seed, key);
  for (std::size_t n = 0; n < iterations; ++n) {
    s.push_back(std::min<std::size_t>(frac_scale_floor(k, positions) + 1, positions));
    k = plcm_step(k, p);
  }
  return s;
}

BoolVec vectorial_negation(const BoolVec& x) {
  BoolVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = !x[i];
  return out;
}

BoolVec ci_iterate(BoolVec x, const std::vector<std::size_t>& strategy, std::size_t steps,
                   const UpdateFn& f) {
  if (steps > strategy.size()) throw Error(ErrorCode::kInvalidArgument, "strategy too short");
  for (std::size_t n = 0; n < steps; ++n) {
    const std::size_t i = strategy[n];
    if (i < 1 || i > x.size()) throw Error(ErrorCode::kInvalidArgument, "strategy out of range");
    const BoolVec fx = f(x);
    x[i - 1] = fx[i - 1];
  }
  return x;
}

std::string to_string(Mode m) { return m == Mode::kAuthentication ? "auth" : "robust"; }

Mode parse_mode(const std::string& s) {
  if (s == "auth") return Mode::kAuthentication;
  if (s == "robust") return Mode::kUnauthentication;
  throw Error(ErrorCode::kInvalidArgument, "mode must be auth or robust");
}

WatermarkKey derive_key(std::uint64_t key) {
  Rng rng = Rng::derive(key, "watermark-key");
  WatermarkKey out;
  out.k = Fraction64::from_raw(rng.next_u64() & Fraction64::kFracMask);
  out.p = Fraction64::from_raw(1 + rng.below(Fraction64::kHalfRaw - 1));
  out.rest = Fraction64::from_raw(rng.next_u64() & Fraction64::kFracMask);
  return out;
}

Fraction64 derive_mode_seed(const SensorGrid& g, const SignificanceSplit& split,
                            const WatermarkConfig& cfg) {
  if (cfg.mode == Mode::kUnauthentication) return cfg.key.rest;
  std::uint64_t acc = 0;
  std::uint64_t block = 0;
  int filled = 0;
  for (std::size_t k : split.msc) {
    block = (block << 1) | (g.bit(k) ? 1u : 0u);
    if (++filled == Fraction64::kFracBits) {
      acc ^= block;
      block = 0;
      filled = 0;
    }
  }
  if (filled) acc ^= block << (Fraction64::kFracBits - filled);
  return Fraction64::from_raw(acc);
}

std::vector<bool> default_watermark(std::uint64_t key) {
  Rng rng = Rng::derive(key, "watermark-bits");
  const std::uint64_t w = rng.next_u64();
  std::vector<bool> out(64);
  for (int i = 0; i < 64; ++i) out[i] = (w >> (63 - i)) & 1u;
  return out;
}

std::vector<bool> parse_watermark(const std::string& text) {
  std::vector<bool> out;
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(c == '1');
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::kMalformedInput, "watermark files hold only '0' and '1'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::kMalformedInput, "empty watermark");
  return out;
}

std::string format_watermark(const std::vector<bool>& bits) {
  std::string s;
  for (bool b : bits) s += b ? '1' : '0';
  return s;
}

namespace {

std::vector<std::size_t> strategy_for(const SensorGrid& g, const SignificanceSplit& split,
                                      const WatermarkConfig& cfg) {
  const std::size_t n = split.lsc.size();
  const std::size_t iters = cfg.iterations ? cfg.iterations : n;
  return ciis_strategy(cfg.key.k, derive_mode_seed(g, split, cfg), cfg.key.p, iters, n);
}

}  // namespace

SensorGrid embed_watermark(const SensorGrid& g, const WatermarkConfig& cfg,
                           const std::vector<bool>& watermark) {
  if (watermark.empty()) throw Error(ErrorCode::kInvalidArgument, "empty watermark");
  const SignificanceSplit split = significance_split(g, cfg.msc_threshold, cfg.lsc_threshold);
  if (split.lsc.empty()) throw Error(ErrorCode::kInvalidArgument, "no LSCs to embed into");
  const auto strategy = strategy_for(g, split, cfg);
  SensorGrid out = g;
  for (std::size_t n = 0; n < strategy.size(); ++n) {
    out.set_bit(split.lsc[strategy[n] - 1], watermark[n % watermark.size()]);
  }
  return out;
}

double Similarity::percent() const {
  return visited ? 100.0 * static_cast<double>(matches) / static_cast<double>(visited) : 0.0;
}

std::string Similarity::str() const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", percent());
  return buf;
}

Similarity extract_similarity(const SensorGrid& g, const WatermarkConfig& cfg,
                              const std::vector<bool>& watermark) {
  if (watermark.empty()) throw Error(ErrorCode::kInvalidArgument, "empty watermark");
  const SignificanceSplit split = significance_split(g, cfg.msc_threshold, cfg.lsc_threshold);
  if (split.lsc.empty()) return {};
  const auto strategy = strategy_for(g, split, cfg);
  std::vector<std::int8_t> expected(split.lsc.size(), -1);
  for (std::size_t n = 0; n < strategy.size(); ++n) {
    expected[strategy[n] - 1] = watermark[n % watermark.size()] ? 1 : 0;
  }
  Similarity s;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i] < 0) continue;
    ++s.visited;
    if (g.bit(split.lsc[i]) == (expected[i] == 1)) ++s.matches;
  }
  return s;
}

}  // namespace wsnsec::watermark
