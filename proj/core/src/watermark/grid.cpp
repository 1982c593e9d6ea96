// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/watermark/grid.hpp"

#include <cctype>
#include <charconv>

#include "wsnsec/error.hpp"

namespace wsnsec::watermark {

void SensorGrid::set_bit(std::size_t k, bool v) {
  const auto mask = static_cast<std::uint8_t>(1u << (7 - k % 8));
  if (v) {
    values[k / 8] |= mask;
  } else {
    values[k / 8] &= static_cast<std::uint8_t>(~mask);
  }
}

SensorGrid random_grid(std::size_t w, std::size_t h, Rng& rng) {
  SensorGrid g(w, h);
  for (auto& v : g.values) v = static_cast<std::uint8_t>(rng.below(256));
  return g;
}

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::kMalformedPgm, why);
}

class HeaderReader {
 public:
  explicit HeaderReader(const std::string& s) : s_(s) {}

  // Skips whitespace and '#' comments, then parses a decimal integer.
  std::size_t number() {
    skip();
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr == begin) malformed("expected a number in the header");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  // Exactly one whitespace byte ends the header of a binary file.
  void single_whitespace() {
    if (pos_ >= s_.size() || !std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      malformed("missing whitespace after maxval");
    }
    ++pos_;
  }

  std::size_t pos() const { return pos_; }

 private:
  void skip() {
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& s_;
  std::size_t pos_ = 2;
};

}  // namespace

SensorGrid load_pgm(const std::string& bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    malformed("bad magic, expected P2 or P5");
  }
  const bool binary = bytes[1] == '5';
  HeaderReader r(bytes);
  const std::size_t w = r.number();
  const std::size_t h = r.number();
  const std::size_t maxval = r.number();
  if (w == 0 || h == 0) malformed("empty raster");
  if (maxval != 255) malformed("maxval must be 255");
  SensorGrid g(w, h);
  if (binary) {
    r.single_whitespace();
    if (bytes.size() - r.pos() < w * h) malformed("truncated raster");
    for (std::size_t i = 0; i < w * h; ++i) {
      g.values[i] = static_cast<std::uint8_t>(bytes[r.pos() + i]);
    }
  } else {
    for (std::size_t i = 0; i < w * h; ++i) {
      std::size_t v = 0;
      try {
        v = r.number();
      } catch (const Error&) {
        malformed("truncated raster");
      }
      if (v > 255) malformed("sample above maxval");
      g.values[i] = static_cast<std::uint8_t>(v);
    }
  }
  return g;
}

std::string save_pgm(const SensorGrid& g) {
  std::string out = "P5\n" + std::to_string(g.width) + " " + std::to_string(g.height) + "\n255\n";
  out.append(g.values.begin(), g.values.end());
  return out;
}

std::string save_pgm_ascii(const SensorGrid& g) {
  std::string out = "P2\n" + std::to_string(g.width) + " " + std::to_string(g.height) + "\n255\n";
  for (std::size_t y = 0; y < g.height; ++y) {
    for (std::size_t x = 0; x < g.width; ++x) {
      if (x) out += ' ';
      out += std::to_string(g.at(x, y));
    }
    out += '\n';
  }
  return out;
}

SignificanceSplit significance_split(const SensorGrid& g, double M, double m) {
  if (m >= M) {
    throw Error(ErrorCode::kOverlappingThresholds, "need m < M for disjoint MSC and LSC");
  }
  SignificanceSplit s;
  const std::size_t bits = g.bit_count();
  s.msc.reserve(bits / 2);
  s.lsc.reserve(bits / 2);
  for (std::size_t k = 0; k < bits; ++k) {
    const int u = significance(k);
    if (u >= M) {
      s.msc.push_back(k);
    } else if (u <= m) {
      s.lsc.push_back(k);
    } else {
      s.passive.push_back(k);
    }
  }
  return s;
}

SensorGrid lsc_view(const SensorGrid& g) {
  SensorGrid out = g;
  for (auto& v : out.values) v = static_cast<std::uint8_t>((v & 0x0F) * 17);
  return out;
}

SensorGrid msc_view(const SensorGrid& g) {
  SensorGrid out = g;
  for (auto& v : out.values) v = static_cast<std::uint8_t>(v & 0xF0);
  return out;
}

}  // namespace wsnsec::watermark
