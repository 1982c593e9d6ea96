// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/aggregation/pipeline.hpp"

#include "wsnsec/error.hpp"

namespace wsnsec::aggregation {

using bgn::Ciphertext;

std::string to_string(Pipeline p) {
  switch (p) {
    case Pipeline::kSum: return "sum";
    case Pipeline::kMean: return "mean";
    case Pipeline::kVariance: return "variance";
    case Pipeline::kWeightedMean: return "wmean";
  }
  return "unknown";
}

Pipeline parse_pipeline(const std::string& name) {
  if (name == "sum") return Pipeline::kSum;
  if (name == "mean") return Pipeline::kMean;
  if (name == "variance") return Pipeline::kVariance;
  if (name == "wmean") return Pipeline::kWeightedMean;
  throw Error(ErrorCode::kInvalidArgument, "unknown pipeline '" + name + "'");
}

std::optional<double> Ratio::value() const {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

Ciphertext SensorRole::report(std::uint64_t value, Rng& rng) const {
  return enc_->encrypt(value, rng);
}

Ciphertext AggregatorRole::fold(std::span<const Ciphertext> children, Rng& rng) const {
  if (children.empty()) return enc_->encrypt(0, rng);
  return enc_->hom_sum(children, rng);
}

Ciphertext AggregatorRole::encrypt(std::uint64_t value, Rng& rng) const {
  return enc_->encrypt(value, rng);
}

Ciphertext AggregatorRole::multiply(const Ciphertext& a, const Ciphertext& b, Rng& rng) const {
  return bgn::hom_mul(*ctx_, a, b, rng);
}

Sink::Sink(bgn::KeyPair keys, bool with_tables)
    : keys_(std::move(keys)),
      ctx_(std::make_shared<const bgn::PairingContext>(keys_.pub)),
      enc_(std::make_shared<const bgn::Encryptor>(keys_.pub)) {
  if (with_tables) {
    table_.emplace(bgn::make_decryption_table(keys_.pub, keys_.priv));
    product_table_.emplace(bgn::make_product_table(*ctx_, keys_.priv));
  }
}

std::uint64_t Sink::decrypt(const Ciphertext& c) const {
  return bgn::decrypt(keys_.pub, keys_.priv, c, table_ ? &*table_ : nullptr);
}

std::uint64_t Sink::decrypt_product(const Ciphertext& c) const {
  return bgn::decrypt_product(*ctx_, keys_.priv, c, product_table_ ? &*product_table_ : nullptr);
}

namespace {

void check_inputs(Pipeline p, const Topology& t, std::span<const std::uint64_t> readings,
                  std::span<const std::uint64_t> weights) {
  if (readings.size() != t.sensors.size()) {
    throw Error(ErrorCode::kInvalidArgument, "need one reading per sensor");
  }
  if (p == Pipeline::kWeightedMean && weights.size() != t.aggregators.size()) {
    throw Error(ErrorCode::kInvalidArgument, "need one weight per aggregator");
  }
}

}  // namespace

Ratio plaintext_truth(Pipeline p, const Topology& t, std::span<const std::uint64_t> readings,
                      std::span<const std::uint64_t> weights) {
  check_inputs(p, t, readings, weights);
  std::uint64_t sum = 0;
  std::uint64_t sq = 0;
  for (std::uint64_t x : readings) {
    sum += x;
    sq += x * x;
  }
  const std::uint64_t n = readings.size();
  switch (p) {
    case Pipeline::kSum: return {sum, 1};
    case Pipeline::kMean: return {sum, n};
    case Pipeline::kVariance: return {n * sq - sum * sum, n * n};
    case Pipeline::kWeightedMean: {
      std::vector<std::uint64_t> sub(t.aggregators.size(), 0);
      for (const SensorNode& s : t.sensors) sub[s.aggregator] += readings[s.id];
      Ratio r{0, 0};
      for (std::size_t j = 0; j < sub.size(); ++j) {
        r.num += weights[j] * sub[j];
        r.den += weights[j];
      }
      return r;
    }
  }
  return {};
}

PipelineResult run_pipeline(Pipeline p, const Topology& t, const Sink& sink,
                            std::span<const std::uint64_t> readings,
                            std::span<const std::uint64_t> weights, Rng& rng) {
  check_inputs(p, t, readings, weights);
  // The encryptor and pairing context are derived from the public key only.
  const SensorRole sensor(sink.encryptor());
  const AggregatorRole aggregator(sink.encryptor(), sink.pairing());
  const bool squares = p == Pipeline::kVariance;
  const bool counts = p == Pipeline::kMean || p == Pipeline::kVariance;
  const bool weighted = p == Pipeline::kWeightedMean;

  PipelineResult result;
  result.pipeline = p;
  result.truth = plaintext_truth(p, t, readings, weights);
  OpCounts& ops = result.ops;

  // Sensors.
  std::vector<Ciphertext> cx;
  std::vector<Ciphertext> cy;
  cx.reserve(readings.size());
  for (std::uint64_t x : readings) {
    cx.push_back(sensor.report(x, rng));
    ++ops.encryptions;
    ++ops.messages;
    if (squares) {
      cy.push_back(sensor.report(x * x, rng));
      ++ops.encryptions;
      ++ops.messages;
    }
  }

  // Aggregators.
  std::vector<Ciphertext> up_x, up_y, up_k, up_w, up_prod;
  std::vector<Ciphertext> bucket_x, bucket_y;
  for (const auto& kids : t.children()) {
    bucket_x.clear();
    bucket_y.clear();
    for (std::uint32_t id : kids) {
      bucket_x.push_back(cx[id]);
      if (squares) bucket_y.push_back(cy[id]);
    }
    auto fold = [&](const std::vector<Ciphertext>& in) {
      if (in.empty()) {
        ++ops.encryptions;
      } else {
        ops.additions += in.size();
      }
      return aggregator.fold(in, rng);
    };
    Ciphertext sub = fold(bucket_x);
    if (squares) {
      up_y.push_back(fold(bucket_y));
      ++ops.messages;
    }
    if (counts) {
      up_k.push_back(aggregator.encrypt(kids.size(), rng));
      ++ops.encryptions;
      ++ops.messages;
    }
    if (weighted) {
      const std::size_t j = up_w.size();
      Ciphertext w = aggregator.encrypt(weights[j], rng);
      ++ops.encryptions;
      up_prod.push_back(aggregator.multiply(sub, w, rng));
      ++ops.multiplications;
      up_w.push_back(std::move(w));
      ops.messages += 2;
    } else {
      up_x.push_back(std::move(sub));
      ++ops.messages;
    }
  }

  // Sink.
  auto open_sum = [&](const std::vector<Ciphertext>& in) {
    ops.additions += in.size();
    ++ops.decryptions;
    return sink.decrypt(sink.encryptor()->hom_sum(in, rng));
  };
  switch (p) {
    case Pipeline::kSum:
      result.decrypted = {open_sum(up_x), 1};
      break;
    case Pipeline::kMean:
      result.decrypted.num = open_sum(up_x);
      result.decrypted.den = open_sum(up_k);
      break;
    case Pipeline::kVariance: {
      const std::uint64_t sx = open_sum(up_x);
      const std::uint64_t sy = open_sum(up_y);
      const std::uint64_t n = open_sum(up_k);
      result.decrypted = {n * sy - sx * sx, n * n};
      break;
    }
    case Pipeline::kWeightedMean: {
      std::uint64_t num = 0;
      for (const Ciphertext& c : up_prod) {
        num += sink.decrypt_product(c);
        ++ops.decryptions;
      }
      result.decrypted = {num, open_sum(up_w)};
      break;
    }
  }
  return result;
}

namespace {

PipelineResult run_with_keys(Pipeline p, const Topology& t, const bgn::PublicKey& pk,
                             const bgn::PrivateKey& sk, std::span<const std::uint64_t> readings,
                             std::span<const std::uint64_t> weights, Rng& rng) {
  const Sink sink(bgn::KeyPair{pk, sk}, false);
  return run_pipeline(p, t, sink, readings, weights, rng);
}

}  // namespace

PipelineResult run_pipeline_sum(const Topology& t, const bgn::PublicKey& pk,
                                const bgn::PrivateKey& sk,
                                std::span<const std::uint64_t> readings, Rng& rng) {
  return run_with_keys(Pipeline::kSum, t, pk, sk, readings, {}, rng);
}

PipelineResult run_pipeline_mean(const Topology& t, const bgn::PublicKey& pk,
                                 const bgn::PrivateKey& sk,
                                 std::span<const std::uint64_t> readings, Rng& rng) {
  return run_with_keys(Pipeline::kMean, t, pk, sk, readings, {}, rng);
}

PipelineResult run_pipeline_variance(const Topology& t, const bgn::PublicKey& pk,
                                     const bgn::PrivateKey& sk,
                                     std::span<const std::uint64_t> readings, Rng& rng) {
  return run_with_keys(Pipeline::kVariance, t, pk, sk, readings, {}, rng);
}

PipelineResult run_pipeline_weighted_mean(const Topology& t, const bgn::PublicKey& pk,
                                          const bgn::PrivateKey& sk,
                                          std::span<const std::uint64_t> readings,
                                          std::span<const std::uint64_t> weights, Rng& rng) {
  return run_with_keys(Pipeline::kWeightedMean, t, pk, sk, readings, weights, rng);
}

}  // namespace wsnsec::aggregation
