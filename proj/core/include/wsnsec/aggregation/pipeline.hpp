// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsnsec/aggregation/topology.hpp"
#include "wsnsec/bgn/cipher.hpp"

namespace wsnsec::aggregation {

enum class Pipeline { kSum, kMean, kVariance, kWeightedMean };

std::string to_string(Pipeline p);
// Accepts "sum", "mean", "variance", "wmean". kInvalidArgument otherwise.
Pipeline parse_pipeline(const std::string& name);

// Unreduced num / den; den == 0 means undefined (e.g. all weights zero).
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  std::optional<double> value() const;
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct OpCounts {
  std::uint64_t encryptions = 0;
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  std::uint64_t decryptions = 0;
  std::uint64_t messages = 0;  // ciphertexts sent over any link
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

struct PipelineResult {
  Pipeline pipeline = Pipeline::kSum;
  Ratio truth;
  Ratio decrypted;
  OpCounts ops;
  bool matches() const { return truth == decrypted; }
};

// Sensor side: encrypts its own reading.
class SensorRole {
 public:
  explicit SensorRole(std::shared_ptr<const bgn::Encryptor> enc) : enc_(std::move(enc)) {}
  bgn::Ciphertext report(std::uint64_t value, Rng& rng) const;

 private:
  std::shared_ptr<const bgn::Encryptor> enc_;
};

// Aggregator side. Holds only the public key.
class AggregatorRole {
 public:
  AggregatorRole(std::shared_ptr<const bgn::Encryptor> enc,
                 std::shared_ptr<const bgn::PairingContext> ctx)
      : enc_(std::move(enc)), ctx_(std::move(ctx)) {}

  const bgn::PublicKey& key() const { return enc_->key(); }
  // Homomorphic sum of the children, Enc(0) when there are none.
  bgn::Ciphertext fold(std::span<const bgn::Ciphertext> children, Rng& rng) const;
  bgn::Ciphertext encrypt(std::uint64_t value, Rng& rng) const;
  bgn::Ciphertext multiply(const bgn::Ciphertext& a, const bgn::Ciphertext& b, Rng& rng) const;

 private:
  std::shared_ptr<const bgn::Encryptor> enc_;
  std::shared_ptr<const bgn::PairingContext> ctx_;
};

// The only holder of the private key. Tables are built once and reused.
class Sink {
 public:
  explicit Sink(bgn::KeyPair keys, bool with_tables = true);

  const bgn::PublicKey& public_key() const { return keys_.pub; }
  std::shared_ptr<const bgn::PairingContext> pairing() const { return ctx_; }
  std::shared_ptr<const bgn::Encryptor> encryptor() const { return enc_; }
  std::uint64_t decrypt(const bgn::Ciphertext& c) const;
  std::uint64_t decrypt_product(const bgn::Ciphertext& c) const;

 private:
  bgn::KeyPair keys_;
  std::shared_ptr<const bgn::PairingContext> ctx_;
  std::shared_ptr<const bgn::Encryptor> enc_;
  std::optional<bgn::PointDlogTable> table_;
  std::optional<bgn::GtDlogTable> product_table_;
};

// Clear-text reference over the same tree. `weights` is per aggregator and
// only read by kWeightedMean.
Ratio plaintext_truth(Pipeline p, const Topology& t, std::span<const std::uint64_t> readings,
                      std::span<const std::uint64_t> weights = {});

// Encrypt at sensors, fold at aggregators, decrypt at the sink.
PipelineResult run_pipeline(Pipeline p, const Topology& t, const Sink& sink,
                            std::span<const std::uint64_t> readings,
                            std::span<const std::uint64_t> weights, Rng& rng);

PipelineResult run_pipeline_sum(const Topology& t, const bgn::PublicKey& pk,
                                const bgn::PrivateKey& sk,
                                std::span<const std::uint64_t> readings, Rng& rng);
PipelineResult run_pipeline_mean(const Topology& t, const bgn::PublicKey& pk,
                                 const bgn::PrivateKey& sk,
                                 std::span<const std::uint64_t> readings, Rng& rng);
PipelineResult run_pipeline_variance(const Topology& t, const bgn::PublicKey& pk,
                                     const bgn::PrivateKey& sk,
                                     std::span<const std::uint64_t> readings, Rng& rng);
PipelineResult run_pipeline_weighted_mean(const Topology& t, const bgn::PublicKey& pk,
                                          const bgn::PrivateKey& sk,
                                          std::span<const std::uint64_t> readings,
                                          std::span<const std::uint64_t> weights, Rng& rng);

}  // namespace wsnsec::aggregation
