// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "wsnsec/aggregation/benchmark.hpp"
#include "wsnsec/aggregation/pipeline.hpp"
#include "wsnsec/aggregation/rsa.hpp"
#include "wsnsec/error.hpp"

namespace wsnsec::aggregation {
namespace {

using bgn::KeyPair;

const KeyPair& toy_key() {
  static const KeyPair kp = [] {
    Rng rng(7);
    return bgn::keygen_from_primes(5, 7, rng);
  }();
  return kp;
}

const KeyPair& small_key() {
  static const KeyPair kp = [] {
    Rng rng(404);
    return bgn::keygen(21, rng);
  }();
  return kp;
}

// Aggregators at fixed spots; sensor i sits on top of aggregator owner[i].
Topology manual_topology(std::size_t aggregators, const std::vector<std::uint32_t>& owner) {
  Topology t;
  for (std::uint32_t j = 0; j < aggregators; ++j) {
    t.aggregators.push_back({j, {0.1 + 0.2 * j, 0.5}, kAggregatorBattery});
  }
  for (std::uint32_t i = 0; i < owner.size(); ++i) {
    const Position pos = t.aggregators[owner[i]].pos;
    t.sensors.push_back({i, pos, kSensorBattery, nearest_aggregator(pos, t.aggregators)});
  }
  return t;
}

TEST(FixedBase, MatchesGenericScalarMultiplication) {
  const KeyPair& toy = toy_key();
  const FixedBaseMul fb(toy.pub.curve, toy.pub.g, 6);
  for (int k = 0; k < 80; ++k) {
    EXPECT_EQ(fb.mul(k), scalar_mul(k, toy.pub.g, toy.pub.curve)) << k;
  }
  const KeyPair& kp = small_key();
  const FixedBaseMul fh(kp.pub.curve, kp.pub.h, bit_length(kp.pub.n));
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const BigUint k = rng.below(kp.pub.n * 4);  // also exercises the fallback
    EXPECT_EQ(fh.mul(k), scalar_mul(k, kp.pub.h, kp.pub.curve));
  }
}

TEST(FixedBase, EncryptorAgreesWithEncrypt) {
  for (const KeyPair* kp : {&toy_key(), &small_key()}) {
    const bgn::Encryptor enc(kp->pub);
    Rng a(9), b(9);
    for (int i = 0; i < 50; ++i) {
      const std::uint64_t m = a.below(kp->pub.message_bound + 1);
      b.below(kp->pub.message_bound + 1);
      EXPECT_EQ(enc.encrypt(m, a), bgn::encrypt(kp->pub, m, b));
    }
    EXPECT_THROW(enc.encrypt(kp->pub.message_bound + 1, a), Error);
  }
}

TEST(Topology, SingleSensor) {
  const Topology t = build_topology(1, 1, 5);
  ASSERT_EQ(t.sensors.size(), 1u);
  EXPECT_EQ(t.sensors[0].aggregator, 0u);
  EXPECT_EQ(t.sensors[0].battery, 100.0);
  EXPECT_EQ(t.aggregators[0].battery, 1000.0);
}

TEST(Topology, NearestAssignmentMatchesBruteForce) {
  const Topology t = build_topology(500, 50, 77);
  for (const SensorNode& s : t.sensors) {
    double best = INFINITY;
    std::uint32_t arg = 0;
    for (const AggregatorNode& a : t.aggregators) {
      const double d = std::hypot(s.pos.x - a.pos.x, s.pos.y - a.pos.y);
      if (d < best) {
        best = d;
        arg = a.id;
      }
    }
    EXPECT_EQ(s.aggregator, arg);
  }
}

TEST(Topology, TiesGoToLowestId) {
  std::vector<AggregatorNode> aggs{{0, {0.0, 0.0}, 0}, {1, {1.0, 0.0}, 0}, {2, {0.0, 0.0}, 0}};
  EXPECT_EQ(nearest_aggregator({0.5, 0.0}, aggs), 0u);
  std::swap(aggs[0], aggs[2]);
  EXPECT_EQ(nearest_aggregator({0.0, 0.0}, aggs), 0u);
}

TEST(Topology, DeterministicAndSerializable) {
  const Topology a = build_topology(120, 12, 3);
  EXPECT_EQ(a, build_topology(120, 12, 3));
  EXPECT_NE(a, build_topology(120, 12, 4));
  EXPECT_EQ(topology_from_json(topology_to_json(a)), a);
  EXPECT_THROW(topology_from_json("{}"), Error);
  Topology bad = a;
  bad.sensors[3].aggregator = 99;
  EXPECT_THROW(topology_from_json(topology_to_json(bad)), Error);
}

TEST(Pipeline, SumExamples) {
  Rng rng(1);
  const Topology three = manual_topology(1, {0, 0, 0});
  const std::vector<std::uint64_t> zeros(3, 0), r123{1, 2, 3};
  const KeyPair& toy = toy_key();
  EXPECT_EQ(run_pipeline_sum(three, toy.pub, toy.priv, zeros, rng).decrypted, (Ratio{0, 1}));
  const PipelineResult r = run_pipeline_sum(three, toy.pub, toy.priv, r123, rng);
  EXPECT_EQ(r.decrypted, (Ratio{6, 1}));
  EXPECT_TRUE(r.matches());

  const Topology fifty = build_topology(50, 5, 8);
  const std::vector<std::uint64_t> ones(50, 1);
  const KeyPair& kp = small_key();
  EXPECT_EQ(run_pipeline_sum(fifty, kp.pub, kp.priv, ones, rng).decrypted, (Ratio{50, 1}));
}

TEST(Pipeline, MeanExamples) {
  Rng rng(2);
  const KeyPair& kp = small_key();
  const std::vector<std::uint64_t> fours{4, 4, 4}, mixed{1, 2, 3, 6};
  const PipelineResult a =
      run_pipeline_mean(manual_topology(2, {0, 1, 1}), kp.pub, kp.priv, fours, rng);
  EXPECT_EQ(a.decrypted, (Ratio{12, 3}));
  EXPECT_EQ(a.decrypted.value(), 4.0);
  const PipelineResult b =
      run_pipeline_mean(manual_topology(2, {0, 0, 1, 1}), kp.pub, kp.priv, mixed, rng);
  EXPECT_EQ(b.decrypted, (Ratio{12, 4}));
  EXPECT_EQ(b.decrypted.value(), 3.0);

  // Aggregators 1 and 2 have no children and add (0, 0).
  const Topology sparse = manual_topology(3, {0, 0});
  ASSERT_TRUE(sparse.children()[1].empty());
  const std::vector<std::uint64_t> two{5, 7};
  EXPECT_EQ(run_pipeline_mean(sparse, kp.pub, kp.priv, two, rng).decrypted, (Ratio{12, 2}));
}

TEST(Pipeline, VarianceExamples) {
  Rng rng(3);
  const KeyPair& kp = small_key();
  const Topology t = manual_topology(2, {0, 1});
  const std::vector<std::uint64_t> constant{5, 5}, a{1, 3}, b{0, 6};
  EXPECT_EQ(run_pipeline_variance(t, kp.pub, kp.priv, constant, rng).decrypted.num, 0u);
  const PipelineResult ra = run_pipeline_variance(t, kp.pub, kp.priv, a, rng);
  EXPECT_EQ(ra.decrypted, (Ratio{4, 4}));
  EXPECT_EQ(ra.decrypted.value(), 1.0);
  EXPECT_EQ(run_pipeline_variance(t, kp.pub, kp.priv, b, rng).decrypted.value(), 9.0);
}

TEST(Pipeline, WeightedMeanExamples) {
  Rng rng(4);
  const KeyPair& kp = small_key();
  const Topology t = manual_topology(2, {0, 1, 1});
  const std::vector<std::uint64_t> readings{2, 1, 2}, weights{1, 2}, zero{0, 0};
  const PipelineResult r = run_pipeline_weighted_mean(t, kp.pub, kp.priv, readings, weights, rng);
  EXPECT_EQ(r.decrypted, (Ratio{8, 3}));
  EXPECT_EQ(r.ops.multiplications, 2u);
  const PipelineResult z = run_pipeline_weighted_mean(t, kp.pub, kp.priv, readings, zero, rng);
  EXPECT_EQ(z.decrypted, (Ratio{0, 0}));
  EXPECT_FALSE(z.decrypted.value().has_value());

  const Topology single = manual_topology(1, {0, 0, 0});
  const std::vector<std::uint64_t> one{1};
  const PipelineResult s = run_pipeline_weighted_mean(single, kp.pub, kp.priv, readings, one, rng);
  EXPECT_EQ(s.decrypted, (Ratio{5, 1}));
}

TEST(Pipeline, RandomInstancesMatchOracle) {
  const Sink sink(small_key());
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Topology t = build_topology(200, 20, seed);
    Rng rng = Rng::derive(seed, "readings");
    std::vector<std::uint64_t> readings(t.sensors.size()), weights(t.aggregators.size());
    for (auto& x : readings) x = rng.below(8);
    for (auto& w : weights) w = rng.below(5);
    for (Pipeline p : {Pipeline::kSum, Pipeline::kMean, Pipeline::kVariance,
                       Pipeline::kWeightedMean}) {
      const PipelineResult r = run_pipeline(p, t, sink, readings, weights, rng);
      EXPECT_TRUE(r.matches()) << to_string(p) << " seed " << seed;
    }
  }
}

TEST(Pipeline, OverflowPropagates) {
  // T = 4 on the toy primes: 3 + 3 = 6 is below q2 = 7 but above T.
  bgn::KeygenOptions opts;
  opts.message_bound = 4;
  Rng rng(5);
  const KeyPair kp = bgn::keygen_from_primes(5, 7, rng, opts);
  const Topology t = manual_topology(1, {0, 0});
  const std::vector<std::uint64_t> readings{3, 3};
  try {
    run_pipeline_sum(t, kp.pub, kp.priv, readings, rng);
    ADD_FAILURE() << "expected DlogNotFound";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDlogNotFound);
  }
}

TEST(Pipeline, InputValidation) {
  Rng rng(6);
  const KeyPair& kp = small_key();
  const Topology t = manual_topology(2, {0, 1});
  const std::vector<std::uint64_t> one{1};
  EXPECT_THROW(run_pipeline_sum(t, kp.pub, kp.priv, one, rng), Error);
  const std::vector<std::uint64_t> two{1, 2};
  EXPECT_THROW(run_pipeline_weighted_mean(t, kp.pub, kp.priv, two, one, rng), Error);
  EXPECT_EQ(parse_pipeline("wmean"), Pipeline::kWeightedMean);
  EXPECT_THROW(parse_pipeline("median"), Error);
}

TEST(Pipeline, SameSeedSameResult) {
  const Sink sink(small_key(), false);
  const Topology t = build_topology(60, 6, 1);
  const std::vector<std::uint64_t> readings(60, 2);
  Rng a(10), b(10);
  const PipelineResult ra = run_pipeline(Pipeline::kMean, t, sink, readings, {}, a);
  const PipelineResult rb = run_pipeline(Pipeline::kMean, t, sink, readings, {}, b);
  EXPECT_EQ(ra.decrypted, rb.decrypted);
  EXPECT_EQ(ra.ops, rb.ops);
  EXPECT_EQ(ra.ops.encryptions, 60u + 6u);
}

TEST(RsaBaseline, ModulusSizesAndDeterminism) {
  for (std::size_t bits : kRsaModulusBits) {
    const RsaBaselineKey& key = rsa_baseline_key(bits);
    EXPECT_EQ(bit_length(key.n), bits);
    EXPECT_GE(bit_length(key.e), bits - 1);
  }
  const BigUint m = 12345;
  EXPECT_EQ(rsa_baseline_encrypt(472, m).ciphertext, rsa_baseline_encrypt(472, m).ciphertext);
  EXPECT_EQ(rsa_baseline_encrypt(945, 0).ciphertext, 0);
  const RsaBaselineKey& key = rsa_baseline_key(472);
  EXPECT_EQ(rsa_decrypt(key, rsa_encrypt(key, m)), m);
  EXPECT_THROW(rsa_encrypt(key, key.n), Error);
}

TEST(RsaBaseline, LargerModulusTakesLonger) {
  auto median = [](std::size_t bits) {
    std::vector<std::int64_t> t;
    for (int i = 0; i < 7; ++i) t.push_back(rsa_baseline_encrypt(bits, 77).elapsed.count());
    std::sort(t.begin(), t.end());
    return t[3];
  };
  EXPECT_GT(median(1891), median(472));
}

TEST(Benchmark, CalibrationAndSeries) {
  BenchmarkOptions opts;
  opts.levels = {1, 2};
  opts.trials = 3;
  opts.rounds = 30;
  opts.sensors = 100;
  opts.aggregators = 10;
  const SimReport report = run_benchmark(opts);
  const ReportRow* ec1 = report.find(Scheme::kEc, 1, "sensor");
  ASSERT_NE(ec1, nullptr);
  EXPECT_NEAR(ec1->energy_units, 0.02, 0.02);
  for (const ReportRow& r : report.rows) {
    EXPECT_TRUE(r.error.empty());
    EXPECT_GE(r.energy_units, 0.0);
  }
  EXPECT_EQ(report.find(Scheme::kRsa, 2, "sensor")->key_bits, 945u);
  EXPECT_EQ(report.series.size(), 4u * 30u);
  for (std::size_t i = 1; i < report.series.size(); ++i) {
    const SeriesPoint& a = report.series[i - 1];
    const SeriesPoint& b = report.series[i];
    if (a.scheme == b.scheme && a.level == b.level) {
      EXPECT_LE(b.mean_sensor_battery, a.mean_sensor_battery);
      EXPECT_LE(b.mean_aggregator_battery, a.mean_aggregator_battery);
    }
  }
  std::ostringstream csv;
  write_report_csv(csv, report, "wsnsec test");
  EXPECT_NE(csv.str().find("scheme,level,key_bits,role,energy_units,battery_left,msgs_per_s"),
            std::string::npos);
  EXPECT_THROW(security_level(5), Error);
}

}  // namespace
}  // namespace wsnsec::aggregation
