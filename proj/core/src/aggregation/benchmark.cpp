// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/aggregation/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>

#include "wsnsec/aggregation/rsa.hpp"
#include "wsnsec/aggregation/topology.hpp"
#include "wsnsec/bgn/cipher.hpp"
#include "wsnsec/error.hpp"

namespace wsnsec::aggregation {

namespace {

using Clock = std::chrono::steady_clock;

// Median seconds per call. Each sample batches enough calls to last ~1 ms.
double median_seconds(int trials, const std::function<void()>& op) {
  op();  // warm-up
  std::size_t reps = 1;
  for (;;) {
    const auto start = Clock::now();
    for (std::size_t i = 0; i < reps; ++i) op();
    if (Clock::now() - start >= std::chrono::milliseconds(1) || reps >= (1u << 16)) break;
    reps *= 2;
  }
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const auto start = Clock::now();
    for (std::size_t i = 0; i < reps; ++i) op();
    const std::chrono::duration<double> d = Clock::now() - start;
    samples.push_back(d.count() / static_cast<double>(reps));
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

std::uint64_t level_seed(std::uint64_t seed, int level) {
  return Rng::mix(seed + static_cast<std::uint64_t>(level));
}

}  // namespace

const SecurityLevel& security_level(int level) {
  if (level < 1 || level > 4) {
    throw Error(ErrorCode::kInvalidArgument, "security level must be in 1..4");
  }
  return kSecurityLevels[static_cast<std::size_t>(level - 1)];
}

std::string to_string(Scheme s) { return s == Scheme::kEc ? "EC" : "RSA"; }

const ReportRow* SimReport::find(Scheme scheme, int level, const std::string& role) const {
  for (const ReportRow& r : rows) {
    if (r.scheme == scheme && r.level == level && r.role == role) return &r;
  }
  return nullptr;
}

OperationTimes measure_ec(const SecurityLevel& level, int trials, std::uint64_t seed) {
  Rng rng = Rng::derive(level_seed(seed, level.level), "bench-ec");
  const bgn::KeyPair kp = bgn::keygen(level.tau, rng);
  const bgn::PublicKey& pk = kp.pub;
  const auto group = curve_group(pk.curve);
  OperationTimes out;
  out.key_bits = bit_length(pk.p);

  const bgn::Encryptor enc(pk);
  const std::uint64_t m = rng.below(pk.message_bound + 1);
  out.sensor = median_seconds(trials, [&] { enc.encrypt(m, rng); });

  const CurvePoint a = bgn::encrypt(pk, 1, rng).point();
  CurvePoint acc = bgn::encrypt(pk, 2, rng).point();
  out.aggregator_child = median_seconds(trials, [&] { acc = group.add(acc, a); });

  out.aggregator_fixed = median_seconds(trials, [&] { group.add(acc, enc.mask(rng)); });
  return out;
}

OperationTimes measure_rsa(const SecurityLevel& level, int trials, std::uint64_t seed) {
  Rng rng = Rng::derive(level_seed(seed, level.level), "bench-rsa");
  const RsaBaselineKey& key = rsa_baseline_key(level.rsa_bits);
  OperationTimes out;
  out.key_bits = bit_length(key.n);

  const BigUint m = rng.below(BigUint(65536));
  out.sensor = median_seconds(trials, [&] { rsa_encrypt(key, m); });

  // Each child is decrypted and added into the running sum mod n.
  const BigUint c = rsa_encrypt(key, m);
  BigUint sum = 0;
  out.aggregator_child = median_seconds(trials, [&] {
    sum += rsa_decrypt(key, c);
    sum %= key.n;
  });
  out.aggregator_fixed = median_seconds(trials, [&] { rsa_encrypt(key, sum); });
  return out;
}

SimReport run_benchmark(const BenchmarkOptions& options) {
  if (options.trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  std::vector<int> levels = options.levels;
  for (int l : levels) security_level(l);

  SimReport report;
  std::vector<std::pair<int, OperationTimes>> ec, rsa;
  std::vector<std::pair<int, std::string>> failures;
  for (int l : levels) {
    try {
      ec.emplace_back(l, measure_ec(security_level(l), options.trials, options.seed));
      rsa.emplace_back(l, measure_rsa(security_level(l), options.trials, options.seed));
    } catch (const Error& e) {
      failures.emplace_back(l, e.what());
    }
  }

  if (options.model.k) {
    report.k = *options.model.k;
  } else {
    double t1 = 0.0;
    for (const auto& [l, t] : ec) {
      if (l == 1) t1 = t.sensor;
    }
    if (t1 == 0.0) t1 = measure_ec(security_level(1), options.trials, options.seed).sensor;
    report.k = options.model.calibration_units / t1;
  }

  const double mean_children =
      static_cast<double>(options.sensors) / static_cast<double>(options.aggregators);
  auto emit = [&](Scheme scheme, int l, const OperationTimes& t) {
    const double k = report.k;
    const double agg = t.aggregator_fixed + mean_children * t.aggregator_child;
    report.rows.push_back({scheme, l, t.key_bits, "sensor", k * t.sensor,
                           kSensorBattery - k * t.sensor, 1.0 / t.sensor, {}});
    report.rows.push_back({scheme, l, t.key_bits, "aggregator", k * agg,
                           kAggregatorBattery - k * agg, 1.0 / agg, {}});
    report.rows.push_back({scheme, l, t.key_bits, "aggregator_op", k * t.aggregator_child,
                           kAggregatorBattery - k * t.aggregator_child,
                           1.0 / t.aggregator_child, {}});
  };
  for (const auto& [l, t] : ec) emit(Scheme::kEc, l, t);
  for (const auto& [l, t] : rsa) emit(Scheme::kRsa, l, t);
  for (const auto& [l, msg] : failures) {
    for (Scheme s : {Scheme::kEc, Scheme::kRsa}) {
      ReportRow row;
      row.scheme = s;
      row.level = l;
      row.role = "sensor";
      row.error = msg;
      report.rows.push_back(row);
    }
  }

  if (options.rounds > 0) {
    const Topology topo =
        build_topology(options.sensors, options.aggregators, Rng::mix(options.seed));
    const auto kids = topo.children();
    auto simulate = [&](Scheme scheme, int l, const OperationTimes& t) {
      std::vector<double> sb(topo.sensors.size(), kSensorBattery);
      std::vector<double> ab(topo.aggregators.size(), kAggregatorBattery);
      const double es = report.k * t.sensor;
      for (int round = 1; round <= options.rounds; ++round) {
        SeriesPoint pt{scheme, l, round, 0.0, 0.0, 0, 0};
        std::vector<bool> sent(sb.size(), false);
        for (std::size_t i = 0; i < sb.size(); ++i) {
          if (sb[i] >= es) {
            sb[i] -= es;
            sent[i] = true;
            ++pt.alive_sensors;
          }
        }
        for (std::size_t j = 0; j < ab.size(); ++j) {
          std::size_t live = 0;
          for (std::uint32_t id : kids[j]) live += sent[id] ? 1 : 0;
          const double ea =
              report.k * (t.aggregator_fixed + static_cast<double>(live) * t.aggregator_child);
          if (ab[j] >= ea) {
            ab[j] -= ea;
            pt.delivered += live;
          }
        }
        for (double b : sb) pt.mean_sensor_battery += b;
        for (double b : ab) pt.mean_aggregator_battery += b;
        pt.mean_sensor_battery /= static_cast<double>(sb.size());
        pt.mean_aggregator_battery /= static_cast<double>(ab.size());
        report.series.push_back(pt);
      }
    };
    for (const auto& [l, t] : ec) simulate(Scheme::kEc, l, t);
    for (const auto& [l, t] : rsa) simulate(Scheme::kRsa, l, t);
  }
  return report;
}

void write_report_csv(std::ostream& os, const SimReport& report, const std::string& header) {
  if (!header.empty()) os << "# " << header << "\n";
  os << "# k=" << std::setprecision(10) << report.k << " units/s\n";
  os << "scheme,level,key_bits,role,energy_units,battery_left,msgs_per_s\n";
  for (const ReportRow& r : report.rows) {
    os << to_string(r.scheme) << ',' << r.level << ',' << r.key_bits << ',' << r.role << ',';
    if (!r.error.empty()) {
      os << "error,,\n";
      continue;
    }
    os << std::fixed << std::setprecision(6) << r.energy_units << ',' << r.battery_left << ','
       << std::setprecision(2) << r.msgs_per_s << std::defaultfloat << "\n";
  }
}

void write_series_csv(std::ostream& os, const SimReport& report, const std::string& header) {
  if (!header.empty()) os << "# " << header << "\n";
  os << "scheme,level,round,mean_sensor_battery,mean_aggregator_battery,alive_sensors,"
        "delivered\n";
  for (const SeriesPoint& p : report.series) {
    os << to_string(p.scheme) << ',' << p.level << ',' << p.round << ',' << std::fixed
       << std::setprecision(6) << p.mean_sensor_battery << ',' << p.mean_aggregator_battery
       << std::defaultfloat << ',' << p.alive_sensors << ',' << p.delivered << "\n";
  }
}

}  // namespace wsnsec::aggregation
