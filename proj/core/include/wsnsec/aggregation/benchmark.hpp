// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace wsnsec::aggregation {

struct SecurityLevel {
  int level;
  std::size_t tau;               // prime size for q1, q2
  std::size_t rsa_bits;          // baseline modulus size
  std::size_t reference_p_bits;  // field size the level aims for
};

inline constexpr std::array<SecurityLevel, 4> kSecurityLevels = {{
    {1, 21, 472, 46},
    {2, 40, 945, 85},
    {3, 60, 1416, 125},
    {4, 81, 1891, 167},
}};

// kInvalidArgument outside 1..4.
const SecurityLevel& security_level(int level);

// E = k t. Unset k is calibrated so one level-1 EC sensor encryption costs
// `calibration_units`.
struct EnergyModel {
  std::optional<double> k;
  double calibration_units = 0.02;
};

enum class Scheme { kEc, kRsa };
std::string to_string(Scheme s);

struct ReportRow {
  Scheme scheme = Scheme::kEc;
  int level = 0;
  std::size_t key_bits = 0;
  std::string role;  // sensor, aggregator, aggregator_op
  double energy_units = 0.0;
  double battery_left = 0.0;
  double msgs_per_s = 0.0;
  std::string error;  // non-empty when the trial failed
};

// Network state after each round of the depletion simulation.
struct SeriesPoint {
  Scheme scheme = Scheme::kEc;
  int level = 0;
  int round = 0;
  double mean_sensor_battery = 0.0;
  double mean_aggregator_battery = 0.0;
  std::size_t alive_sensors = 0;
  std::size_t delivered = 0;  // readings that reached the sink this round
};

struct SimReport {
  double k = 0.0;
  std::vector<ReportRow> rows;
  std::vector<SeriesPoint> series;

  const ReportRow* find(Scheme scheme, int level, const std::string& role) const;
};

struct BenchmarkOptions {
  std::vector<int> levels{1, 2, 3, 4};
  int trials = 20;
  EnergyModel model;
  std::uint64_t seed = 1;
  std::size_t sensors = 500;
  std::size_t aggregators = 50;
  int rounds = 200;  // 0 disables the depletion series
};

// Median per-operation costs in seconds.
struct OperationTimes {
  std::size_t key_bits = 0;
  double sensor = 0.0;           // one encryption
  double aggregator_fixed = 0.0; // per round, independent of child count
  double aggregator_child = 0.0; // per child ciphertext
};

OperationTimes measure_ec(const SecurityLevel& level, int trials, std::uint64_t seed);
OperationTimes measure_rsa(const SecurityLevel& level, int trials, std::uint64_t seed);

SimReport run_benchmark(const BenchmarkOptions& options);

// Column order: scheme,level,key_bits,role,energy_units,battery_left,msgs_per_s.
void write_report_csv(std::ostream& os, const SimReport& report, const std::string& header);
void write_series_csv(std::ostream& os, const SimReport& report, const std::string& header);

}  // namespace wsnsec::aggregation
