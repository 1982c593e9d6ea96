// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wsnsec/rng.hpp"

namespace wsnsec::aggregation {

inline constexpr double kSensorBattery = 100.0;
inline constexpr double kAggregatorBattery = 1000.0;

struct Position {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Position&, const Position&) = default;
};

struct SensorNode {
  std::uint32_t id = 0;
  Position pos;
  double battery = kSensorBattery;
  std::uint32_t aggregator = 0;
  friend bool operator==(const SensorNode&, const SensorNode&) = default;
};

struct AggregatorNode {
  std::uint32_t id = 0;
  Position pos;
  double battery = kAggregatorBattery;
  friend bool operator==(const AggregatorNode&, const AggregatorNode&) = default;
};

struct SinkNode {
  Position pos{0.5, 0.5};
  friend bool operator==(const SinkNode&, const SinkNode&) = default;
};

// Sensor -> aggregator -> sink tree. Sensor i has id i, aggregator j has id j.
struct Topology {
  std::vector<SensorNode> sensors;
  std::vector<AggregatorNode> aggregators;
  SinkNode sink;

  // Sensor ids per aggregator, ascending.
  std::vector<std::vector<std::uint32_t>> children() const;

  friend bool operator==(const Topology&, const Topology&) = default;
};

double squared_distance(const Position& a, const Position& b);

// Nearest aggregator by Euclidean distance; ties go to the lowest id.
std::uint32_t nearest_aggregator(const Position& p, const std::vector<AggregatorNode>& aggregators);

// Uniform positions on the unit square: aggregators first, then sensors.
Topology build_topology(std::size_t n_sensors, std::size_t n_aggregators, Rng& rng);
Topology build_topology(std::size_t n_sensors, std::size_t n_aggregators, std::uint64_t seed);

std::string topology_to_json(const Topology& t);
// kMalformedInput on bad structure, out-of-range assignment or negative battery.
Topology topology_from_json(const std::string& text);

}  // namespace wsnsec::aggregation
