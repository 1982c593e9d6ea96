// Copyright 2026 The wsnsec Authors.
// SPDX-License-Identifier: Apache-2.0

#include "wsnsec/aggregation/topology.hpp"

#include "json.hpp"
#include "wsnsec/error.hpp"

namespace wsnsec::aggregation {

using nlohmann::json;

std::vector<std::vector<std::uint32_t>> Topology::children() const {
  std::vector<std::vector<std::uint32_t>> out(aggregators.size());
  for (const SensorNode& s : sensors) out.at(s.aggregator).push_back(s.id);
  return out;
}

double squared_distance(const Position& a, const Position& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

std::uint32_t nearest_aggregator(const Position& p,
                                 const std::vector<AggregatorNode>& aggregators) {
  if (aggregators.empty()) throw Error(ErrorCode::kInvalidArgument, "no aggregators");
  std::uint32_t best = aggregators.front().id;
  double best_d = squared_distance(p, aggregators.front().pos);
  for (const AggregatorNode& a : aggregators) {
    const double d = squared_distance(p, a.pos);
    if (d < best_d || (d == best_d && a.id < best)) {
      best = a.id;
      best_d = d;
    }
  }
  return best;
}

Topology build_topology(std::size_t n_sensors, std::size_t n_aggregators, Rng& rng) {
  if (n_sensors == 0 || n_aggregators == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one sensor and one aggregator");
  }
  Topology t;
  t.aggregators.reserve(n_aggregators);
  for (std::size_t j = 0; j < n_aggregators; ++j) {
    const double x = rng.uniform01();
    const double y = rng.uniform01();
    t.aggregators.push_back({static_cast<std::uint32_t>(j), {x, y}, kAggregatorBattery});
  }
  t.sensors.reserve(n_sensors);
  for (std::size_t i = 0; i < n_sensors; ++i) {
    const double x = rng.uniform01();
    const double y = rng.uniform01();
    SensorNode s{static_cast<std::uint32_t>(i), {x, y}, kSensorBattery, 0};
    s.aggregator = nearest_aggregator(s.pos, t.aggregators);
    t.sensors.push_back(s);
  }
  return t;
}

Topology build_topology(std::size_t n_sensors, std::size_t n_aggregators, std::uint64_t seed) {
  Rng rng = Rng::derive(seed, "topology");
  return build_topology(n_sensors, n_aggregators, rng);
}

std::string topology_to_json(const Topology& t) {
  json j;
  j["sink"] = {{"x", t.sink.pos.x}, {"y", t.sink.pos.y}};
  j["aggregators"] = json::array();
  for (const AggregatorNode& a : t.aggregators) {
    j["aggregators"].push_back(
        {{"id", a.id}, {"x", a.pos.x}, {"y", a.pos.y}, {"battery", a.battery}});
  }
  j["sensors"] = json::array();
  for (const SensorNode& s : t.sensors) {
    j["sensors"].push_back({{"id", s.id},
                            {"x", s.pos.x},
                            {"y", s.pos.y},
                            {"battery", s.battery},
                            {"aggregator", s.aggregator}});
  }
  return j.dump(1);
}

Topology topology_from_json(const std::string& text) {
  Topology t;
  try {
    const json j = json::parse(text);
    t.sink.pos = {j.at("sink").at("x").get<double>(), j.at("sink").at("y").get<double>()};
    for (const json& a : j.at("aggregators")) {
      t.aggregators.push_back({a.at("id").get<std::uint32_t>(),
                               {a.at("x").get<double>(), a.at("y").get<double>()},
                               a.at("battery").get<double>()});
    }
    for (const json& s : j.at("sensors")) {
      t.sensors.push_back({s.at("id").get<std::uint32_t>(),
                           {s.at("x").get<double>(), s.at("y").get<double>()},
                           s.at("battery").get<double>(),
                           s.at("aggregator").get<std::uint32_t>()});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("topology: ") + e.what());
  }
  for (std::size_t j = 0; j < t.aggregators.size(); ++j) {
    if (t.aggregators[j].id != j || t.aggregators[j].battery < 0) {
      throw Error(ErrorCode::kMalformedInput, "aggregator records out of order or invalid");
    }
  }
  for (std::size_t i = 0; i < t.sensors.size(); ++i) {
    const SensorNode& s = t.sensors[i];
    if (s.id != i || s.battery < 0 || s.aggregator >= t.aggregators.size()) {
      throw Error(ErrorCode::kMalformedInput, "sensor record " + std::to_string(i) + " invalid");
    }
  }
  return t;
}

}  // namespace wsnsec::aggregation
