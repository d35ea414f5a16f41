// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iraas/graph.hpp"
#include "iraas/jsonio.hpp"
#include "iraas/telemetry.hpp"

namespace iraas::sim {

struct KpiGenParams {
  double base = 0.0;
  double amplitude = 0.0;
  double noise_sigma = 0.0;
  TimeMs period_ms = 1000;  // sinusoid period

  static KpiGenParams from_json(const json& j);
};

struct GeneratorSpec {
  int nodes = 0;
  std::optional<double> edge_prob;
  std::optional<int> degree;  // partial-mesh target degree
};

struct ControllerSpec {
  std::string controller_id;
  std::optional<json> topology;  // explicit export document
  std::optional<GeneratorSpec> generator;
};

struct Event {
  enum class Kind { fail_link, restore_link, add_link, remove_node };
  TimeMs at_ms = 0;
  Kind kind = Kind::fail_link;
  std::string target;  // namespaced link or node id
  json extra;          // add_link: {a, b, attrs}

  static const char* kind_name(Kind k);
  static Kind kind_parse(const std::string& s);
};

struct TelemetryDefaults {
  shellmon::ConnectionMode connection_mode = shellmon::ConnectionMode::pull;
  shellmon::CollectionMode collection_mode = shellmon::CollectionMode::agent_based;
  TimeMs poll_interval_ms = 100;
  int liveness_misses = 3;
};

struct ScenarioSpec {
  std::uint64_t seed = 0;
  std::vector<ControllerSpec> controllers;
  std::map<std::string, KpiGenParams> kpi_attributes;
  std::map<std::string, std::map<std::string, KpiGenParams>> link_overrides;
  TimeMs kpi_period_ms = 100;
  TelemetryDefaults telemetry;
  std::vector<Event> events;  // sorted by at_ms
  TimeMs duration_ms = 1000;

  static ScenarioSpec from_json(const json& j);
};

/// Deterministic hybrid-SDN substrate: seeded topologies, per-link KPI
/// processes (sinusoid + seeded gaussian noise), timed failure/addition
/// events, and the controller-facing export/install surfaces.
class Simulation : public shellmon::DeviceKpiSource {
 public:
  static std::unique_ptr<Simulation> load_scenario(const ScenarioSpec& spec);

  struct StepResult {
    std::vector<shellmon::KpiSample> emitted;
    std::vector<Event> applied;
  };

  /// Advances the logical clock, applying due events (before samples at
  /// the same timestamp) and emitting KPI ticks on their schedule.
  StepResult advance(TimeMs to_ms);

  TimeMs now() const { return now_ms_; }
  const ScenarioSpec& spec() const { return spec_; }

  /// Export document for one controller's current view. Failed links stay
  /// present with usable=false; removed devices disappear.
  json export_topology(const std::string& controller_id) const;

  /// Installs one plan section {controller_id, entries:[{src,dst,next_hops[]}]}.
  void apply_install(const std::string& controller_id, const json& section);

  struct WalkResult {
    bool reachable = false;
    std::vector<std::string> hops;  // device ids visited, src first
  };

  /// Follows installed next-hop lists (first live candidate wins; the
  /// "exterior" token crosses to the destination controller's designated
  /// node) and reports whether dst is reached.
  WalkResult walk(const std::string& src_device, const std::string& dst_device) const;

  std::vector<std::string> controller_ids() const;
  std::vector<std::string> device_ids() const;  // namespaced, alive only
  std::vector<std::string> link_ids() const;    // namespaced, all
  const json* installed(const std::string& controller_id, const std::string& src,
                        const std::string& dst) const;

  // DeviceKpiSource (agents read through this)
  std::vector<std::string> owned_ids(const std::string& source_id) override;
  std::optional<std::map<std::string, double>> read(const std::string& source_id,
                                                    const std::string& id) override;
  bool device_alive(const std::string& source_id) override;

  /// Test hook: force read failures for one link id.
  void inject_read_failure(const std::string& link_id, bool fail);

  /// Host file document covering every alive device.
  json host_file(const TelemetryDefaults& t) const;

 private:
  struct LinkState {
    std::string controller_id;
    std::string local_id;
    std::string a;  // namespaced device ids
    std::string b;
    std::map<std::string, double> attrs;
    bool usable = true;
    bool removed = false;
    std::string owner;  // reporting device (lexicographically smaller end)
  };
  struct DeviceState {
    std::string controller_id;
    std::string local_id;
    double cost = 0.0;
    bool alive = true;
  };
  struct GenState {
    std::uint64_t rng_state = 0;  // splitmix64
    KpiGenParams params;
  };

  void apply_event(const Event& e);
  void kpi_tick(TimeMs at, StepResult& out);
  double gen_value(GenState& g, const std::string& attr, TimeMs at);

  ScenarioSpec spec_;
  TimeMs now_ms_ = 0;
  std::size_t next_event_ = 0;
  TimeMs next_tick_ = 0;

  std::map<std::string, DeviceState> devices_;       // namespaced id -> state
  std::map<std::string, LinkState> links_;           // namespaced link id -> state
  std::map<std::string, std::string> designated_;    // controller -> local device id
  std::map<std::string, GenState> generators_;       // link|attr -> generator
  std::map<std::string, std::map<std::string, double>> counters_;  // link -> attr -> value
  std::set<std::string> read_failures_;
  // controller -> (src|dst) -> entry json
  std::map<std::string, std::map<std::string, json>> installed_;
};

}  // namespace iraas::sim
