// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "iraas/jsonio.hpp"
#include "iraas/telemetry.hpp"

namespace iraas::runner {

struct RunConfig {
  std::string scenario_path;
  std::string intent_path;
  std::optional<std::uint64_t> seed;  // overrides the scenario seed
  bool distributed = false;           // client/server/telemetry over sockets
  std::optional<std::string> report_path;
  std::optional<std::string> telemetry_mode;  // "pull" | "push" override
  std::optional<std::string> hosts_path;      // explicit host file
};

struct RunArtifacts {
  json report;
  /// Canonical sorted sample lines of the telemetry store (multiset view).
  std::vector<std::string> sample_lines;
};

/// Boots simulator, telemetry, route server and client in one process
/// (or across loopback sockets with distributed=true), executes the
/// intent, advances the clock through every scenario event, and returns
/// the machine-readable report. The report contains logical timestamps
/// only, so identical inputs produce byte-identical reports.
RunArtifacts run_scenario(const RunConfig& cfg);

/// Report-backed queries (the CLI surfaces these).
json report_routes(const json& report, const std::string& src, const std::string& dst,
                   int k);
json report_telemetry(const json& report, const std::string& source_id);

}  // namespace iraas::runner
