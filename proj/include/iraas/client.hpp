// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iraas/graph.hpp"
#include "iraas/metric.hpp"
#include "iraas/route.hpp"

namespace iraas::client {

struct ControllerEndpoint {
  std::string controller_id;
  enum class Kind { sdn, non_sdn } kind = Kind::sdn;
  std::string address;      // "inproc" or "http://host:port"
  std::string credentials;  // opaque

  static ControllerEndpoint from_json(const json& j);
};

/// Declarative request: routing logic plus the infrastructure it targets.
struct RouteIntent {
  std::string intent_id;
  std::vector<ControllerEndpoint> controllers;
  metric::MetricSpec metric;
  route::Algorithm algorithm = route::Algorithm::spf;
  std::optional<int> cutoff_diameter;  // default: min(diameter+2, 8)
  int k_alternates = 3;
  double pseudo_cost = 1.0;
  route::Ranking ranking = route::Ranking::by_cost;
  bool strict_fetch = false;
  bool lenient_weighting = false;
  json params;  // alpha, window, risk_free, epsilon, max_paths, seed_costs...

  static RouteIntent from_json(const json& j);
};

struct IntentAck {
  std::string intent_id;
  std::string status;  // "accepted"
};

struct PolicyPackage {
  std::string intent_id;
  graph::NormalizedGraph g;
  route::RoutingLogic logic;
  std::string body;      // canonical serialization of {graph, intent_id, logic}
  std::string checksum;  // fnv1a64 hex of body

  std::string wire() const;  // envelope {"checksum":..., "package": body}
};

struct RouteResponse {
  std::string intent_id;
  struct Route {
    std::vector<std::string> path;  // device ids, pseudo hops elided
    std::vector<std::string> link_ids;
    double cost = graph::kInf;
    json reliability;
    int rank = 0;
    std::optional<bool> feasible;
  };
  struct Pair {
    std::string src;
    std::string dst;
    std::vector<Route> routes;
  };
  std::vector<Pair> pairs;
  std::vector<std::string> warnings;

  static RouteResponse from_json(const json& j);
  json to_json() const;
};

/// Next-hop token "exterior" marks the inter-controller crossing at a
/// controller's designated node; all other tokens are devices of that
/// section's controller.
inline constexpr const char* kExteriorHop = "exterior";

struct InstallPlan {
  struct Entry {
    std::string src;
    std::string dst;                     // ultimate destination (may be foreign)
    std::vector<std::string> next_hops;  // rank-ordered, deduped
  };
  std::map<std::string, std::vector<Entry>> sections;  // controller_id ->

  json to_json() const;
  json section_json(const std::string& controller_id) const;
};

/// Fetches one controller's topology export document.
using TopologyFetcher = std::function<json(const ControllerEndpoint&)>;
/// Sends a route_request envelope, returns the response bytes.
using RouteChannel = std::function<std::string(const std::string&)>;

struct RetryPolicy {
  int attempts = 3;
  int backoff_ms = 50;  // doubles per retry
  int timeout_ms = 30'000;
};

struct FetchResult {
  std::vector<graph::ControllerTopology> topologies;
  std::vector<std::string> warnings;  // unreachable controllers etc.
};

class IraasClient {
 public:
  /// Validates the intent shape and metric locally (fail fast, before any
  /// controller contact) and registers it. Duplicate ids are rejected.
  IntentAck submit_intent(const RouteIntent& intent);

  /// One topology per reachable controller. Strict mode insists on all.
  FetchResult fetch_topologies(const std::vector<ControllerEndpoint>& endpoints,
                               const TopologyFetcher& fetch, bool strict) const;

  /// fuse -> normalize -> assemble logic -> canonical body + checksum.
  /// Deterministic: identical inputs give byte-identical packages.
  PolicyPackage build_policy(const RouteIntent& intent,
                             const std::vector<graph::ControllerTopology>& topologies) const;

  /// Sends the package with retry/backoff, validates that the response
  /// only references known devices.
  RouteResponse request_routes(const PolicyPackage& pkg, const RouteChannel& send,
                               const RetryPolicy& retry = {}) const;

  /// Partitions routes by owning controller into per-device next-hop
  /// entries ordered by rank (floating-static style). Pseudo hops become
  /// the "exterior" token at the crossing device.
  InstallPlan plan_install(const RouteResponse& resp) const;

  const RouteIntent* intent(const std::string& intent_id) const;

 private:
  std::map<std::string, RouteIntent> intents_;
};

}  // namespace iraas::client
