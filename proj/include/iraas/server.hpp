// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "iraas/metric.hpp"
#include "iraas/route.hpp"
#include "iraas/telemetry.hpp"

namespace iraas::server {

/// Outcome of an event applied to a live session.
struct EventOutcome {
  std::int64_t recompute_delta = 0;
  std::vector<json> changed_pairs;      // {src,dst,old,new}
  std::vector<std::string> unreachable; // "src->dst"
};

/// Compute side of the service: integrity check, phase-1 forest build,
/// phase-2 ranking, reliability windows, and event-driven updates. One
/// session per accepted policy package.
class RouteServer {
 public:
  explicit RouteServer(shellmon::KpiStore& master_db) : store_(&master_db) {}

  /// Handles a route_request envelope; returns the route_response JSON
  /// string. Telemetry already in the master store weights the graph; the
  /// logic's seed costs apply first.
  std::string handle_route_request(const std::string& envelope_bytes);

  /// Folds new samples into the per-link windows, re-prices the graph and
  /// re-ranks every session. Returns pairs whose active route changed,
  /// per session.
  std::map<std::string, std::vector<json>> on_telemetry(TimeMs as_of);

  /// Applies a topology event to every session:
  ///   fail_link/remove_node -> price +inf, ranking-only switchover;
  ///   add_link              -> graft + re-rank;
  ///   restore_link          -> re-price from latest telemetry, re-rank.
  std::map<std::string, EventOutcome> on_event(const std::string& kind,
                                               const std::string& target,
                                               const json& extra, TimeMs now);

  struct Session {
    std::string intent_id;
    graph::NormalizedGraph g;
    route::RoutingLogic logic;
    route::Ranking ranking = route::Ranking::by_cost;
    route::SptForest forest;
    route::RankedRouteTable table;
    std::unique_ptr<metric::WindowBank> windows;
    std::vector<std::string> warnings;
    TimeMs last_telemetry = -1;
  };

  const Session* session(const std::string& intent_id) const;
  std::vector<std::string> session_ids() const;

  json table_json(const std::string& intent_id) const;

  /// route_response for the session's current table.
  json response_json(const Session& s) const;

  shellmon::KpiStore& store() { return *store_; }

 private:
  void reprice(Session& s);
  void rerank(Session& s, std::vector<json>* changed);

  shellmon::KpiStore* store_;
  std::map<std::string, Session> sessions_;
};

/// HTTP face of the route server (distributed mode):
///   POST /route_request  body = package envelope -> route_response
///   POST /telemetry      body = KPI batch JSON
///   POST /event          body = {kind, target, extra?, now}
///   GET  /table?intent=  -> current ranked table
class HttpRouteServer {
 public:
  explicit HttpRouteServer(RouteServer& core);
  ~HttpRouteServer();

  /// Binds 127.0.0.1 on an ephemeral port; returns the port.
  int start();
  void stop();
  int port() const { return port_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  RouteServer* core_;
  int port_ = 0;
};

}  // namespace iraas::server
