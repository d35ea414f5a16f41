// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "iraas/graph.hpp"
#include "iraas/metric.hpp"

namespace iraas::route {

enum class Algorithm { spf, dual, all_paths };
enum class Ranking { by_cost, by_reliability };

const char* algorithm_name(Algorithm a);
Algorithm algorithm_parse(const std::string& s);
const char* ranking_name(Ranking r);
Ranking ranking_parse(const std::string& s);

/// The pair (metric function, path algorithm) plus its knobs.
struct RoutingLogic {
  metric::MetricSpec metric;
  Algorithm algorithm = Algorithm::spf;
  int cutoff_diameter = 1;
  int k_alternates = 3;
  std::map<std::string, double> seed_costs;  // link_id -> initial cost

  // engine knobs (intent-overridable)
  std::int64_t max_paths = 1'000'000;
  bool parallel_build = true;
  std::optional<double> risk_free;  // ranking benchmark override
  double epsilon = 1e-9;
  int window_capacity = 16;
  double alpha = 0.3;

  json to_json() const;
  static RoutingLogic from_json(const json& j);
};

/// Destination-rooted path trees. Each tree node is a distinct simple
/// path prefix destination..device; every exit-port node is one
/// enumerated source->destination path.
class SptForest {
 public:
  struct TreeNode {
    int port = -1;
    int parent = -1;  // -1 at root
    int link = -1;    // arc's link index (into graph links)
    int hops = 0;     // original-graph hops (internal arcs free)
    int device = -1;  // index into devices()
  };

  struct Tree {
    graph::NodeId destination;
    std::vector<TreeNode> nodes;  // node 0 is the root (destination entry port)
    std::map<int, std::vector<int>> endpoints_by_device;
  };

  std::vector<Tree> trees;  // ordered by destination id
  std::vector<graph::NodeId> devices;
  std::int64_t recompute_counter = 0;
  std::int64_t enumerated_paths = 0;
  std::uint64_t topo_hash = 0;
  int cutoff = 0;

  int device_index(const graph::NodeId& d) const;
};

/// One path of a pair's ranked set. `path` is the device sequence
/// including pseudo hops; clients see it elided.
struct RankedRoute {
  std::vector<graph::NodeId> path;
  std::vector<int> link_ids_idx;        // graph link indexes, path order
  std::vector<std::string> link_ids;    // same, by id (stable across graphs)
  double cost = graph::kInf;
  int hops = 0;
  metric::Reliability reliability;
  bool has_reliability = false;
  int rank = 0;
  bool feasible = true;  // DUAL annotation (first hop passes the criterion)
};

struct PairKey {
  graph::NodeId src;
  graph::NodeId dst;
  auto operator<=>(const PairKey&) const = default;
};

struct RankedRouteTable {
  std::map<PairKey, std::vector<RankedRoute>> pairs;
  std::set<PairKey> unreachable;
  Ranking ranking = Ranking::by_cost;
  std::int64_t forest_recompute_counter = 0;
};

/// Per-node distance-vector style classification for one destination.
struct DualClassification {
  graph::NodeId node;
  double feasible_distance = graph::kInf;
  std::optional<graph::NodeId> successor;      // first hop of the best path
  std::vector<graph::NodeId> feasible_successors;
  std::vector<graph::NodeId> non_feasible_alternates;
  bool unreachable = false;

  json to_json() const;
};

// --- topology deltas --------------------------------------------------------

struct LinkAdded {
  graph::WeightedLink link;
};
struct LinkRemoved {
  std::string link_id;
};
struct NodeAdded {
  graph::NodeId node;
  double node_cost = 0.0;
  std::vector<graph::WeightedLink> links;
};
struct NodeRemoved {
  graph::NodeId node;
};
using TopologyDelta = std::variant<LinkAdded, LinkRemoved, NodeAdded, NodeRemoved>;

// --- integrity ---------------------------------------------------------------

struct ValidatedPolicy {
  std::string intent_id;
  graph::NormalizedGraph g;
  RoutingLogic logic;
  std::vector<std::string> warnings;  // disconnected components etc.
};

/// Wire envelope: {"package": <canonical body string>, "checksum": <hex>}.
/// The digest covers the exact body bytes, so any single-byte corruption
/// of an honest envelope fails verification. Packages too damaged to
/// verify also raise ChecksumMismatch (there is nothing to attest).
ValidatedPolicy check_integrity(const std::string& envelope_bytes);

std::string package_body(const std::string& intent_id,
                         const graph::NormalizedGraph& g,
                         const RoutingLogic& logic);
std::string wrap_package(const std::string& body);

// --- phase 1 / phase 2 -------------------------------------------------------

/// Enumerates, per ordered pair, every simple path within the hop cutoff,
/// organized as destination-rooted trees. Per-destination builds run in
/// parallel when enabled; the result is identical to sequential.
SptForest build_spt_forest(const graph::NormalizedGraph& g, const RoutingLogic& logic);

/// Sums current link costs along every branch and ranks per pair:
/// by cost ascending (ties: fewer hops, then lexicographic path), or by
/// reliability of each path's cost series, descending, when a window
/// bank is supplied and every candidate of the pair has enough history
/// (cost order otherwise). Never mutates the forest.
RankedRouteTable rank_routes(const SptForest& forest, const graph::NormalizedGraph& g,
                             Ranking ranking, int k,
                             const metric::WindowBank* windows = nullptr,
                             std::optional<double> risk_free = std::nullopt,
                             double epsilon = 1e-9);

std::map<graph::NodeId, DualClassification> dual_classify(
    const graph::NormalizedGraph& g, const graph::NodeId& destination);

/// Removals price affected links +inf in `g` and leave the forest
/// untouched (counter unchanged). Additions mutate `g` and graft only the
/// branches through the new element; the counter increments once per tree
/// that changed. The grafted forest enumerates exactly the same path sets
/// as a from-scratch rebuild on the updated graph.
SptForest apply_topology_delta(const SptForest& forest, graph::NormalizedGraph& g,
                               const TopologyDelta& delta,
                               const RoutingLogic& logic);

/// Ranking-only failover: routes traversing the failed link sink at +inf
/// cost, the best surviving precomputed path becomes rank 1, pairs with
/// no finite survivor are flagged unreachable. No path enumeration.
RankedRouteTable switchover_on_failure(const RankedRouteTable& table,
                                       const std::string& failed_link_id);

/// First min(k, available) routes of the pair with pseudo nodes elided
/// from the returned sequences.
std::vector<RankedRoute> query_routes(const RankedRouteTable& table,
                                      const graph::NodeId& src,
                                      const graph::NodeId& dst, int k);

/// Default cutoff when the intent leaves it unset: min(diameter + 2, 8).
int default_cutoff(const graph::NormalizedGraph& g);

json route_to_json(const RankedRoute& r, bool include_feasible);
json table_to_json(const RankedRouteTable& table, bool include_feasible);

}  // namespace iraas::route
