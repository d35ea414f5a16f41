// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iraas/jsonio.hpp"

namespace iraas::graph {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Controller-qualified node identity. Rendered as "ns:id"; the namespace
/// "pseudo" is reserved for fusion pivot nodes and the characters ':' and
/// '#' are reserved inside components ('#' marks split ports).
struct NodeId {
  std::string ns;
  std::string id;

  std::string str() const { return ns + ":" + id; }
  static NodeId parse(const std::string& rendered);
  bool is_pseudo() const;

  auto operator<=>(const NodeId&) const = default;
};

inline constexpr const char* kPseudoNs = "pseudo";

struct Link {
  NodeId a;
  NodeId b;
  std::string link_id;  // namespaced ("ctrl:raw") once fused
  std::map<std::string, double> static_attrs;
  bool usable = true;
};

/// One controller's exported view. Node ids are local (un-namespaced)
/// until fusion qualifies them with the controller id.
struct ControllerTopology {
  std::string controller_id;
  std::vector<NodeId> nodes;
  std::vector<Link> links;
  std::map<NodeId, double> node_costs;
  std::optional<NodeId> designated;

  void validate() const;
  /// Explicit designated node, else highest degree, ties by node id.
  NodeId effective_designated() const;

  static ControllerTopology from_json(const json& doc);
  json to_json() const;
};

struct PseudoLink {
  Link link;
  double cost = 0.0;
};

/// Union of namespaced controller graphs plus (when more than one
/// controller contributed) one pseudo node adjacent to each controller's
/// designated node.
struct FusedGraph {
  std::vector<NodeId> nodes;  // sorted, pseudo node included when present
  std::vector<Link> links;    // telemetered links, namespaced ids
  std::optional<NodeId> pseudo_node;
  std::vector<PseudoLink> pseudo_links;
  std::map<NodeId, std::string> origin;
  std::map<NodeId, double> node_costs;  // namespaced, carried for normalization
};

enum class LinkKind { telemetry, pseudo, split_internal };

const char* link_kind_name(LinkKind k);
LinkKind link_kind_parse(const std::string& s);

/// Undirected link record of the normalized graph. `a`/`b` are original
/// (device-level) node ids; split_internal records have a == b and carry
/// the node's computational cost.
struct WeightedLink {
  NodeId a;
  NodeId b;
  std::string link_id;
  LinkKind kind = LinkKind::telemetry;
  double cost = kInf;  // telemetry links stay unusable until weighted
  bool down = false;   // vanished elements are kept and priced at +inf
};

/// Directed port-level arc. Internal arcs (in->out) do not count as hops.
struct Arc {
  int from = -1;  // port index
  int to = -1;
  int link = -1;  // index into links
  bool counts_hop = true;
};

/// Shortest-path-ready form: every node with positive computational cost
/// is split into an in/out port pair joined by an internal link priced at
/// that cost, so a traversal pays the cost of every interior node exactly
/// once (path endpoints pay nothing).
class NormalizedGraph {
 public:
  std::vector<NodeId> devices;  // original node set, sorted
  std::map<NodeId, double> device_costs;
  std::vector<WeightedLink> links;
  std::map<NodeId, std::pair<NodeId, NodeId>> split_map;

  // derived port-level digraph
  std::vector<NodeId> ports;
  std::map<NodeId, int> port_index;
  std::vector<Arc> arcs;

  void rebuild_ports();

  int entry_port(const NodeId& device) const;
  int exit_port(const NodeId& device) const;
  NodeId device_of_port(int port) const;

  int link_index(const std::string& link_id) const;  // -1 when absent
  double effective_cost(int link) const;             // +inf when down

  bool has_device(const NodeId& d) const;
  void add_device(const NodeId& d, double cost);
  void add_link(const WeightedLink& l);
  void set_down(const std::string& link_id, bool down);

  /// Identity of the topology (devices + link ids), independent of costs.
  /// Used to detect forest/graph mismatches.
  std::uint64_t topology_hash() const;

  json to_json() const;
  static NormalizedGraph from_json(const json& j);

 private:
  std::map<NodeId, int> device_index_;
  std::map<std::string, int> link_by_id_;
};

struct Violation {
  std::string kind;  // "SelfLoop" | "ParallelEdge"
  std::string detail;
};

// --- operations -----------------------------------------------------------

FusedGraph fuse_topologies(const std::vector<ControllerTopology>& topologies,
                           double pseudo_cost);

NormalizedGraph normalize_costs(const FusedGraph& g,
                                const std::map<NodeId, double>& node_costs);

std::vector<Violation> validate_simple(const ControllerTopology& t);
std::vector<Violation> validate_simple(const FusedGraph& g);
std::vector<Violation> validate_simple(const NormalizedGraph& g);

/// Hop-count diameter over usable links (longest finite BFS distance);
/// 0 for graphs with fewer than two devices.
int hop_diameter(const NormalizedGraph& g);

/// Devices grouped by connected component (over all links), largest first.
std::vector<std::vector<NodeId>> connected_components(const NormalizedGraph& g);

}  // namespace iraas::graph
