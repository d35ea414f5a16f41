// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#include "iraas/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace iraas::graph {

namespace {

std::string unordered_key(const NodeId& a, const NodeId& b) {
  const std::string sa = a.str(), sb = b.str();
  return sa < sb ? sa + "|" + sb : sb + "|" + sa;
}

void check_component(const std::string& s, const char* what) {
  if (s.empty()) fail(Errc::bad_spec, std::string(what) + " must be non-empty");
  if (s.find(':') != std::string::npos || s.find('#') != std::string::npos)
    fail(Errc::bad_spec, std::string(what) + " '" + s + "' contains a reserved character");
}

}  // namespace

NodeId NodeId::parse(const std::string& rendered) {
  auto pos = rendered.find(':');
  if (pos == std::string::npos || pos == 0 || pos + 1 == rendered.size())
    fail(Errc::bad_spec, "node id '" + rendered + "' is not of the form ns:id");
  return NodeId{rendered.substr(0, pos), rendered.substr(pos + 1)};
}

bool NodeId::is_pseudo() const { return ns == kPseudoNs; }

// --- ControllerTopology -----------------------------------------------------

void ControllerTopology::validate() const {
  if (controller_id.empty()) fail(Errc::bad_spec, "controller_id must be non-empty");
  std::set<NodeId> node_set(nodes.begin(), nodes.end());
  if (node_set.size() != nodes.size())
    fail(Errc::bad_spec, "duplicate node id in controller " + controller_id);
  for (const auto& l : links) {
    if (!node_set.count(l.a) || !node_set.count(l.b))
      fail(Errc::bad_spec, "link " + l.link_id + " references unknown node");
  }
  for (const auto& [node, cost] : node_costs) {
    if (cost < 0) fail(Errc::negative_cost, "node " + node.str());
    if (!node_set.count(node))
      fail(Errc::bad_spec, "node cost for unknown node " + node.str());
  }
  if (designated && !node_set.count(*designated))
    fail(Errc::invalid_designated,
         "designated node " + designated->str() + " not in controller " + controller_id);
  auto violations = validate_simple(*this);
  if (!violations.empty())
    fail(Errc::not_simple_graph,
         "controller " + controller_id + ": " + violations.front().kind + " " +
             violations.front().detail);
}

NodeId ControllerTopology::effective_designated() const {
  if (designated) return *designated;
  if (nodes.empty()) fail(Errc::invalid_designated, "controller " + controller_id + " has no nodes");
  std::map<NodeId, int> degree;
  for (const auto& n : nodes) degree[n] = 0;
  for (const auto& l : links) {
    degree[l.a]++;
    degree[l.b]++;
  }
  // highest degree, ties by node id
  NodeId best = nodes.front();
  int best_deg = degree[best];
  for (const auto& n : nodes) {
    if (degree[n] > best_deg || (degree[n] == best_deg && n < best)) {
      best = n;
      best_deg = degree[n];
    }
  }
  return best;
}

ControllerTopology ControllerTopology::from_json(const json& doc) {
  if (!doc.is_object()) fail(Errc::malformed_topology_document, "document is not an object");
  ControllerTopology t;
  try {
    t.controller_id = require_field(doc, "controller_id", Errc::malformed_topology_document)
                          .get<std::string>();
    check_component(t.controller_id, "controller_id");
    for (const auto& n : require_field(doc, "nodes", Errc::malformed_topology_document)) {
      std::string id = require_field(n, "id", Errc::malformed_topology_document).get<std::string>();
      check_component(id, "node id");
      NodeId node{t.controller_id, id};
      t.nodes.push_back(node);
      double cost = n.value("cost", 0.0);
      if (cost < 0) fail(Errc::negative_cost, "node " + node.str());
      if (cost > 0) t.node_costs[node] = cost;
    }
    for (const auto& l : require_field(doc, "links", Errc::malformed_topology_document)) {
      Link link;
      std::string raw_id =
          require_field(l, "link_id", Errc::malformed_topology_document).get<std::string>();
      check_component(raw_id, "link id");
      link.link_id = t.controller_id + ":" + raw_id;
      link.a = NodeId{t.controller_id,
                      require_field(l, "a", Errc::malformed_topology_document).get<std::string>()};
      link.b = NodeId{t.controller_id,
                      require_field(l, "b", Errc::malformed_topology_document).get<std::string>()};
      if (l.contains("attrs"))
        for (const auto& [k, v] : l["attrs"].items()) link.static_attrs[k] = v.get<double>();
      link.usable = l.value("usable", true);
      t.links.push_back(link);
    }
    if (doc.contains("designated") && !doc["designated"].is_null())
      t.designated = NodeId{t.controller_id, doc["designated"].get<std::string>()};
  } catch (const json::exception& e) {
    fail(Errc::malformed_topology_document, e.what());
  }
  t.validate();
  std::sort(t.nodes.begin(), t.nodes.end());
  return t;
}

json ControllerTopology::to_json() const {
  json nodes_j = json::array();
  for (const auto& n : nodes) {
    json nj{{"id", n.id}};
    auto it = node_costs.find(n);
    nj["cost"] = it == node_costs.end() ? 0.0 : it->second;
    nodes_j.push_back(nj);
  }
  json links_j = json::array();
  for (const auto& l : links) {
    json lj{{"a", l.a.id}, {"b", l.b.id}, {"usable", l.usable}};
    auto pos = l.link_id.find(':');
    lj["link_id"] = pos == std::string::npos ? l.link_id : l.link_id.substr(pos + 1);
    lj["attrs"] = json(l.static_attrs);
    links_j.push_back(lj);
  }
  json doc{{"controller_id", controller_id}, {"nodes", nodes_j}, {"links", links_j}};
  if (designated) doc["designated"] = designated->id;
  return doc;
}

// --- fuse -------------------------------------------------------------------

FusedGraph fuse_topologies(const std::vector<ControllerTopology>& topologies,
                           double pseudo_cost) {
  if (topologies.empty()) fail(Errc::empty_input, "no topologies to fuse");
  if (!(pseudo_cost > 0)) fail(Errc::bad_spec, "pseudo cost must be > 0");

  std::set<std::string> seen;
  for (const auto& t : topologies) {
    t.validate();
    if (!seen.insert(t.controller_id).second)
      fail(Errc::duplicate_controller, t.controller_id);
  }

  FusedGraph g;
  for (const auto& t : topologies) {
    for (const auto& n : t.nodes) {
      g.nodes.push_back(n);
      g.origin[n] = t.controller_id;
    }
    for (const auto& [n, c] : t.node_costs) g.node_costs[n] = c;
    for (const auto& l : t.links) g.links.push_back(l);
  }

  if (topologies.size() > 1) {
    NodeId pivot{kPseudoNs, "p0"};
    g.pseudo_node = pivot;
    g.nodes.push_back(pivot);
    g.origin[pivot] = kPseudoNs;
    for (const auto& t : topologies) {
      NodeId dn = t.effective_designated();
      PseudoLink pl;
      pl.link.a = pivot;
      pl.link.b = dn;
      pl.link.link_id = std::string(kPseudoNs) + ":" + t.controller_id;
      pl.cost = pseudo_cost;
      g.pseudo_links.push_back(pl);
    }
  }

  std::sort(g.nodes.begin(), g.nodes.end());
  std::sort(g.links.begin(), g.links.end(),
            [](const Link& x, const Link& y) { return x.link_id < y.link_id; });
  return g;
}

// --- normalize --------------------------------------------------------------

const char* link_kind_name(LinkKind k) {
  switch (k) {
    case LinkKind::telemetry: return "telemetry";
    case LinkKind::pseudo: return "pseudo";
    case LinkKind::split_internal: return "split";
  }
  return "?";
}

LinkKind link_kind_parse(const std::string& s) {
  if (s == "telemetry") return LinkKind::telemetry;
  if (s == "pseudo") return LinkKind::pseudo;
  if (s == "split") return LinkKind::split_internal;
  fail(Errc::bad_spec, "unknown link kind '" + s + "'");
}

void NormalizedGraph::rebuild_ports() {
  ports.clear();
  port_index.clear();
  arcs.clear();
  device_index_.clear();
  link_by_id_.clear();

  for (std::size_t i = 0; i < devices.size(); ++i) device_index_[devices[i]] = int(i);
  for (std::size_t i = 0; i < links.size(); ++i) link_by_id_[links[i].link_id] = int(i);

  auto add_port = [&](const NodeId& p) {
    port_index[p] = int(ports.size());
    ports.push_back(p);
  };
  for (const auto& d : devices) {
    auto it = split_map.find(d);
    if (it != split_map.end()) {
      add_port(it->second.first);
      add_port(it->second.second);
    } else {
      add_port(d);
    }
  }

  for (std::size_t i = 0; i < links.size(); ++i) {
    const auto& l = links[i];
    if (l.kind == LinkKind::split_internal) {
      arcs.push_back(Arc{entry_port(l.a), exit_port(l.a), int(i), false});
    } else {
      arcs.push_back(Arc{exit_port(l.a), entry_port(l.b), int(i), true});
      arcs.push_back(Arc{exit_port(l.b), entry_port(l.a), int(i), true});
    }
  }
}

int NormalizedGraph::entry_port(const NodeId& device) const {
  auto it = split_map.find(device);
  const NodeId& p = it == split_map.end() ? device : it->second.first;
  auto pi = port_index.find(p);
  if (pi == port_index.end()) fail(Errc::unknown_node, device.str());
  return pi->second;
}

int NormalizedGraph::exit_port(const NodeId& device) const {
  auto it = split_map.find(device);
  const NodeId& p = it == split_map.end() ? device : it->second.second;
  auto pi = port_index.find(p);
  if (pi == port_index.end()) fail(Errc::unknown_node, device.str());
  return pi->second;
}

NodeId NormalizedGraph::device_of_port(int port) const {
  const NodeId& p = ports.at(std::size_t(port));
  auto pos = p.id.rfind('#');
  if (pos == std::string::npos) return p;
  return NodeId{p.ns, p.id.substr(0, pos)};
}

int NormalizedGraph::link_index(const std::string& link_id) const {
  auto it = link_by_id_.find(link_id);
  return it == link_by_id_.end() ? -1 : it->second;
}

double NormalizedGraph::effective_cost(int link) const {
  const auto& l = links.at(std::size_t(link));
  return l.down ? kInf : l.cost;
}

bool NormalizedGraph::has_device(const NodeId& d) const { return device_index_.count(d) > 0; }

void NormalizedGraph::add_device(const NodeId& d, double cost) {
  if (cost < 0) fail(Errc::negative_cost, d.str());
  if (has_device(d)) fail(Errc::bad_spec, "device already present: " + d.str());
  devices.push_back(d);
  std::sort(devices.begin(), devices.end());
  if (cost > 0) {
    device_costs[d] = cost;
    split_map[d] = {NodeId{d.ns, d.id + "#in"}, NodeId{d.ns, d.id + "#out"}};
    links.push_back(WeightedLink{d, d, "split:" + d.str(), LinkKind::split_internal, cost, false});
  }
  rebuild_ports();
}

void NormalizedGraph::add_link(const WeightedLink& l) {
  if (link_index(l.link_id) >= 0) fail(Errc::bad_spec, "link already present: " + l.link_id);
  if (!has_device(l.a) || !has_device(l.b)) fail(Errc::unknown_node, l.link_id);
  if (l.a == l.b && l.kind != LinkKind::split_internal)
    fail(Errc::not_simple_graph, "self loop " + l.link_id);
  links.push_back(l);
  rebuild_ports();
}

void NormalizedGraph::set_down(const std::string& link_id, bool down) {
  int idx = link_index(link_id);
  if (idx < 0) fail(Errc::unknown_link, link_id);
  links[std::size_t(idx)].down = down;
}

std::uint64_t NormalizedGraph::topology_hash() const {
  std::string acc;
  for (const auto& d : devices) acc += d.str() + ";";
  acc += "|";
  for (const auto& l : links) acc += l.link_id + ";";
  return fnv1a64(acc);
}

json NormalizedGraph::to_json() const {
  json devices_j = json::array();
  for (const auto& d : devices) {
    auto it = device_costs.find(d);
    devices_j.push_back(json{{"id", d.str()}, {"cost", it == device_costs.end() ? 0.0 : it->second}});
  }
  json links_j = json::array();
  for (const auto& l : links) {
    if (l.kind == LinkKind::split_internal) continue;  // derived from device costs
    links_j.push_back(json{{"a", l.a.str()},
                           {"b", l.b.str()},
                           {"link_id", l.link_id},
                           {"kind", link_kind_name(l.kind)},
                           {"cost", l.down || !std::isfinite(l.cost) ? json("inf") : json(l.cost)},
                           {"down", l.down}});
  }
  return json{{"devices", devices_j}, {"links", links_j}};
}

NormalizedGraph NormalizedGraph::from_json(const json& j) {
  NormalizedGraph g;
  try {
    for (const auto& d : require_field(j, "devices", Errc::malformed_package)) {
      NodeId n = NodeId::parse(d.at("id").get<std::string>());
      double cost = d.value("cost", 0.0);
      if (cost < 0) fail(Errc::negative_cost, n.str());
      g.devices.push_back(n);
      if (cost > 0) {
        g.device_costs[n] = cost;
        g.split_map[n] = {NodeId{n.ns, n.id + "#in"}, NodeId{n.ns, n.id + "#out"}};
        g.links.push_back(
            WeightedLink{n, n, "split:" + n.str(), LinkKind::split_internal, cost, false});
      }
    }
    for (const auto& l : require_field(j, "links", Errc::malformed_package)) {
      WeightedLink wl;
      wl.a = NodeId::parse(l.at("a").get<std::string>());
      wl.b = NodeId::parse(l.at("b").get<std::string>());
      wl.link_id = l.at("link_id").get<std::string>();
      wl.kind = link_kind_parse(l.at("kind").get<std::string>());
      const auto& c = l.at("cost");
      wl.cost = c.is_string() ? kInf : c.get<double>();
      wl.down = l.value("down", false);
      g.links.push_back(wl);
    }
  } catch (const json::exception& e) {
    fail(Errc::malformed_package, e.what());
  }
  std::sort(g.devices.begin(), g.devices.end());
  std::sort(g.links.begin(), g.links.end(),
            [](const WeightedLink& x, const WeightedLink& y) { return x.link_id < y.link_id; });
  g.rebuild_ports();
  return g;
}

NormalizedGraph normalize_costs(const FusedGraph& g, const std::map<NodeId, double>& node_costs) {
  for (const auto& [node, cost] : node_costs)
    if (cost < 0) fail(Errc::negative_cost, "node " + node.str());

  NormalizedGraph out;
  out.devices = g.nodes;
  for (const auto& d : out.devices) {
    auto it = node_costs.find(d);
    if (it != node_costs.end() && it->second > 0) {
      out.device_costs[d] = it->second;
      out.split_map[d] = {NodeId{d.ns, d.id + "#in"}, NodeId{d.ns, d.id + "#out"}};
      out.links.push_back(WeightedLink{d, d, "split:" + d.str(), LinkKind::split_internal,
                                       it->second, false});
    }
  }
  for (const auto& l : g.links)
    out.links.push_back(WeightedLink{l.a, l.b, l.link_id, LinkKind::telemetry, kInf, !l.usable});
  for (const auto& pl : g.pseudo_links)
    out.links.push_back(
        WeightedLink{pl.link.a, pl.link.b, pl.link.link_id, LinkKind::pseudo, pl.cost, false});

  std::sort(out.links.begin(), out.links.end(),
            [](const WeightedLink& x, const WeightedLink& y) { return x.link_id < y.link_id; });
  out.rebuild_ports();
  return out;
}

// --- validation -------------------------------------------------------------

namespace {

std::vector<Violation> validate_edges(
    const std::vector<std::pair<NodeId, NodeId>>& edges) {
  std::vector<Violation> out;
  std::set<std::string> seen;
  for (const auto& [a, b] : edges) {
    if (a == b) {
      out.push_back(Violation{"SelfLoop", a.str()});
      continue;
    }
    std::string key = unordered_key(a, b);
    if (!seen.insert(key).second)
      out.push_back(Violation{"ParallelEdge", a.str() + " -- " + b.str()});
  }
  return out;
}

}  // namespace

std::vector<Violation> validate_simple(const ControllerTopology& t) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& l : t.links) edges.emplace_back(l.a, l.b);
  return validate_edges(edges);
}

std::vector<Violation> validate_simple(const FusedGraph& g) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& l : g.links) edges.emplace_back(l.a, l.b);
  for (const auto& pl : g.pseudo_links) edges.emplace_back(pl.link.a, pl.link.b);
  return validate_edges(edges);
}

std::vector<Violation> validate_simple(const NormalizedGraph& g) {
  // validate the port-level digraph: no self arcs, no duplicate ordered pairs
  std::vector<Violation> out;
  std::set<std::pair<int, int>> seen;
  for (const auto& a : g.arcs) {
    if (a.from == a.to) {
      out.push_back(Violation{"SelfLoop", g.ports[std::size_t(a.from)].str()});
      continue;
    }
    if (!seen.insert({a.from, a.to}).second)
      out.push_back(Violation{"ParallelEdge", g.ports[std::size_t(a.from)].str() + " -> " +
                                                  g.ports[std::size_t(a.to)].str()});
  }
  return out;
}

// --- connectivity -----------------------------------------------------------

namespace {

std::map<NodeId, std::vector<NodeId>> device_adjacency(const NormalizedGraph& g,
                                                       bool usable_only) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const auto& d : g.devices) adj[d];
  for (const auto& l : g.links) {
    if (l.kind == LinkKind::split_internal) continue;
    if (usable_only && l.down) continue;
    adj[l.a].push_back(l.b);
    adj[l.b].push_back(l.a);
  }
  return adj;
}

}  // namespace

int hop_diameter(const NormalizedGraph& g) {
  auto adj = device_adjacency(g, true);
  int diameter = 0;
  for (const auto& d : g.devices) {
    std::map<NodeId, int> dist{{d, 0}};
    std::deque<NodeId> q{d};
    while (!q.empty()) {
      NodeId cur = q.front();
      q.pop_front();
      for (const auto& nb : adj[cur]) {
        if (dist.count(nb)) continue;
        dist[nb] = dist[cur] + 1;
        diameter = std::max(diameter, dist[nb]);
        q.push_back(nb);
      }
    }
  }
  return diameter;
}

std::vector<std::vector<NodeId>> connected_components(const NormalizedGraph& g) {
  auto adj = device_adjacency(g, false);
  std::set<NodeId> left(g.devices.begin(), g.devices.end());
  std::vector<std::vector<NodeId>> comps;
  while (!left.empty()) {
    NodeId start = *left.begin();
    std::vector<NodeId> comp;
    std::deque<NodeId> q{start};
    left.erase(start);
    while (!q.empty()) {
      NodeId cur = q.front();
      q.pop_front();
      comp.push_back(cur);
      for (const auto& nb : adj[cur]) {
        if (left.erase(nb)) q.push_back(nb);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() > y.size() : x < y;
  });
  return comps;
}

}  // namespace iraas::graph
