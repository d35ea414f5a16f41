// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "iraas/jsonio.hpp"

namespace iraas::shellmon {

enum class ConnectionMode { pull, push };
enum class CollectionMode { agent_based, agent_less };

const char* connection_mode_name(ConnectionMode m);
const char* collection_mode_name(CollectionMode m);

/// One monitored client as recorded in the host file.
struct HostRecord {
  std::string source_id;
  std::string hostname;
  int port = 0;
  std::string credentials;
  std::string content_type = "application/json";
  ConnectionMode connection_mode = ConnectionMode::pull;
  CollectionMode collection_mode = CollectionMode::agent_based;

  static HostRecord from_json(const json& j);
  json to_json() const;
};

struct HostRegistry {
  std::vector<HostRecord> hosts;
  const HostRecord* find(const std::string& source_id) const;
};

/// Host file is a JSON array of HostRecord objects.
HostRegistry load_host_registry(const json& doc);

struct KpiSample {
  std::string source_id;
  std::string id;  // link or node id
  TimeMs ts_ms = 0;
  std::map<std::string, double> values;

  json to_json() const;  // wire sample: {id, ts_ms, values{}}
  std::string canonical_line() const;
};

struct KpiBatch {
  std::string source_id;
  std::int64_t batch_seq = 0;
  std::vector<KpiSample> samples;
  bool partial = false;

  json to_json() const;
  static KpiBatch from_json(const json& j);
};

/// Immutable time-consistent view: latest sample at or before `as_of`
/// per link/node id.
struct KpiSnapshot {
  TimeMs as_of = 0;
  std::map<std::string, KpiSample> latest;

  const KpiSample* find(const std::string& id) const;
};

/// Master KPI store shared with the routing pipeline. Writes are
/// serialized; snapshots copy under the lock so readers never observe a
/// sample newer than as_of or a torn entry.
class KpiStore {
 public:
  struct IngestResult {
    bool accepted = false;
    std::string reason;
  };

  /// Validates per-source monotonicity and batch_seq ordering. Duplicate
  /// batch_seq is dropped idempotently (accepted=false, reason "duplicate").
  IngestResult ingest(const KpiBatch& batch);
  IngestResult ingest_wire(const std::string& batch_json);

  KpiSnapshot snapshot(TimeMs as_of) const;

  std::vector<KpiSample> series(const std::string& id) const;
  std::vector<std::string> ids() const;
  std::vector<std::string> sources() const;
  std::vector<KpiSample> samples_for_source(const std::string& source_id) const;

  /// Every stored sample as a canonical line, sorted (multiset view).
  std::vector<std::string> canonical_lines() const;

  std::int64_t malformed_count() const;
  std::int64_t duplicate_count() const;
  std::int64_t sample_count() const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, std::vector<KpiSample>> by_id_;
  std::map<std::string, std::int64_t> last_seq_;          // per source
  std::map<std::string, TimeMs> last_ts_;                 // per source+id
  std::map<std::string, std::vector<KpiSample>> by_source_;
  std::int64_t malformed_ = 0;
  std::int64_t duplicates_ = 0;
};

/// Device-side KPI source an agent's accumulator drains (the simulator
/// implements this over its per-device counters).
class DeviceKpiSource {
 public:
  virtual ~DeviceKpiSource() = default;
  virtual std::vector<std::string> owned_ids(const std::string& source_id) = 0;
  /// nullopt = read failure for that id.
  virtual std::optional<std::map<std::string, double>> read(
      const std::string& source_id, const std::string& id) = 0;
  virtual bool device_alive(const std::string& source_id) = 0;
};

/// Accumulator / Collector / Sender cycle. Agent-based and agent-less
/// deployments share this implementation; only where it runs differs.
class Agent {
 public:
  Agent(std::string source_id, DeviceKpiSource& source)
      : source_id_(std::move(source_id)), source_(&source) {}

  /// Runs one collection cycle at `now`: drains device counters into the
  /// node_util store, stamps source_id + timestamp, returns the batch.
  /// Partial read failures flag the batch; total failure throws.
  KpiBatch collect_cycle(TimeMs now);

  const std::string& source_id() const { return source_id_; }

 private:
  std::string source_id_;
  DeviceKpiSource* source_;
  std::int64_t next_seq_ = 1;
  std::map<std::string, std::map<std::string, double>> node_util_;
};

/// Pull transport: a poll request initiates the collection cycle on the
/// far side and returns the serialized batch.
class PullTransport {
 public:
  virtual ~PullTransport() = default;
  virtual std::string poll(const HostRecord& host, TimeMs now) = 0;
};

/// Loopback pull transport over in-process agents. Payloads still cross
/// the boundary as serialized JSON.
class LoopbackPullTransport : public PullTransport {
 public:
  void attach(const std::string& source_id, std::shared_ptr<Agent> agent);
  std::string poll(const HostRecord& host, TimeMs now) override;

 private:
  std::map<std::string, std::shared_ptr<Agent>> agents_;
};

/// In-process publish-subscribe bus with observable consumer lag.
/// Topics follow telemetry.<domain>.<source_id>.
class MessageBus {
 public:
  void publish(const std::string& topic, std::string payload);
  void subscribe(const std::string& topic,
                 std::function<void(const std::string&)> consumer);
  /// Delivers pending messages in publish order; returns count delivered.
  int drain();
  int lag() const;

 private:
  struct Pending {
    std::string topic;
    std::string payload;
  };
  std::deque<Pending> queue_;
  std::vector<std::pair<std::string, std::function<void(const std::string&)>>> consumers_;
};

std::string topic_for(const std::string& domain, const std::string& source_id);

/// Collector front-end: polls pull hosts, consumes push topics, tracks
/// liveness, and lands every accepted batch in the master store.
class ShellMonServer {
 public:
  ShellMonServer(HostRegistry registry, KpiStore& store, int liveness_misses = 3);

  void set_pull_transport(PullTransport* transport);
  /// Subscribes to the given topics on `bus`; consumed batches are stored.
  void run_subscription(const std::vector<std::string>& topics, MessageBus& bus);

  /// Polls one pull host; returns the parsed batch. Updates liveness
  /// state (a host is marked down after `liveness_misses` consecutive
  /// failures and revived by the next successful poll).
  KpiBatch poll_once(const std::string& source_id, TimeMs now);

  /// Polls every pull host that is not marked down; failures are counted,
  /// not raised.
  void poll_all(TimeMs now);

  bool host_down(const std::string& source_id) const;
  const HostRegistry& registry() const { return registry_; }
  /// Batches forwarded downstream (distributed mode wires this to the
  /// route server's /telemetry endpoint).
  void set_forwarder(std::function<void(const std::string&)> forward);

 private:
  void store_wire(const std::string& payload);

  HostRegistry registry_;
  KpiStore* store_;
  PullTransport* pull_ = nullptr;
  int liveness_misses_;
  std::map<std::string, int> misses_;
  std::set<std::string> down_;
  std::function<void(const std::string&)> forward_;
};

}  // namespace iraas::shellmon
