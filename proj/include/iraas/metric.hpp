// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iraas/graph.hpp"
#include "iraas/jsonio.hpp"
#include "iraas/telemetry.hpp"

namespace iraas::metric {

/// KPI attributes the engine understands. Units: throughput Mbit/s,
/// latency ms, jitter ms, load and reliability in [0,1].
const std::vector<std::string>& known_attributes();

enum class Kind { weighted_sum, eigrp_classic };

struct Transform {
  enum class Type { identity, inverse, scale };
  Type type = Type::identity;
  double k = 1.0;

  double apply(double x) const;
  std::string str() const;
  static Transform parse(const std::string& s);  // "identity"|"inverse"|"scale(k)"
};

/// Declarative cost function: weighted attribute mix or the classic
/// 256-scaled composite. Weights must lie on the unit simplex.
struct MetricSpec {
  std::string name;
  Kind kind = Kind::weighted_sum;
  std::vector<std::string> attributes;
  std::vector<double> weights;
  std::vector<Transform> transforms;
  std::map<std::string, double> params;  // K1..K5, alpha, window, risk_free, epsilon

  double param(const std::string& key, double fallback) const;

  json to_json() const;
  static MetricSpec from_json(const json& j);
};

/// Convenience presets ("latency", "eigrp-classic", "composite").
MetricSpec preset_metric(const std::string& name);

struct AttributeSample {
  std::map<std::string, double> values;
};

/// Bounded FIFO of (timestamp, value) with strictly increasing timestamps.
class RollingWindow {
 public:
  explicit RollingWindow(std::size_t capacity = 16);

  void push(TimeMs ts, double value);
  std::size_t size() const { return samples_.size(); }
  std::size_t capacity() const { return capacity_; }
  std::vector<double> values() const;
  TimeMs last_ts() const;
  const std::deque<std::pair<TimeMs, double>>& samples() const { return samples_; }

 private:
  std::size_t capacity_;
  std::deque<std::pair<TimeMs, double>> samples_;
};

struct Reliability {
  double score = 0.0;  // +/-inf sentinels allowed
  int window_len = 0;
  TimeMs computed_at = 0;

  json to_json() const;
};

// --- operations -----------------------------------------------------------

/// Returns the spec unchanged when the weight simplex (|sum-1| <= 1e-6),
/// arity and preset constraints hold; throws otherwise.
MetricSpec validate_metric_spec(const MetricSpec& spec);

double evaluate_metric(const MetricSpec& spec, const AttributeSample& sample);

/// Terms of the classic composite, scaled from KPI units:
///   s = 2.56e6 / throughput_mbps      (bandwidth term)
///   d = 25600 * latency_ms            (delay term)
///   load' = 255 * load, rel' = 255 * reliability
struct EigrpTerms {
  double s = 0.0;
  double d = 0.0;
  double load_scaled = 0.0;
  double rel_scaled = 255.0;
};

EigrpTerms eigrp_terms(const AttributeSample& sample);

/// (K1*s + K2*s/(256-load') + K3*d) * (K5 == 0 ? 1 : K5/(rel'+K4))
double eigrp_compose(const EigrpTerms& t, double k1, double k2, double k3,
                     double k4, double k5);

/// Sharpe score of the window: (mean - risk_free) / population std.
/// Zero variance (std < epsilon) yields +inf when mean > risk_free and
/// -inf otherwise.
Reliability sharpe_reliability(const RollingWindow& w, double risk_free,
                               double epsilon);

/// Default pluggable predictor: exponential smoothing (factor alpha) of
/// the windowed score series, extrapolated flat over the horizon.
Reliability predict_reliability(const RollingWindow& history, int horizon,
                                double alpha = 0.3);

struct WeightReport {
  std::vector<std::string> missing;  // links priced +inf in lenient mode
};

/// Prices every telemetry link of `g` as evaluate_metric(spec, sample).
/// Pseudo and split-internal links keep their fixed costs; links marked
/// down stay at +inf. Missing samples throw in strict mode and are priced
/// +inf (and reported) in lenient mode.
WeightReport weight_graph(graph::NormalizedGraph& g, const MetricSpec& spec,
                          const shellmon::KpiSnapshot& snapshot,
                          bool lenient = false);

/// Per-link rolling windows of metric cost values, fed from the KPI store.
class WindowBank {
 public:
  explicit WindowBank(std::size_t capacity = 16) : capacity_(capacity) {}

  /// Pushes cost values for samples newer than the last seen timestamp of
  /// each link. Returns the number of samples folded in.
  int update(const shellmon::KpiStore& store, const MetricSpec& spec,
             const std::vector<std::string>& link_ids);

  const RollingWindow* window(const std::string& link_id) const;

  /// Per-tick cost series of a path: sum of link costs over the common
  /// timestamps of all its links (most recent `capacity` ticks). Link
  /// order fixes the summation order.
  std::vector<std::pair<TimeMs, double>> path_series(
      const std::vector<std::string>& link_ids) const;

 private:
  std::size_t capacity_;
  std::map<std::string, RollingWindow> windows_;
  std::map<std::string, TimeMs> seen_;
};

}  // namespace iraas::metric
