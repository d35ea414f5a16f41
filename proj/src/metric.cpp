// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#include "iraas/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace iraas::metric {

namespace {
constexpr double kInf = graph::kInf;
}

const std::vector<std::string>& known_attributes() {
  static const std::vector<std::string> attrs = {"jitter", "latency", "load", "reliability",
                                                 "throughput"};
  return attrs;
}

// --- transforms ---------------------------------------------------------------

double Transform::apply(double x) const {
  switch (type) {
    case Type::identity: return x;
    case Type::inverse:
      if (x == 0.0) fail(Errc::non_finite_input, "inverse transform of zero");
      return 1.0 / x;
    case Type::scale: return k * x;
  }
  return x;
}

std::string Transform::str() const {
  switch (type) {
    case Type::identity: return "identity";
    case Type::inverse: return "inverse";
    case Type::scale: {
      char buf[48];
      std::snprintf(buf, sizeof buf, "scale(%.17g)", k);
      return buf;
    }
  }
  return "identity";
}

Transform Transform::parse(const std::string& s) {
  if (s == "identity") return Transform{Type::identity, 1.0};
  if (s == "inverse") return Transform{Type::inverse, 1.0};
  if (s.rfind("scale(", 0) == 0 && s.back() == ')') {
    Transform t{Type::scale, 1.0};
    try {
      t.k = std::stod(s.substr(6, s.size() - 7));
    } catch (const std::exception&) {
      fail(Errc::bad_spec, "bad scale transform '" + s + "'");
    }
    if (!std::isfinite(t.k)) fail(Errc::non_finite_input, "scale factor in '" + s + "'");
    return t;
  }
  fail(Errc::bad_spec, "unknown transform '" + s + "'");
}

// --- MetricSpec ---------------------------------------------------------------

double MetricSpec::param(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

json MetricSpec::to_json() const {
  json j{{"name", name},
         {"kind", kind == Kind::weighted_sum ? "weighted-sum" : "eigrp-classic"},
         {"attributes", attributes},
         {"weights", weights}};
  std::vector<std::string> tf;
  for (const auto& t : transforms) tf.push_back(t.str());
  j["transforms"] = tf;
  j["params"] = json(params);
  return j;
}

MetricSpec MetricSpec::from_json(const json& j) {
  MetricSpec m;
  try {
    m.name = j.value("name", "");
    std::string kind = require_field(j, "kind", Errc::bad_spec).get<std::string>();
    if (kind == "weighted-sum")
      m.kind = Kind::weighted_sum;
    else if (kind == "eigrp-classic")
      m.kind = Kind::eigrp_classic;
    else
      fail(Errc::bad_spec, "unknown metric kind '" + kind + "'");
    m.attributes =
        require_field(j, "attributes", Errc::bad_spec).get<std::vector<std::string>>();
    m.weights = require_field(j, "weights", Errc::bad_spec).get<std::vector<double>>();
    if (j.contains("transforms"))
      for (const auto& t : j["transforms"]) m.transforms.push_back(Transform::parse(t.get<std::string>()));
    else
      m.transforms.assign(m.attributes.size(), Transform{});
    if (j.contains("params"))
      for (const auto& [k, v] : j["params"].items()) m.params[k] = v.get<double>();
  } catch (const json::exception& e) {
    fail(Errc::bad_spec, std::string("metric document: ") + e.what());
  }
  return m;
}

MetricSpec preset_metric(const std::string& name) {
  MetricSpec m;
  m.name = name;
  if (name == "latency") {
    m.attributes = {"latency"};
    m.weights = {1.0};
    m.transforms = {Transform{}};
    return m;
  }
  if (name == "composite") {
    m.attributes = {"latency", "load", "jitter"};
    m.weights = {0.6, 0.3, 0.1};
    m.transforms = {Transform{}, Transform{Transform::Type::scale, 100.0}, Transform{}};
    return m;
  }
  if (name == "eigrp-classic") {
    m.kind = Kind::eigrp_classic;
    m.attributes = {"throughput", "load", "latency", "reliability"};
    m.weights = {0.25, 0.25, 0.25, 0.25};
    m.transforms.assign(4, Transform{});
    return m;
  }
  fail(Errc::bad_spec, "unknown metric preset '" + name + "'");
}

// --- validation ----------------------------------------------------------------

MetricSpec validate_metric_spec(const MetricSpec& spec) {
  if (spec.attributes.empty()) fail(Errc::empty_attribute_set, "metric has no attributes");
  if (spec.weights.size() != spec.attributes.size() ||
      spec.transforms.size() != spec.attributes.size())
    fail(Errc::bad_spec, "attributes, weights and transforms must have equal length");

  const auto& known = known_attributes();
  std::set<std::string> seen;
  for (const auto& a : spec.attributes) {
    if (std::find(known.begin(), known.end(), a) == known.end())
      fail(Errc::unknown_attribute, a);
    if (!seen.insert(a).second) fail(Errc::unknown_attribute, "attribute listed twice: " + a);
  }

  double sum = 0.0;
  for (double w : spec.weights) {
    if (!std::isfinite(w)) fail(Errc::non_finite_input, "weight");
    if (w < 0.0 || w > 1.0) fail(Errc::weight_sum_violation, "weight outside [0,1]");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-6)
    fail(Errc::weight_sum_violation, "weights sum to " + std::to_string(sum));

  if (spec.kind == Kind::eigrp_classic) {
    std::set<std::string> want = {"throughput", "load", "latency", "reliability"};
    if (seen != want)
      fail(Errc::preset_mismatch,
           "eigrp-classic requires exactly {throughput, load, latency, reliability}");
  }
  return spec;
}

// --- evaluation ------------------------------------------------------------------

namespace {

double sample_value(const AttributeSample& s, const std::string& attr) {
  auto it = s.values.find(attr);
  if (it == s.values.end()) fail(Errc::missing_attribute, attr);
  if (!std::isfinite(it->second)) fail(Errc::non_finite_input, attr);
  return it->second;
}

}  // namespace

EigrpTerms eigrp_terms(const AttributeSample& sample) {
  EigrpTerms t;
  double throughput = sample_value(sample, "throughput");
  if (throughput <= 0) fail(Errc::non_finite_input, "throughput must be > 0");
  t.s = 2.56e6 / throughput;
  t.d = 25600.0 * sample_value(sample, "latency");
  t.load_scaled = 255.0 * sample_value(sample, "load");
  t.rel_scaled = 255.0 * sample_value(sample, "reliability");
  return t;
}

double eigrp_compose(const EigrpTerms& t, double k1, double k2, double k3, double k4,
                     double k5) {
  double inner = k1 * t.s + k3 * t.d;
  if (k2 != 0.0) {
    double denom = 256.0 - t.load_scaled;
    if (denom <= 0) fail(Errc::non_finite_input, "load term saturates the composite");
    inner += k2 * t.s / denom;
  }
  double outer = 1.0;
  if (k5 != 0.0) {
    double denom = t.rel_scaled + k4;
    if (denom <= 0) fail(Errc::non_finite_input, "reliability term saturates the composite");
    outer = k5 / denom;
  }
  return inner * outer;
}

double evaluate_metric(const MetricSpec& spec, const AttributeSample& sample) {
  double result = 0.0;
  if (spec.kind == Kind::weighted_sum) {
    for (std::size_t i = 0; i < spec.attributes.size(); ++i) {
      double v = spec.transforms[i].apply(sample_value(sample, spec.attributes[i]));
      result += spec.weights[i] * v;
    }
  } else {
    result = eigrp_compose(eigrp_terms(sample), spec.param("K1", 1.0), spec.param("K2", 0.0),
                           spec.param("K3", 1.0), spec.param("K4", 0.0), spec.param("K5", 0.0));
  }
  if (!std::isfinite(result) || result < 0.0)
    fail(Errc::non_finite_input, "metric evaluated to " + std::to_string(result));
  return result;
}

// --- rolling window / reliability -------------------------------------------------

RollingWindow::RollingWindow(std::size_t capacity) : capacity_(capacity) {
  if (capacity_ == 0) fail(Errc::bad_spec, "window capacity must be positive");
}

void RollingWindow::push(TimeMs ts, double value) {
  if (!samples_.empty() && ts <= samples_.back().first)
    fail(Errc::malformed_batch, "window timestamps must strictly increase");
  samples_.emplace_back(ts, value);
  while (samples_.size() > capacity_) samples_.pop_front();
}

std::vector<double> RollingWindow::values() const {
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const auto& [ts, v] : samples_) out.push_back(v);
  return out;
}

TimeMs RollingWindow::last_ts() const { return samples_.empty() ? 0 : samples_.back().first; }

json Reliability::to_json() const {
  json j{{"window_len", window_len}, {"computed_at", computed_at}};
  if (std::isinf(score))
    j["score"] = score > 0 ? "inf" : "-inf";
  else
    j["score"] = score;
  return j;
}

Reliability sharpe_reliability(const RollingWindow& w, double risk_free, double epsilon) {
  if (w.size() < 2) fail(Errc::window_too_short, "need at least 2 samples");
  if (!(epsilon > 0)) fail(Errc::bad_spec, "epsilon must be positive");

  const auto vals = w.values();
  double mean = 0.0;
  for (double v : vals) mean += v;
  mean /= double(vals.size());

  double var = 0.0;
  for (double v : vals) var += (v - mean) * (v - mean);
  var /= double(vals.size());  // population variance
  double sigma = std::sqrt(var);

  Reliability r;
  r.window_len = int(w.size());
  r.computed_at = w.last_ts();
  if (sigma < epsilon)
    r.score = mean > risk_free ? kInf : -kInf;
  else
    r.score = (mean - risk_free) / sigma;
  return r;
}

Reliability predict_reliability(const RollingWindow& history, int horizon, double alpha) {
  if (history.size() < 2) fail(Errc::window_too_short, "need at least 2 samples");
  if (horizon < 1) fail(Errc::bad_spec, "horizon must be positive");
  if (!(alpha > 0.0) || alpha > 1.0) fail(Errc::bad_spec, "alpha must be in (0,1]");

  const auto vals = history.values();
  double smoothed = vals.front();
  for (std::size_t i = 1; i < vals.size(); ++i)
    smoothed = alpha * vals[i] + (1.0 - alpha) * smoothed;

  // flat extrapolation: the horizon does not move the estimate
  Reliability r;
  r.score = smoothed;
  r.window_len = int(vals.size());
  r.computed_at = history.last_ts();
  return r;
}

// --- graph weighting ----------------------------------------------------------------

WeightReport weight_graph(graph::NormalizedGraph& g, const MetricSpec& spec,
                          const shellmon::KpiSnapshot& snapshot, bool lenient) {
  WeightReport report;
  for (auto& l : g.links) {
    if (l.kind != graph::LinkKind::telemetry) continue;  // fixed costs stay put
    const auto* sample = snapshot.find(l.link_id);
    if (sample == nullptr) {
      if (!lenient) fail(Errc::missing_link_sample, l.link_id);
      l.cost = kInf;
      report.missing.push_back(l.link_id);
      continue;
    }
    AttributeSample as{sample->values};
    l.cost = evaluate_metric(spec, as);
  }
  return report;
}

// --- window bank ----------------------------------------------------------------------

int WindowBank::update(const shellmon::KpiStore& store, const MetricSpec& spec,
                       const std::vector<std::string>& link_ids) {
  int folded = 0;
  for (const auto& id : link_ids) {
    auto series = store.series(id);
    auto it = windows_.find(id);
    if (it == windows_.end()) it = windows_.emplace(id, RollingWindow(capacity_)).first;
    auto seen_it = seen_.find(id);
    TimeMs seen = seen_it == seen_.end() ? std::numeric_limits<TimeMs>::min() : seen_it->second;
    for (const auto& s : series) {
      if (s.ts_ms > seen) {
        AttributeSample as{s.values};
        it->second.push(s.ts_ms, evaluate_metric(spec, as));
        seen = s.ts_ms;
        ++folded;
      }
    }
    seen_[id] = seen;
  }
  return folded;
}

const RollingWindow* WindowBank::window(const std::string& link_id) const {
  auto it = windows_.find(link_id);
  return it == windows_.end() ? nullptr : &it->second;
}

std::vector<std::pair<TimeMs, double>> WindowBank::path_series(
    const std::vector<std::string>& link_ids) const {
  std::vector<std::pair<TimeMs, double>> out;
  if (link_ids.empty()) return out;

  // timestamps present in every link's window
  std::map<TimeMs, int> counts;
  for (const auto& id : link_ids) {
    const auto* w = window(id);
    if (w == nullptr) return {};
    for (const auto& [ts, v] : w->samples()) counts[ts]++;
  }
  for (const auto& [ts, n] : counts) {
    if (n != int(link_ids.size())) continue;
    double sum = 0.0;
    for (const auto& id : link_ids) {  // link order fixes summation order
      const auto& samples = windows_.at(id).samples();
      for (const auto& [sts, v] : samples)
        if (sts == ts) {
          sum += v;
          break;
        }
    }
    out.emplace_back(ts, sum);
  }
  if (out.size() > capacity_) out.erase(out.begin(), out.end() - long(capacity_));
  return out;
}

}  // namespace iraas::metric
