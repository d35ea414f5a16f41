// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace iraas {

/// Error codes shared across the graph, metric, routing, client,
/// telemetry and simulator layers. CLI exit codes are derived from
/// the category of the code (validation / runtime / io).
enum class Errc {
  // graph model
  empty_input,
  duplicate_controller,
  invalid_designated,
  negative_cost,
  not_simple_graph,
  // metric engine
  weight_sum_violation,
  empty_attribute_set,
  unknown_attribute,
  preset_mismatch,
  missing_attribute,
  non_finite_input,
  window_too_short,
  missing_link_sample,
  // route engine
  checksum_mismatch,
  malformed_package,
  unknown_algorithm,
  bad_cutoff,
  graph_too_large,
  forest_graph_mismatch,
  unknown_link,
  unknown_node,
  no_route,
  unreachable_destination,
  invalid_query,
  // client
  duplicate_intent_id,
  no_controllers,
  all_controllers_unreachable,
  malformed_topology_document,
  server_unreachable,
  timeout,
  response_validation_failed,
  unknown_controller_for_node,
  // telemetry
  parse_error,
  duplicate_source_id,
  unknown_mode,
  host_unreachable,
  malformed_batch,
  bus_unreachable,
  device_read_failure,
  // simulator
  bad_spec,
  clock_regression,
  unknown_controller,
  unknown_device,
  // reporting / cli
  unknown_pair,
  unknown_source,
  io_error,
};

const char* errc_name(Errc c);

/// Exit-code partition: 0 success, 1 validation, 2 runtime pipeline, 3 I/O.
int errc_exit_code(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace iraas
