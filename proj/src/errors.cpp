// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#include "iraas/errors.hpp"

namespace iraas {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_input: return "EmptyInput";
    case Errc::duplicate_controller: return "DuplicateController";
    case Errc::invalid_designated: return "InvalidDesignated";
    case Errc::negative_cost: return "NegativeCost";
    case Errc::not_simple_graph: return "NotSimpleGraph";
    case Errc::weight_sum_violation: return "WeightSumViolation";
    case Errc::empty_attribute_set: return "EmptyAttributeSet";
    case Errc::unknown_attribute: return "UnknownAttribute";
    case Errc::preset_mismatch: return "PresetMismatch";
    case Errc::missing_attribute: return "MissingAttribute";
    case Errc::non_finite_input: return "NonFiniteInput";
    case Errc::window_too_short: return "WindowTooShort";
    case Errc::missing_link_sample: return "MissingLinkSample";
    case Errc::checksum_mismatch: return "ChecksumMismatch";
    case Errc::malformed_package: return "MalformedPackage";
    case Errc::unknown_algorithm: return "UnknownAlgorithm";
    case Errc::bad_cutoff: return "BadCutoff";
    case Errc::graph_too_large: return "GraphTooLarge";
    case Errc::forest_graph_mismatch: return "ForestGraphMismatch";
    case Errc::unknown_link: return "UnknownLink";
    case Errc::unknown_node: return "UnknownNode";
    case Errc::no_route: return "NoRoute";
    case Errc::unreachable_destination: return "UnreachableDestination";
    case Errc::invalid_query: return "InvalidQuery";
    case Errc::duplicate_intent_id: return "DuplicateIntentId";
    case Errc::no_controllers: return "NoControllers";
    case Errc::all_controllers_unreachable: return "AllControllersUnreachable";
    case Errc::malformed_topology_document: return "MalformedTopologyDocument";
    case Errc::server_unreachable: return "ServerUnreachable";
    case Errc::timeout: return "Timeout";
    case Errc::response_validation_failed: return "ResponseValidationFailed";
    case Errc::unknown_controller_for_node: return "UnknownControllerForNode";
    case Errc::parse_error: return "ParseError";
    case Errc::duplicate_source_id: return "DuplicateSourceId";
    case Errc::unknown_mode: return "UnknownMode";
    case Errc::host_unreachable: return "HostUnreachable";
    case Errc::malformed_batch: return "MalformedBatch";
    case Errc::bus_unreachable: return "BusUnreachable";
    case Errc::device_read_failure: return "DeviceReadFailure";
    case Errc::bad_spec: return "BadSpec";
    case Errc::clock_regression: return "ClockRegression";
    case Errc::unknown_controller: return "UnknownController";
    case Errc::unknown_device: return "UnknownDevice";
    case Errc::unknown_pair: return "UnknownPair";
    case Errc::unknown_source: return "UnknownSource";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

int errc_exit_code(Errc c) {
  switch (c) {
    case Errc::empty_input:
    case Errc::duplicate_controller:
    case Errc::invalid_designated:
    case Errc::negative_cost:
    case Errc::not_simple_graph:
    case Errc::weight_sum_violation:
    case Errc::empty_attribute_set:
    case Errc::unknown_attribute:
    case Errc::preset_mismatch:
    case Errc::missing_attribute:
    case Errc::non_finite_input:
    case Errc::window_too_short:
    case Errc::unknown_algorithm:
    case Errc::bad_cutoff:
    case Errc::invalid_query:
    case Errc::duplicate_intent_id:
    case Errc::no_controllers:
    case Errc::parse_error:
    case Errc::duplicate_source_id:
    case Errc::unknown_mode:
    case Errc::bad_spec:
    case Errc::unknown_pair:
    case Errc::unknown_source:
    case Errc::unknown_node:
    case Errc::malformed_package:
      return 1;  // validation
    case Errc::io_error:
      return 3;
    default:
      return 2;  // runtime pipeline
  }
}

}  // namespace iraas
