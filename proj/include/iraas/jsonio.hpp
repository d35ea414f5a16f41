// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "iraas/errors.hpp"

namespace iraas {

using json = nlohmann::json;
using TimeMs = std::int64_t;

/// Canonical serialization: object keys sorted (nlohmann default map
/// ordering), no insignificant whitespace, shortest round-trip floats.
/// Checksums and report byte-comparisons rely on this form.
inline std::string canonical_dump(const json& j) { return j.dump(); }

/// FNV-1a 64-bit. Any single-byte substitution in a message changes the
/// digest (the per-byte xor-multiply step is injective in the byte, and
/// multiplication by the odd prime is a bijection mod 2^64).
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v);

/// Parses `text` as JSON; wraps syntax errors in `err` with `what` context.
json parse_json(const std::string& text, Errc err, const std::string& what);

/// Field accessor that raises `err` instead of nlohmann's generic exception.
const json& require_field(const json& j, const std::string& key, Errc err);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace iraas
