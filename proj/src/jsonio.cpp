// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#include "iraas/jsonio.hpp"

#include <fstream>
#include <sstream>

namespace iraas {

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

json parse_json(const std::string& text, Errc err, const std::string& what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(err, what + ": invalid JSON");
  return j;
}

const json& require_field(const json& j, const std::string& key, Errc err) {
  auto it = j.find(key);
  if (it == j.end()) fail(err, "missing field '" + key + "'");
  return *it;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), Errc::parse_error, path);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  out << content;
  if (!out) fail(Errc::io_error, "short write to " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace iraas
