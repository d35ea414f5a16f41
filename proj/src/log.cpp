// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#include "iraas/log.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>

namespace iraas::log {

namespace {

Level g_threshold = Level::warn;
std::once_flag g_init;
std::mutex g_mu;

Level parse_env() {
  const char* v = std::getenv("IRAAS_LOG_LEVEL");
  if (!v) return Level::warn;
  if (std::strcmp(v, "error") == 0) return Level::error;
  if (std::strcmp(v, "warn") == 0) return Level::warn;
  if (std::strcmp(v, "info") == 0) return Level::info;
  if (std::strcmp(v, "debug") == 0) return Level::debug;
  return Level::warn;
}

const char* level_tag(Level l) {
  switch (l) {
    case Level::error: return "E";
    case Level::warn: return "W";
    case Level::info: return "I";
    case Level::debug: return "D";
  }
  return "?";
}

}  // namespace

Level threshold() {
  std::call_once(g_init, [] { g_threshold = parse_env(); });
  return g_threshold;
}

void set_threshold(Level l) {
  std::call_once(g_init, [] {});
  g_threshold = l;
}

void write(Level l, const std::string& msg) {
  if (static_cast<int>(l) > static_cast<int>(threshold())) return;
  std::lock_guard<std::mutex> lock(g_mu);
  std::fprintf(stderr, "[iraas %s] %s\n", level_tag(l), msg.c_str());
}

}  // namespace iraas::log
