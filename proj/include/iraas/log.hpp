// SPDX-FileCopyrightText: © 2026 The iraas authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdio>
#include <string>

namespace iraas::log {

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// Level comes from IRAAS_LOG_LEVEL (error|warn|info|debug), default warn.
Level threshold();
void set_threshold(Level l);

void write(Level l, const std::string& msg);

inline void error(const std::string& m) { write(Level::error, m); }
inline void warn(const std::string& m) { write(Level::warn, m); }
inline void info(const std::string& m) { write(Level::info, m); }
inline void debug(const std::string& m) { write(Level::debug, m); }

}  // namespace iraas::log
