#pragma once

#include <string_view>

// Diagnostics on stderr, filtered by the TSCM_LOG environment variable
// (error|info|debug; default error).
namespace tscm::log {

enum class Level { error = 0, info = 1, debug = 2 };

Level threshold();
void set_threshold(Level level);

void write(Level level, std::string_view message);

inline void error(std::string_view message) { write(Level::error, message); }
// Warnings are reported at info level.
inline void warn(std::string_view message) { write(Level::info, message); }
inline void info(std::string_view message) { write(Level::info, message); }
inline void debug(std::string_view message) { write(Level::debug, message); }

}  // namespace tscm::log
