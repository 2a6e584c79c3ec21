#include "tscm/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace tscm::log {
namespace {

Level from_env() {
    const char* env = std::getenv("TSCM_LOG");
    if (env == nullptr) return Level::error;
    const std::string_view value = env;
    if (value == "debug") return Level::debug;
    if (value == "info") return Level::info;
    return Level::error;
}

std::atomic<Level>& level_ref() {
    static std::atomic<Level> level{from_env()};
    return level;
}

std::string_view tag(Level level) {
    switch (level) {
        case Level::error: return "error";
        case Level::info: return "info";
        case Level::debug: return "debug";
    }
    return "?";
}

}  // namespace

Level threshold() { return level_ref().load(std::memory_order_relaxed); }

void set_threshold(Level level) { level_ref().store(level, std::memory_order_relaxed); }

void write(Level level, std::string_view message) {
    if (static_cast<int>(level) > static_cast<int>(threshold())) return;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    std::cerr << "[tscm " << tag(level) << "] " << message << '\n';
}

}  // namespace tscm::log
