#include "colexnet/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace colexnet {

static LogLevel parse_level() {
    const char* env = std::getenv("COLEXNET_LOG");
    if (!env) return LogLevel::info;
    std::string v(env);
    if (v == "quiet" || v == "0" || v == "none") return LogLevel::quiet;
    if (v == "debug" || v == "2") return LogLevel::debug;
    return LogLevel::info;
}

LogLevel log_level() {
    static const LogLevel level = parse_level();
    return level;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::info) std::fprintf(stderr, "[colexnet] %s\n", msg.c_str());
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::debug) std::fprintf(stderr, "[colexnet:debug] %s\n", msg.c_str());
}

} // namespace colexnet
