#pragma once

#include <string>

namespace colexnet {

// Verbosity is read once from the COLEXNET_LOG environment variable:
// "quiet"/"0", "info"/"1" (default), "debug"/"2".
enum class LogLevel { quiet = 0, info = 1, debug = 2 };

LogLevel log_level();

void log_info(const std::string& msg);
void log_debug(const std::string& msg);

} // namespace colexnet
