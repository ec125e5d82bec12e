#pragma once

#include <string>

namespace icdistill {

enum class LogLevel { kDebug = 0, kInfo = 1, kWarn = 2 };

// Level comes from ICDISTILL_LOG=debug|info (default: info), read once.
LogLevel log_level();

void log_debug(const std::string& msg);
void log_info(const std::string& msg);
void log_warn(const std::string& msg);

}  // namespace icdistill
