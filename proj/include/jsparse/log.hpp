#pragma once

#include <string>

// Minimal stderr logger controlled by the env var JSPARSE_LOG
// (error | info | debug). Default is info.

namespace jsparse::log {

enum class Level { kError = 0, kInfo = 1, kDebug = 2 };

Level level();

void error(const std::string& msg);
void warn(const std::string& msg);
void info(const std::string& msg);
void debug(const std::string& msg);

}  // namespace jsparse::log
