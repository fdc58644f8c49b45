#include "jsparse/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace jsparse::log {
namespace {

Level parse_level() {
  const char* env = std::getenv("JSPARSE_LOG");
  if (env == nullptr) return Level::kInfo;
  if (std::strcmp(env, "error") == 0) return Level::kError;
  if (std::strcmp(env, "debug") == 0) return Level::kDebug;
  return Level::kInfo;
}

std::mutex& mu() {
  static std::mutex m;
  return m;
}

void emit(const char* tag, const std::string& msg) {
  std::lock_guard<std::mutex> lock(mu());
  std::fprintf(stderr, "[%s] %s\n", tag, msg.c_str());
}

}  // namespace

Level level() {
  static Level lvl = parse_level();
  return lvl;
}

void error(const std::string& msg) { emit("error", msg); }

void warn(const std::string& msg) { emit("warn", msg); }

void info(const std::string& msg) {
  if (level() >= Level::kInfo) emit("info", msg);
}

void debug(const std::string& msg) {
  if (level() >= Level::kDebug) emit("debug", msg);
}

}  // namespace jsparse::log
