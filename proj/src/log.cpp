#include "hfpinn/log.hpp"

#include <cstdlib>
#include <mutex>

namespace hfpinn::log {

namespace {

Level parse_level() {
  const char* env = std::getenv("HFPINN_LOG_LEVEL");
  if (env == nullptr) return Level::Info;
  const std::string v(env);
  if (v == "error") return Level::Error;
  if (v == "warn") return Level::Warn;
  if (v == "info") return Level::Info;
  if (v == "debug") return Level::Debug;
  return Level::Info;
}

const char* tag(Level level) {
  switch (level) {
    case Level::Error: return "error";
    case Level::Warn: return "warn";
    case Level::Info: return "info";
    case Level::Debug: return "debug";
  }
  return "?";
}

std::mutex g_mutex;

}  // namespace

Level threshold() {
  static const Level level = parse_level();
  return level;
}

void write(Level level, const std::string& msg) {
  std::lock_guard<std::mutex> lock(g_mutex);
  std::cerr << "[" << tag(level) << "] " << msg << "\n";
}

}  // namespace hfpinn::log
