#pragma once

#include <iostream>
#include <sstream>
#include <string>

namespace hfpinn::log {

enum class Level { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Level comes from HFPINN_LOG_LEVEL (error|warn|info|debug), default info.
Level threshold();

void write(Level level, const std::string& msg);

template <typename... Args>
void emit(Level level, Args&&... args) {
  if (level > threshold()) return;
  std::ostringstream os;
  (os << ... << args);
  write(level, os.str());
}

template <typename... Args>
void error(Args&&... args) { emit(Level::Error, std::forward<Args>(args)...); }
template <typename... Args>
void warn(Args&&... args) { emit(Level::Warn, std::forward<Args>(args)...); }
template <typename... Args>
void info(Args&&... args) { emit(Level::Info, std::forward<Args>(args)...); }
template <typename... Args>
void debug(Args&&... args) { emit(Level::Debug, std::forward<Args>(args)...); }

}  // namespace hfpinn::log
