#pragma once

#include <cstdarg>
#include <cstdio>
#include <string>

namespace causalbound::detail {

inline std::string format(const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

} // namespace causalbound::detail
