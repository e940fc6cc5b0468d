// Copyright 2026 The OncoKG Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONCOKG_CLOCK_H_
#define ONCOKG_CLOCK_H_

#include <chrono>
#include <cstdio>
#include <ctime>
#include <functional>
#include <string>

namespace onco {

using TimePoint = std::chrono::system_clock::time_point;

// Injectable time source. Commands that must replay byte-identically
// (audit logs) take a Clock instead of reading the system clock directly.
using Clock = std::function<TimePoint()>;

inline Clock system_clock() {
  return [] { return std::chrono::system_clock::now(); };
}

inline Clock fixed_clock(TimePoint at) {
  return [at] { return at; };
}

inline Clock fixed_clock_epoch_seconds(std::int64_t seconds) {
  return fixed_clock(TimePoint(std::chrono::seconds(seconds)));
}

// ISO-8601 UTC, second resolution: 2023-11-14T22:13:20Z.
inline std::string format_utc(TimePoint tp) {
  std::time_t t = std::chrono::system_clock::to_time_t(tp);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buf;
}

}  // namespace onco

#endif  // ONCOKG_CLOCK_H_
