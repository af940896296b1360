// rtdnn/common.hpp
//
// Copyright 2026 The rtdnn Authors
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

#ifndef RTDNN_COMMON_HPP_
#define RTDNN_COMMON_HPP_

#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rtdnn {

// Error taxonomy shared with the CLI exit codes: usage=1, data=2, numeric=3.
enum class ErrorKind { kUsage = 1, kData = 2, kNumeric = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string strprintf(const char* fmt, ...) {
  va_list ap;
  va_start(ap, fmt);
  char buf[1024];
  vsnprintf(buf, sizeof(buf), fmt, ap);
  va_end(ap);
  return std::string(buf);
}

[[noreturn]] inline void throw_usage(const std::string& msg) {
  throw Error(ErrorKind::kUsage, msg);
}
[[noreturn]] inline void throw_data(const std::string& msg) {
  throw Error(ErrorKind::kData, msg);
}
[[noreturn]] inline void throw_numeric(const std::string& msg) {
  throw Error(ErrorKind::kNumeric, msg);
}

// Uniform draws built directly on the mt19937_64 bit stream so that results
// are identical on every platform (std::uniform_real_distribution is not).
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

inline std::vector<std::string> split_char(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline double parse_double(const std::string& tok, const std::string& what) {
  size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw_data("cannot parse " + what + " from '" + tok + "'");
  }
  if (used != tok.size())
    throw_data("trailing characters in " + what + " '" + tok + "'");
  return v;
}

inline long parse_long(const std::string& tok, const std::string& what) {
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    throw_data("cannot parse " + what + " from '" + tok + "'");
  }
  if (used != tok.size())
    throw_data("trailing characters in " + what + " '" + tok + "'");
  return v;
}

// Shortest decimal form that round-trips a double exactly (17 significant
// digits is always sufficient for IEEE binary64).
inline std::string format_double_exact(double v) {
  char buf[64];
  snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

}  // namespace rtdnn

#endif  // RTDNN_COMMON_HPP_
