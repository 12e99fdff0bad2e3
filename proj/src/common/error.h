// Copyright 2026 The Sawt Authors
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

#ifndef SAWT_COMMON_ERROR_H_
#define SAWT_COMMON_ERROR_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace sawt {

// Error categories; the CLI and the C API map these onto exit/status codes.
enum class ErrorKind {
  kUsage,    // bad arguments or configuration
  kData,     // malformed or inconsistent input data
  kIo,       // file system failure
  kNumeric,  // numerical failure (no valid path, underflow, ...)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

template <typename... Args>
std::string str_cat(Args&&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace sawt

#endif  // SAWT_COMMON_ERROR_H_
