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

#ifndef SAWT_COMMON_TEXT_H_
#define SAWT_COMMON_TEXT_H_

#include <cstdint>
#include <string>
#include <vector>

namespace sawt {

std::string trim(const std::string& s);
std::vector<std::string> split_ws(const std::string& s);
std::string join(const std::vector<std::string>& tokens, const std::string& sep);
std::string to_upper(const std::string& s);

// Decodes UTF-8 into Unicode codepoints. Throws Error(kData) on malformed
// byte sequences.
std::vector<uint32_t> utf8_decode(const std::string& s);

// "U+0645" style spelling for diagnostics.
std::string codepoint_repr(uint32_t cp);

// Strict numeric parsing; `what` names the value in the error message.
double parse_double(const std::string& s, const std::string& what);
long long parse_int(const std::string& s, const std::string& what);
bool parse_bool(const std::string& s, const std::string& what);

// Shortest decimal form that round-trips an IEEE double exactly.
std::string double_repr(double v);

}  // namespace sawt

#endif  // SAWT_COMMON_TEXT_H_
