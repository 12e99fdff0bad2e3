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

#ifndef SAWT_COMMON_IO_H_
#define SAWT_COMMON_IO_H_

#include <fstream>
#include <string>
#include <vector>

namespace sawt {

// Throws Error(kIo) if the file cannot be opened.
std::ifstream open_input(const std::string& path);
std::ofstream open_output(const std::string& path);
std::ifstream open_input_binary(const std::string& path);
std::ofstream open_output_binary(const std::string& path);

// All lines, '\n'-separated, trailing '\r' stripped.
std::vector<std::string> read_lines(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

bool file_exists(const std::string& path);
void require_file(const std::string& path, const std::string& what);
void make_directories(const std::string& path);

std::string path_join(const std::string& a, const std::string& b);

}  // namespace sawt

#endif  // SAWT_COMMON_IO_H_
