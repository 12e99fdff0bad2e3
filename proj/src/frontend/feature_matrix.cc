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

#include "frontend/feature_matrix.h"

#include <cstdint>
#include <cstring>

#include "common/error.h"
#include "common/io.h"

namespace sawt {

namespace {
constexpr char kMagic[8] = {'S', 'A', 'W', 'T', 'F', 'E', 'A', 'T'};
constexpr uint32_t kVersion = 1;

void put_u32(std::ostream& out, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xFF),
                        static_cast<unsigned char>((v >> 8) & 0xFF),
                        static_cast<unsigned char>((v >> 16) & 0xFF),
                        static_cast<unsigned char>((v >> 24) & 0xFF)};
  out.write(reinterpret_cast<char*>(b), 4);
}

uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}
}  // namespace

void FeatureMatrix::save(const std::string& path) const {
  std::ofstream out = open_output_binary(path);
  out.write(kMagic, 8);
  put_u32(out, kVersion);
  put_u32(out, static_cast<uint32_t>(rows_));
  put_u32(out, static_cast<uint32_t>(cols_));
  // Host doubles are written verbatim; this toolkit assumes a little-endian
  // IEEE-754 host.
  out.write(reinterpret_cast<const char*>(data_.data()),
            static_cast<std::streamsize>(data_.size() * sizeof(double)));
  if (!out) throw Error(ErrorKind::kIo, "short write to " + path);
}

FeatureMatrix FeatureMatrix::load(const std::string& path) {
  std::ifstream in = open_input_binary(path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0)
    throw Error(ErrorKind::kData, "not a feature file: " + path);
  uint32_t version = get_u32(in);
  if (version != kVersion)
    throw Error(ErrorKind::kData, str_cat("unsupported feature file version ", version, " in ", path));
  uint32_t rows = get_u32(in);
  uint32_t cols = get_u32(in);
  if (!in) throw Error(ErrorKind::kData, "truncated feature file header: " + path);
  FeatureMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  in.read(reinterpret_cast<char*>(m.data_.data()),
          static_cast<std::streamsize>(m.data_.size() * sizeof(double)));
  if (!in) throw Error(ErrorKind::kData, "truncated feature file body: " + path);
  return m;
}

}  // namespace sawt
