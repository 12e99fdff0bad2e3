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

#include "frontend/wav.h"

#include <cmath>
#include <cstdint>
#include <cstring>

#include "common/error.h"
#include "common/io.h"

namespace sawt {

namespace {

uint32_t read_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
         (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

uint16_t read_u16(std::istream& in) {
  unsigned char b[2];
  in.read(reinterpret_cast<char*>(b), 2);
  return static_cast<uint16_t>(b[0] | (b[1] << 8));
}

void write_u32(std::ostream& out, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xFF),
                        static_cast<unsigned char>((v >> 8) & 0xFF),
                        static_cast<unsigned char>((v >> 16) & 0xFF),
                        static_cast<unsigned char>((v >> 24) & 0xFF)};
  out.write(reinterpret_cast<char*>(b), 4);
}

void write_u16(std::ostream& out, uint16_t v) {
  unsigned char b[2] = {static_cast<unsigned char>(v & 0xFF),
                        static_cast<unsigned char>((v >> 8) & 0xFF)};
  out.write(reinterpret_cast<char*>(b), 2);
}

}  // namespace

AudioBuffer read_wav(const std::string& path) {
  std::ifstream in = open_input_binary(path);

  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0)
    throw Error(ErrorKind::kData, "not a RIFF file: " + path);
  read_u32(in);  // overall size, unused
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0)
    throw Error(ErrorKind::kData, "not a WAVE file: " + path);

  bool have_fmt = false;
  uint16_t format = 0, channels = 0, bits = 0;
  uint32_t sample_rate = 0;
  AudioBuffer audio;
  bool have_data = false;

  while (in.peek() != EOF) {
    in.read(tag, 4);
    if (!in) break;
    uint32_t size = read_u32(in);
    if (!in) throw Error(ErrorKind::kData, "truncated chunk header in " + path);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (size < 16) throw Error(ErrorKind::kData, "fmt chunk too small in " + path);
      format = read_u16(in);
      channels = read_u16(in);
      sample_rate = read_u32(in);
      read_u32(in);  // byte rate
      read_u16(in);  // block align
      bits = read_u16(in);
      in.ignore(size - 16);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      if (!have_fmt) throw Error(ErrorKind::kData, "data chunk before fmt in " + path);
      if (format != 1)
        throw Error(ErrorKind::kData,
                    str_cat("unsupported encoding in ", path, ": format tag ", format,
                            " (only PCM is supported)"));
      if (channels != 1)
        throw Error(ErrorKind::kData,
                    str_cat("unsupported encoding in ", path, ": ", channels,
                            " channels (only mono is supported)"));
      if (bits != 16)
        throw Error(ErrorKind::kData,
                    str_cat("unsupported encoding in ", path, ": ", bits,
                            " bits per sample (only 16 is supported)"));
      uint32_t n = size / 2;
      if (n == 0) throw Error(ErrorKind::kData, "empty data chunk in " + path);
      audio.samples.resize(n);
      std::vector<unsigned char> raw(size);
      in.read(reinterpret_cast<char*>(raw.data()), size);
      if (!in) throw Error(ErrorKind::kData, "truncated data chunk in " + path);
      for (uint32_t i = 0; i < n; ++i) {
        int16_t s = static_cast<int16_t>(raw[2 * i] | (raw[2 * i + 1] << 8));
        audio.samples[i] = s / 32768.0;
      }
      have_data = true;
    } else {
      in.ignore(size + (size & 1));  // chunks are word aligned
    }
  }

  if (!have_fmt) throw Error(ErrorKind::kData, "missing fmt chunk in " + path);
  if (!have_data) throw Error(ErrorKind::kData, "missing data chunk in " + path);
  if (sample_rate == 0) throw Error(ErrorKind::kData, "zero sample rate in " + path);
  audio.sample_rate = static_cast<int>(sample_rate);
  return audio;
}

void write_wav(const std::string& path, const AudioBuffer& audio) {
  if (audio.sample_rate <= 0)
    throw Error(ErrorKind::kUsage, "write_wav: sample rate must be positive");
  std::ofstream out = open_output_binary(path);
  const uint32_t n = static_cast<uint32_t>(audio.samples.size());
  const uint32_t data_bytes = n * 2;

  out.write("RIFF", 4);
  write_u32(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_u32(out, 16);
  write_u16(out, 1);  // PCM
  write_u16(out, 1);  // mono
  write_u32(out, static_cast<uint32_t>(audio.sample_rate));
  write_u32(out, static_cast<uint32_t>(audio.sample_rate) * 2);
  write_u16(out, 2);
  write_u16(out, 16);
  out.write("data", 4);
  write_u32(out, data_bytes);
  for (double x : audio.samples) {
    double c = x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x);
    int16_t s = static_cast<int16_t>(std::lrint(c * 32767.0));
    write_u16(out, static_cast<uint16_t>(s));
  }
  if (!out) throw Error(ErrorKind::kIo, "short write to " + path);
}

}  // namespace sawt
