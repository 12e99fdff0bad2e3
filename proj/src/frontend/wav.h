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

#ifndef SAWT_FRONTEND_WAV_H_
#define SAWT_FRONTEND_WAV_H_

#include <string>
#include <vector>

namespace sawt {

struct AudioBuffer {
  std::vector<double> samples;  // normalized to [-1, 1]
  int sample_rate = 0;

  double duration_seconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
  }
};

// Reads a RIFF/WAVE file. Only 16-bit signed PCM mono is accepted; samples
// are scaled by 1/32768. Unknown chunks are skipped.
AudioBuffer read_wav(const std::string& path);

// Writes 16-bit signed PCM mono. Samples are clipped to [-1, 1] and
// quantized with round(x * 32767).
void write_wav(const std::string& path, const AudioBuffer& audio);

}  // namespace sawt

#endif  // SAWT_FRONTEND_WAV_H_
