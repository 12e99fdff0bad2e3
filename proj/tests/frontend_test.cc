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

#include <doctest.h>

#include <cmath>
#include <random>

#include "common/error.h"
#include "frontend/mfcc.h"
#include "frontend/wav.h"
#include "oracles/mfcc_oracle.h"
#include "test_util.h"

using namespace sawt;
using sawt_test::TempDir;

namespace {

AudioBuffer sine(double freq, double seconds, double amplitude, int rate = 16000) {
  AudioBuffer audio;
  audio.sample_rate = rate;
  const int n = static_cast<int>(seconds * rate);
  audio.samples.resize(n);
  for (int i = 0; i < n; ++i)
    audio.samples[i] = amplitude * std::sin(2.0 * M_PI * freq * i / rate);
  return audio;
}

}  // namespace

TEST_CASE("wav round trip and scaling") {
  TempDir tmp("wav");
  // 4 samples scaled by 1/32768
  {
    AudioBuffer audio;
    audio.sample_rate = 16000;
    audio.samples = {0.0, 16384.0 / 32767.0, -16384.0 / 32767.0, 0.0};
    write_wav(tmp.file("x.wav"), audio);
    const AudioBuffer back = read_wav(tmp.file("x.wav"));
    CHECK(back.sample_rate == 16000);
    REQUIRE(back.samples.size() == 4);
    CHECK(back.samples[0] == 0.0);
    CHECK(back.samples[1] == doctest::Approx(16384.0 / 32768.0).epsilon(1e-12));
    CHECK(back.samples[2] == doctest::Approx(-16384.0 / 32768.0).epsilon(1e-12));
  }
  // synthesized sine survives quantization within one step
  {
    const AudioBuffer audio = sine(440.0, 1.0, 0.4);
    write_wav(tmp.file("sine.wav"), audio);
    const AudioBuffer back = read_wav(tmp.file("sine.wav"));
    CHECK(back.samples.size() == 16000);
    double max_amp = 0.0;
    for (double s : back.samples) max_amp = std::max(max_amp, std::fabs(s));
    CHECK(std::fabs(max_amp - 0.4) < 1.0 / 32768.0);
  }
}

TEST_CASE("wav reader rejects unsupported encodings") {
  TempDir tmp("wavbad");
  // hand-built 8-bit PCM header
  std::string bytes = "RIFF";
  auto u32 = [&](uint32_t v) {
    for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  };
  auto u16 = [&](uint16_t v) {
    for (int i = 0; i < 2; ++i) bytes.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  };
  u32(36 + 4);
  bytes += "WAVEfmt ";
  u32(16);
  u16(1);   // PCM
  u16(1);   // mono
  u32(16000);
  u32(16000);
  u16(1);
  u16(8);   // 8-bit
  bytes += "data";
  u32(4);
  bytes += "abcd";
  sawt_test::write_file(tmp.file("bad.wav"), bytes);
  CHECK_THROWS_WITH_AS(read_wav(tmp.file("bad.wav")),
                       doctest::Contains("unsupported encoding"), Error);

  sawt_test::write_file(tmp.file("junk.wav"), "not a riff file at all");
  CHECK_THROWS_AS(read_wav(tmp.file("junk.wav")), Error);
}

TEST_CASE("frame count formula") {
  FrontendConfig config;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int flen = config.frame_length(16000);
    const int fshift = config.frame_shift(16000);
    const int n = flen + static_cast<int>(rng() % 20000);
    AudioBuffer audio;
    audio.sample_rate = 16000;
    audio.samples.assign(n, 0.0);
    audio.samples[0] = 0.1;  // avoid the all-zero shortcut mattering
    const FeatureMatrix f = compute_mfcc(audio, config);
    CHECK(f.rows() == 1 + (n - flen) / fshift);
    CHECK(f.cols() == 13);
  }
  AudioBuffer too_short;
  too_short.sample_rate = 16000;
  too_short.samples.assign(100, 0.0);
  CHECK_THROWS_AS(compute_mfcc(too_short, config), Error);
}

TEST_CASE("silence gives floored constant frames") {
  FrontendConfig config;
  AudioBuffer audio;
  audio.sample_rate = 16000;
  audio.samples.assign(16000, 0.0);
  const FeatureMatrix f = compute_mfcc(audio, config);
  REQUIRE(f.rows() > 1);
  for (int t = 0; t < f.rows(); ++t) {
    CHECK(f.at(t, 0) == config.log_floor);
    for (int d = 0; d < 13; ++d) CHECK(f.at(t, d) == f.at(0, d));
    // DCT of a constant log-mel vector has no energy in coefficients >= 1
    for (int d = 1; d < 13; ++d) CHECK(std::fabs(f.at(t, d)) < 1e-9);
  }
}

TEST_CASE("mfcc matches the straight-line oracle") {
  FrontendConfig config;
  sawt_test::MfccOracleParams params;
  std::mt19937 rng(11);
  std::normal_distribution<double> noise(0.0, 0.1);

  for (int trial = 0; trial < 5; ++trial) {
    AudioBuffer audio = sine(300.0 + 200.0 * trial, 0.11, 0.3);
    for (double& s : audio.samples) s += noise(rng);
    const FeatureMatrix mine = compute_mfcc(audio, config);
    const auto oracle = sawt_test::mfcc_oracle(audio.samples, audio.sample_rate, params);
    REQUIRE(mine.rows() == static_cast<int>(oracle.size()));
    for (int t = 0; t < mine.rows(); ++t)
      for (int d = 0; d < 13; ++d)
        CHECK(std::fabs(mine.at(t, d) - oracle[t][d]) <=
              1e-6 * std::max(1.0, std::fabs(oracle[t][d])));
  }
}

TEST_CASE("amplitude doubling shifts energy by log 4 and keeps cepstra") {
  FrontendConfig config;
  AudioBuffer audio = sine(1000.0, 0.2, 0.2);
  AudioBuffer doubled = audio;
  for (double& s : doubled.samples) s *= 2.0;

  const FeatureMatrix a = compute_mfcc(audio, config);
  const FeatureMatrix b = compute_mfcc(doubled, config);
  REQUIRE(a.rows() == b.rows());
  for (int t = 0; t < a.rows(); ++t) {
    REQUIRE(a.at(t, 0) > config.log_floor);  // above the floor by construction
    CHECK(b.at(t, 0) == doctest::Approx(a.at(t, 0) + std::log(4.0)).epsilon(1e-9));
    for (int d = 1; d < 13; ++d) CHECK(b.at(t, d) == doctest::Approx(a.at(t, d)).epsilon(1e-6));
  }
}

TEST_CASE("energy is monotone under amplitude scaling") {
  FrontendConfig config;
  std::mt19937 rng(3);
  std::normal_distribution<double> noise(0.0, 0.05);
  AudioBuffer audio;
  audio.sample_rate = 16000;
  audio.samples.resize(8000);
  for (double& s : audio.samples) s = noise(rng);

  const FeatureMatrix base = compute_mfcc(audio, config);
  for (double k : {1.5, 2.0, 10.0}) {
    AudioBuffer scaled = audio;
    for (double& s : scaled.samples) s *= k;
    const FeatureMatrix f = compute_mfcc(scaled, config);
    for (int t = 0; t < f.rows(); ++t) CHECK(f.at(t, 0) >= base.at(t, 0));
  }
}

TEST_CASE("mfcc is deterministic") {
  FrontendConfig config;
  const AudioBuffer audio = sine(500.0, 0.1, 0.5);
  const FeatureMatrix a = compute_mfcc(audio, config);
  const FeatureMatrix b = compute_mfcc(audio, config);
  CHECK(a.data() == b.data());
}

TEST_CASE("deltas") {
  // constant input: all derivative columns zero
  {
    FeatureMatrix f(5, 13);
    for (int t = 0; t < 5; ++t)
      for (int d = 0; d < 13; ++d) f.at(t, d) = 3.5;
    const FeatureMatrix out = append_deltas(f);
    CHECK(out.cols() == 39);
    for (int t = 0; t < 5; ++t) {
      for (int d = 0; d < 13; ++d) CHECK(out.at(t, d) == 3.5);
      for (int d = 13; d < 39; ++d) CHECK(out.at(t, d) == 0.0);
    }
  }
  // single frame: zero deltas
  {
    FeatureMatrix f(1, 13);
    f.at(0, 2) = -1.25;
    const FeatureMatrix out = append_deltas(f);
    CHECK(out.rows() == 1);
    for (int d = 13; d < 39; ++d) CHECK(out.at(0, d) == 0.0);
    CHECK(out.at(0, 2) == -1.25);
  }
  // linear ramp c(t) = t: interior first deltas equal the regression slope
  // (1*(c[t+1]-c[t-1]) + 2*(c[t+2]-c[t-2])) / (2*(1+4)) = (2 + 8) / 10 = 1
  {
    const int T = 9;
    FeatureMatrix f(T, 13);
    for (int t = 0; t < T; ++t) f.at(t, 0) = t;
    const FeatureMatrix out = append_deltas(f);
    for (int t = 2; t < T - 2; ++t) CHECK(out.at(t, 13) == doctest::Approx(1.0).epsilon(1e-12));
  }
  // base columns are copied exactly
  {
    std::mt19937 rng(5);
    std::normal_distribution<double> noise;
    FeatureMatrix f(7, 13);
    for (int t = 0; t < 7; ++t)
      for (int d = 0; d < 13; ++d) f.at(t, d) = noise(rng);
    const FeatureMatrix out = append_deltas(f);
    for (int t = 0; t < 7; ++t)
      for (int d = 0; d < 13; ++d) CHECK(out.at(t, d) == f.at(t, d));
  }
}

TEST_CASE("cmvn") {
  // two-point standardization
  {
    FeatureMatrix f(2, 3);
    for (int d = 0; d < 3; ++d) {
      f.at(0, d) = 0.0;
      f.at(1, d) = 2.0;
    }
    const FeatureMatrix out = cmvn(f);
    for (int d = 0; d < 3; ++d) {
      CHECK(out.at(0, d) == doctest::Approx(-1.0).epsilon(1e-12));
      CHECK(out.at(1, d) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  // random matrix: definitional post-conditions
  {
    std::mt19937 rng(17);
    std::normal_distribution<double> noise(3.0, 2.0);
    FeatureMatrix f(50, 4);
    for (int t = 0; t < 50; ++t)
      for (int d = 0; d < 4; ++d) f.at(t, d) = noise(rng);
    const FeatureMatrix out = cmvn(f);
    for (int d = 0; d < 4; ++d) {
      double mean = 0.0, var = 0.0;
      for (int t = 0; t < 50; ++t) mean += out.at(t, d);
      mean /= 50;
      for (int t = 0; t < 50; ++t) var += (out.at(t, d) - mean) * (out.at(t, d) - mean);
      var /= 50;
      CHECK(std::fabs(mean) < 1e-9);
      CHECK(std::fabs(var - 1.0) < 1e-9);
    }
  }
  // constant column: variance guard, output all zeros
  {
    FeatureMatrix f(10, 2);
    for (int t = 0; t < 10; ++t) {
      f.at(t, 0) = 7.0;
      f.at(t, 1) = t;
    }
    const FeatureMatrix out = cmvn(f);
    for (int t = 0; t < 10; ++t) CHECK(out.at(t, 0) == 0.0);
  }
  // idempotence
  {
    std::mt19937 rng(23);
    std::normal_distribution<double> noise;
    FeatureMatrix f(20, 3);
    for (int t = 0; t < 20; ++t)
      for (int d = 0; d < 3; ++d) f.at(t, d) = noise(rng);
    const FeatureMatrix once = cmvn(f);
    const FeatureMatrix twice = cmvn(once);
    for (int t = 0; t < 20; ++t)
      for (int d = 0; d < 3; ++d) CHECK(std::fabs(once.at(t, d) - twice.at(t, d)) < 1e-9);
  }
  FeatureMatrix single(1, 2);
  CHECK_THROWS_AS(cmvn(single), Error);
}

TEST_CASE("feature file round trip is bit exact") {
  TempDir tmp("feat");
  std::mt19937 rng(29);
  std::normal_distribution<double> noise;
  FeatureMatrix f(12, 39);
  for (int t = 0; t < 12; ++t)
    for (int d = 0; d < 39; ++d) f.at(t, d) = noise(rng);
  f.save(tmp.file("a.feat"));
  const FeatureMatrix back = FeatureMatrix::load(tmp.file("a.feat"));
  CHECK(back.rows() == 12);
  CHECK(back.cols() == 39);
  CHECK(back.data() == f.data());

  sawt_test::write_file(tmp.file("junk.feat"), "not a feature file");
  CHECK_THROWS_AS(FeatureMatrix::load(tmp.file("junk.feat")), Error);
}
