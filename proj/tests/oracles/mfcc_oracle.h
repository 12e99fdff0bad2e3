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

// Straight-line reference for the MFCC chain, written from the documented
// definitions with no code shared with the implementation: naive O(N^2)
// DFT, its own mel/DCT arithmetic, plain loops throughout.

#ifndef SAWT_TESTS_ORACLES_MFCC_ORACLE_H_
#define SAWT_TESTS_ORACLES_MFCC_ORACLE_H_

#include <cmath>
#include <vector>

namespace sawt_test {

struct MfccOracleParams {
  double pre_emphasis = 0.97;
  double frame_length_ms = 25.0;
  double frame_shift_ms = 10.0;
  int fft_size = 512;
  int num_filters = 40;
  int num_cepstra = 12;
  double low_freq = 133.0;
  double high_freq = 6855.0;
  double log_floor = std::log(1e-10);
};

// Rows of [log raw power, c1..c12].
inline std::vector<std::vector<double>> mfcc_oracle(const std::vector<double>& samples,
                                                    int sample_rate,
                                                    const MfccOracleParams& p) {
  const double pi = std::acos(-1.0);
  const int flen = (int)std::lrint(p.frame_length_ms * sample_rate / 1000.0);
  const int fshift = (int)std::lrint(p.frame_shift_ms * sample_rate / 1000.0);
  const int n = (int)samples.size();
  const int num_frames = 1 + (n - flen) / fshift;

  std::vector<double> emphasized(n);
  for (int i = 0; i < n; ++i) {
    const double prev = i == 0 ? samples[0] : samples[i - 1];
    emphasized[i] = samples[i] - p.pre_emphasis * prev;
  }

  // mel edges
  const auto to_mel = [](double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); };
  const auto to_hz = [](double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); };
  std::vector<double> edge_hz(p.num_filters + 2);
  for (int j = 0; j < p.num_filters + 2; ++j)
    edge_hz[j] = to_hz(to_mel(p.low_freq) +
                       (to_mel(p.high_freq) - to_mel(p.low_freq)) * j / (p.num_filters + 1));

  std::vector<std::vector<double>> out;
  const int bins = p.fft_size / 2 + 1;
  for (int t = 0; t < num_frames; ++t) {
    const int start = t * fshift;

    double power = 0.0;
    for (int i = 0; i < flen; ++i) power += samples[start + i] * samples[start + i];
    double energy = std::log(power);
    if (!(energy > p.log_floor)) energy = p.log_floor;

    std::vector<double> windowed(p.fft_size, 0.0);
    for (int i = 0; i < flen; ++i)
      windowed[i] = emphasized[start + i] * (0.54 - 0.46 * std::cos(2.0 * pi * i / (flen - 1)));

    // naive DFT magnitudes
    std::vector<double> magnitude(bins);
    for (int k = 0; k < bins; ++k) {
      double re = 0.0, im = 0.0;
      for (int i = 0; i < p.fft_size; ++i) {
        const double angle = -2.0 * pi * k * i / p.fft_size;
        re += windowed[i] * std::cos(angle);
        im += windowed[i] * std::sin(angle);
      }
      magnitude[k] = std::sqrt(re * re + im * im);
    }

    std::vector<double> logmel(p.num_filters);
    for (int m = 0; m < p.num_filters; ++m) {
      double acc = 0.0;
      for (int k = 0; k < bins; ++k) {
        const double f = (double)k * sample_rate / p.fft_size;
        double w = 0.0;
        if (f > edge_hz[m] && f < edge_hz[m + 1])
          w = (f - edge_hz[m]) / (edge_hz[m + 1] - edge_hz[m]);
        else if (f >= edge_hz[m + 1] && f < edge_hz[m + 2])
          w = (edge_hz[m + 2] - f) / (edge_hz[m + 2] - edge_hz[m + 1]);
        acc += w * magnitude[k];
      }
      double lm = std::log(acc);
      if (!(lm > p.log_floor)) lm = p.log_floor;
      logmel[m] = lm;
    }

    std::vector<double> row(p.num_cepstra + 1);
    row[0] = energy;
    for (int c = 1; c <= p.num_cepstra; ++c) {
      double acc = 0.0;
      for (int m = 0; m < p.num_filters; ++m)
        acc += logmel[m] * std::cos(pi * c * (m + 0.5) / p.num_filters);
      row[c] = std::sqrt(2.0 / p.num_filters) * acc;
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace sawt_test

#endif  // SAWT_TESTS_ORACLES_MFCC_ORACLE_H_
