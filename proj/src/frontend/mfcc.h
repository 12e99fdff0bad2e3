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

#ifndef SAWT_FRONTEND_MFCC_H_
#define SAWT_FRONTEND_MFCC_H_

#include <cmath>

#include "frontend/feature_matrix.h"
#include "frontend/wav.h"

namespace sawt {

struct FrontendConfig {
  double pre_emphasis = 0.97;
  double frame_length_ms = 25.0;
  double frame_shift_ms = 10.0;
  int fft_size = 512;
  int num_filters = 40;
  int num_cepstra = 12;
  double low_freq = 133.0;
  double high_freq = 6855.0;
  double log_floor = std::log(1e-10);

  int frame_length(int sample_rate) const;  // samples
  int frame_shift(int sample_rate) const;
  void validate(int sample_rate) const;  // throws Error(kUsage)
};

// One row per frame: coordinate 0 is the log of the raw frame power
// (before pre-emphasis, floored at log_floor), coordinates 1..num_cepstra
// are DCT-II cepstra of the floored log mel filterbank (coefficient 0
// dropped). Frame count is 1 + floor((N - frame_length) / frame_shift); a
// trailing partial frame is dropped.
//
// Per frame the chain is: pre-emphasis (x[-1] taken as x[0]), Hamming
// window, zero-padded FFT, magnitude spectrum, triangular mel filterbank
// between low_freq and high_freq, log with floor, orthogonally scaled
// DCT-II.
FeatureMatrix compute_mfcc(const AudioBuffer& audio, const FrontendConfig& config);

// 13 -> 39 dims: columns 13..25 are linear-regression deltas over a
// symmetric window of half-width 2 (edges replicated), columns 26..38 the
// same applied to the deltas. Columns 0..12 are copied unchanged.
FeatureMatrix append_deltas(const FeatureMatrix& features);

// Per-utterance mean/variance normalization, column-wise. Population
// variance (divide by T); columns with variance below 1e-12 are only mean
// shifted. Requires T >= 2.
FeatureMatrix cmvn(const FeatureMatrix& features);

// compute_mfcc + append_deltas + cmvn.
FeatureMatrix extract_features(const AudioBuffer& audio, const FrontendConfig& config);

}  // namespace sawt

#endif  // SAWT_FRONTEND_MFCC_H_
