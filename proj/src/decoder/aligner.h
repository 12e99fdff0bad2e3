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

#ifndef SAWT_DECODER_ALIGNER_H_
#define SAWT_DECODER_ALIGNER_H_

#include <string>
#include <vector>

#include "am/composite_hmm.h"
#include "am/trainer.h"

namespace sawt {

struct PhoneSpan {
  std::string label;
  int unit_seq = 0;
  int begin = 0;  // frame index, inclusive
  int end = 0;    // exclusive
};

struct AlignmentPath {
  double log_score = 0.0;
  std::vector<int> state_path;  // composite state per frame
  std::vector<PhoneSpan> spans;
};

// Best state path through the composite graph (max instead of sum).
// Throws Error(kNumeric) when no path fits the frame count.
AlignmentPath viterbi_align(const CompositeHmm& hmm, const FeatureMatrix& features);

// Convenience: compose `phones` against the model first.
AlignmentPath viterbi_align(const AcousticModel& model, const FeatureMatrix& features,
                            const std::vector<std::string>& phones, bool triphones = false);

// Re-scores a returned path with the same accumulation order the DP uses;
// parallel arcs contribute their best weight.
double score_state_path(const CompositeHmm& hmm, const FeatureMatrix& features,
                        const std::vector<int>& path);

}  // namespace sawt

#endif  // SAWT_DECODER_ALIGNER_H_
