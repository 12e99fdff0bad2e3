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

#ifndef SAWT_PIPELINE_EXPERIMENT_CONFIG_H_
#define SAWT_PIPELINE_EXPERIMENT_CONFIG_H_

#include <cstdint>
#include <string>

#include "decoder/decoder.h"
#include "frontend/mfcc.h"

namespace sawt {

// One declarative key=value file drives every pipeline stage; any key can
// be overridden from the command line. '#' starts a comment.
//
// KEYS (defaults in experiment_config.cc):
//   paths:     phone_list dictionary fileids transcription audio_dir
//              out_dir lm_text wordlist score_ref score_hyp durations
//   frontend:  pre_emphasis frame_length_ms frame_shift_ms fft_size
//              num_filters num_cepstra low_freq high_freq log_floor
//   split:     test_fraction split_seed split_mode(random|by-tag)
//              test_tag_prefix
//   training:  em_iterations mixture_target min_mixture_occupancy
//              variance_floor_scale use_triphones
//   decoder:   beam max_active lm_weight word_insertion_penalty
//              silence_insertion
//   scoring:   phone_hyp_mode(lexicon|align)
//   misc:      threads synth_utterances synth_seed
struct ExperimentConfig {
  // paths
  std::string phone_list;
  std::string dictionary;
  std::string fileids;
  std::string transcription;
  std::string audio_dir;
  std::string out_dir = "exp";
  std::string lm_text;    // empty: train-split transcriptions
  std::string wordlist;   // compile-dict input
  std::string score_ref;  // standalone scoring
  std::string score_hyp;
  std::string durations;  // optional "id seconds" file for scoring

  FrontendConfig frontend;

  double test_fraction = 0.2;
  uint64_t split_seed = 7;
  std::string split_mode = "random";  // or "by-tag"
  std::string test_tag_prefix;

  int em_iterations = 8;
  int mixture_target = 4;
  double min_mixture_occupancy = 3.0;
  double variance_floor_scale = 1e-4;
  bool use_triphones = false;

  DecoderConfig decoder;

  std::string phone_hyp_mode = "lexicon";  // or "align"

  int threads = 1;
  int synth_utterances = 300;
  uint64_t synth_seed = 1;

  static ExperimentConfig load(const std::string& path);
  // Throws Error(kUsage) for unknown keys or unparsable values.
  void set(const std::string& key, const std::string& value);
  std::string to_string() const;  // full key=value dump
};

}  // namespace sawt

#endif  // SAWT_PIPELINE_EXPERIMENT_CONFIG_H_
