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

#ifndef SAWT_PIPELINE_SYNTH_H_
#define SAWT_PIPELINE_SYNTH_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sawt {

struct SynthOptions {
  std::string out_dir;
  int num_utterances = 300;
  uint64_t seed = 1;
  int sample_rate = 16000;
};

// The 20-word synthetic vocabulary; pronunciations cover all 37 phones.
const std::vector<std::pair<std::string, std::vector<std::string>>>& synth_vocabulary();

// Generates a deterministic pseudo-speech corpus: each phone is a fixed
// pair of sine tones with a raised-cosine envelope plus noise, words are
// phone segments back to back, and utterances carry leading/trailing
// silence. Writes, under out_dir:
//   wav/<id>.wav            16 kHz 16-bit mono
//   phones.txt              phone list
//   lexicon.dict            pronunciation dictionary
//   corpus.fileids          utterance ids
//   corpus.transcription    "WORDS (id)" lines
//   experiment.cfg          ready-to-run configuration
void synth_corpus(const SynthOptions& options);

}  // namespace sawt

#endif  // SAWT_PIPELINE_SYNTH_H_
