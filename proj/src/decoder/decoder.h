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

#ifndef SAWT_DECODER_DECODER_H_
#define SAWT_DECODER_DECODER_H_

#include <string>
#include <vector>

#include "am/acoustic_model.h"
#include "frontend/feature_matrix.h"
#include "lexicon/lexicon.h"
#include "lm/bigram_lm.h"

namespace sawt {

struct DecoderConfig {
  double beam = 1e-60;                   // linear-domain pruning width, converted to log
  int max_active = 20000;                // token cap per frame
  double lm_weight = 9.0;                // scale on natural-log LM scores
  double word_insertion_penalty = 0.7;   // linear, applied as ln() per emitted word
  bool silence_insertion = true;         // optional SIL between words
  bool use_triphones = false;            // within-word context expansion
  double frame_shift_seconds = 0.010;    // only for the real-time factor

  void validate() const;  // throws Error(kUsage)
};

struct DecodedWord {
  std::string word;
  int variant = 1;
  int begin_frame = 0;  // inclusive
  int end_frame = 0;    // exclusive
};

// The word spans tile [0, T]: each begins where the previous one ended and
// optional silences are absorbed into the following (leading) or last
// (trailing) word's span.
struct DecodeResult {
  std::vector<DecodedWord> words;
  double log_score = 0.0;       // acoustic + lm_weight * ln P(W) + penalties
  bool found = false;           // false when every token was pruned
  double real_time_factor = 0.0;

  std::vector<std::string> word_labels() const;
};

// Time-synchronous Viterbi beam search with token passing over flat
// per-word HMM chains. The bigram LM is applied where one word's exit
// feeds the next word's entry; an utterance scores
//   max over word sequences, state paths:
//     acoustic(path) + lm_weight * ln P(W) + n_words * ln(wip)
// with P(W) including the <s>/</s> terms.
class Decoder {
 public:
  // Builds the static network; throws Error(kData) on an empty lexicon or
  // phones missing from the model. Lexicon words absent from the LM are
  // excluded from the decoding vocabulary with a warning (unless the LM
  // has <unk>); it is an error when nothing remains.
  Decoder(const AcousticModel& model, const BigramLm& lm, const Lexicon& lexicon,
          DecoderConfig config);

  DecodeResult decode(const FeatureMatrix& features) const;

  const DecoderConfig& config() const { return config_; }

 private:
  struct NetState {
    int gmm_slot = 0;       // shared emission cache slot
    int owner_instance = -1;  // word instance, or -1 for silence copies
    int silence_history = -1; // LM history for silence copies
  };
  struct EntryArc {
    int state;
    double logp;
  };
  struct FinalArc {
    int state;
    double logp;
  };
  struct WordInstance {
    int lm_word;  // index into words_
    int variant;
    std::vector<EntryArc> entries;
    std::vector<FinalArc> finals;
  };
  struct SilenceCopy {
    std::vector<EntryArc> entries;
    std::vector<FinalArc> finals;
  };
  struct NetArc {
    int from, to;
    double logp;
  };

  void add_instance_states(const std::vector<PhoneUnit>& units, int instance_id,
                           int silence_history, std::vector<EntryArc>* entries,
                           std::vector<FinalArc>* finals);

  const AcousticModel& model_;
  DecoderConfig config_;
  double log_beam_;
  double log_wip_;

  std::vector<std::string> words_;          // lexicon base labels
  std::vector<WordInstance> instances_;     // one per pronunciation
  std::vector<SilenceCopy> silences_;       // one per history (words + <s>)
  std::vector<NetState> states_;
  std::vector<NetArc> arcs_;                // grouped by from-state
  std::vector<int> arc_begin_;              // per state, index into arcs_
  std::vector<const Gmm*> gmm_slots_;
  // lm_weight * ln P(w | h); rows: histories (words, then <s>); cols: words.
  std::vector<std::vector<double>> lm_trans_;
  std::vector<double> lm_final_;            // lm_weight * ln P(</s> | h)
};

// One-shot convenience wrapper.
DecodeResult decode(const AcousticModel& model, const BigramLm& lm, const Lexicon& lexicon,
                    const FeatureMatrix& features, const DecoderConfig& config);

}  // namespace sawt

#endif  // SAWT_DECODER_DECODER_H_
