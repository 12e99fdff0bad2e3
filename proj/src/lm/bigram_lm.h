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

#ifndef SAWT_LM_BIGRAM_LM_H_
#define SAWT_LM_BIGRAM_LM_H_

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lm/ngram_counts.h"

namespace sawt {

// Backoff bigram model, log10 domain throughout.
//
// P(w|h) = explicit bigram probability when the pair was seen, otherwise
// backoff(h) * P(w). For every history the conditionals sum to 1.
class BigramLm {
 public:
  struct Unigram {
    double logp = 0.0;     // log10 P(w)
    double backoff = 0.0;  // log10 alpha(w), 0 when w never opens a bigram
  };

  bool has_word(const std::string& w) const { return unigrams_.count(w) > 0; }
  bool has_unknown() const { return has_word(kUnknown); }

  double unigram_logp(const std::string& w) const;
  double backoff_weight(const std::string& h) const;
  std::optional<double> bigram_logp(const std::string& h, const std::string& w) const;

  // Backoff-resolved log10 P(w|h). Out-of-vocabulary tokens map to <unk>
  // when the model has one, otherwise this throws Error(kData).
  double cond_logp(const std::string& h, const std::string& w) const;

  // log10 probability of <s> words... </s>; an empty sentence scores
  // P(</s>|<s>).
  double sentence_logp(const std::vector<std::string>& words) const;

  const std::vector<std::string>& vocab() const { return vocab_; }  // sorted
  int vocab_size() const { return static_cast<int>(vocab_.size()); }
  // Vocabulary entries excluding the <s>/</s> markers, i.e. what users
  // think of as words.
  int word_count() const;

  int num_bigrams() const { return static_cast<int>(bigrams_.size()); }

  void set_unigram(const std::string& w, double logp, double backoff);
  void set_bigram(const std::string& h, const std::string& w, double logp);

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, Unigram> unigrams_;
  std::map<std::pair<std::string, std::string>, double> bigrams_;
};

// Witten-Bell discounted bigram estimation.
//
// Unigrams are maximum likelihood over all tokens (markers included), so
// they form a proper distribution. For a history h with token count c(h)
// and T(h) distinct successors:
//   P(w|h)  = c(h,w) / (c(h) + T(h))          for seen bigrams
//   alpha(h) = (T(h) / (c(h) + T(h))) / (1 - sum_{seen w} P(w))
// Histories that never open a bigram get alpha 1.
BigramLm estimate_bigram(const NgramCounts& counts);

// ARPA text serialization.
//
// FILE FORMAT: a "\data\" header with "ngram 1=<n1>" / "ngram 2=<n2>"
// count lines, a "\1-grams:" section of "<log10p> <word> <log10 backoff>"
// lines, a "\2-grams:" section of "<log10p> <w1> <w2>" lines, and a
// closing "\end\" marker.
// Probabilities are written with 6 decimals; the round trip is within 1e-6.
// The reader enforces the declared counts and the end marker.
void write_arpa(const BigramLm& lm, const std::string& path);
BigramLm read_arpa(const std::string& path);

}  // namespace sawt

#endif  // SAWT_LM_BIGRAM_LM_H_
