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

#ifndef SAWT_LM_NGRAM_COUNTS_H_
#define SAWT_LM_NGRAM_COUNTS_H_

#include <map>
#include <string>
#include <vector>

namespace sawt {

inline constexpr const char* kSentStart = "<s>";
inline constexpr const char* kSentEnd = "</s>";
inline constexpr const char* kUnknown = "<unk>";

// Unigram and bigram counts over marker-augmented sentences. Ordered maps
// keep estimation and serialization deterministic.
struct NgramCounts {
  std::map<std::string, long> unigrams;
  std::map<std::pair<std::string, std::string>, long> bigrams;
  long total_tokens = 0;  // sum of unigram counts
  long num_sentences = 0;

  // Adds <s> ... </s> around the words. Marker tokens inside the sentence
  // are rejected (kData).
  void add_sentence(const std::vector<std::string>& words);
  void merge(const NgramCounts& other);
};

// Errors (kData) on an empty corpus. Empty sentences are allowed and count
// the (<s>, </s>) bigram.
NgramCounts count_ngrams(const std::vector<std::vector<std::string>>& sentences);

}  // namespace sawt

#endif  // SAWT_LM_NGRAM_COUNTS_H_
