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

#include "lm/ngram_counts.h"

#include "common/error.h"

namespace sawt {

void NgramCounts::add_sentence(const std::vector<std::string>& words) {
  for (const std::string& w : words) {
    if (w.empty()) throw Error(ErrorKind::kData, "empty token in sentence");
    if (w == kSentStart || w == kSentEnd)
      throw Error(ErrorKind::kData, "sentence contains reserved marker token " + w);
  }
  std::string prev = kSentStart;
  ++unigrams[kSentStart];
  ++total_tokens;
  for (const std::string& w : words) {
    ++unigrams[w];
    ++total_tokens;
    ++bigrams[{prev, w}];
    prev = w;
  }
  ++unigrams[kSentEnd];
  ++total_tokens;
  ++bigrams[{prev, kSentEnd}];
  ++num_sentences;
}

void NgramCounts::merge(const NgramCounts& other) {
  for (const auto& [w, c] : other.unigrams) unigrams[w] += c;
  for (const auto& [b, c] : other.bigrams) bigrams[b] += c;
  total_tokens += other.total_tokens;
  num_sentences += other.num_sentences;
}

NgramCounts count_ngrams(const std::vector<std::vector<std::string>>& sentences) {
  if (sentences.empty()) throw Error(ErrorKind::kData, "empty corpus");
  NgramCounts counts;
  for (const auto& s : sentences) counts.add_sentence(s);
  return counts;
}

}  // namespace sawt
