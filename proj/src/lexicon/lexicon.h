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

#ifndef SAWT_LEXICON_LEXICON_H_
#define SAWT_LEXICON_LEXICON_H_

#include <string>
#include <unordered_map>
#include <vector>

#include "lexicon/phone_set.h"

namespace sawt {

struct LexiconEntry {
  std::string word;                 // base label, alternates share it
  int variant = 1;                  // 1 for the base pronunciation
  std::vector<std::string> phones;  // canonical phone-set spellings
};

// Pronunciation dictionary.
//
// FILE FORMAT: one entry per line,
//   WORD PH PH PH ...
//   WORD(2) PH PH ...        alternate pronunciations
// Word labels are opaque strings (no whitespace). Phones must belong to the
// phone set; matching is case-insensitive.
class Lexicon {
 public:
  static Lexicon parse(const std::string& path, const PhoneSet& phones);

  // Throws Error(kData) on unknown phones, empty pronunciations, and
  // duplicate (word, pronunciation) pairs. `label` may carry a "(n)"
  // variant suffix.
  void add(const std::string& label, const std::vector<std::string>& phones,
           const PhoneSet& phone_set);

  // No validation; phones are stored as given. For report-only workflows
  // (validate_lexicon) and tests.
  void add_unchecked(const std::string& label, const std::vector<std::string>& phones);

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::vector<const LexiconEntry*> lookup(const std::string& word) const;
  const LexiconEntry* first(const std::string& word) const;  // nullptr if absent
  bool contains(const std::string& word) const;

  int num_entries() const { return static_cast<int>(entries_.size()); }
  int num_words() const { return static_cast<int>(by_word_.size()); }
  std::vector<std::string> words() const;  // first-seen order

  void save(const std::string& path) const;

 private:
  void add_unchecked_entry(LexiconEntry entry) {
    if (!by_word_.count(entry.word)) word_order_.push_back(entry.word);
    by_word_[entry.word].push_back(static_cast<int>(entries_.size()));
    entries_.push_back(std::move(entry));
  }

  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::vector<int>> by_word_;
  std::vector<std::string> word_order_;
};

struct LexiconReport {
  std::vector<std::string> out_of_set;    // "WORD: phone XY" style notes
  std::vector<std::string> duplicates;    // duplicated (word, pronunciation)
  std::vector<std::string> unused_phones; // speech phones never used (SIL excluded)
  bool clean() const { return out_of_set.empty() && duplicates.empty() && unused_phones.empty(); }
  std::string to_string() const;
};

// Report-only consistency check; never throws on content problems.
LexiconReport validate_lexicon(const Lexicon& lexicon, const PhoneSet& phones);

}  // namespace sawt

#endif  // SAWT_LEXICON_LEXICON_H_
