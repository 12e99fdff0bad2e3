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

#ifndef SAWT_LEXICON_PHONE_SET_H_
#define SAWT_LEXICON_PHONE_SET_H_

#include <string>
#include <unordered_map>
#include <vector>

namespace sawt {

// Ordered set of phone labels plus the distinguished non-speech unit SIL.
// Lookup is case-insensitive; the declared spelling is kept.
//
// FILE FORMAT: one phone per line, blank lines ignored. SIL is appended
// automatically when the file does not list it.
class PhoneSet {
 public:
  static constexpr const char* kSilence = "SIL";

  static PhoneSet load(const std::string& path);
  // Throws on duplicates or an empty list; appends SIL if absent.
  static PhoneSet from_phones(const std::vector<std::string>& phones);

  int size() const { return static_cast<int>(phones_.size()); }  // includes SIL
  const std::vector<std::string>& phones() const { return phones_; }

  bool contains(const std::string& label) const { return index_of(label) >= 0; }
  int index_of(const std::string& label) const;  // -1 when absent
  // Declared spelling for a case-insensitive match; throws Error(kData)
  // when the label is not in the set.
  const std::string& canonical(const std::string& label) const;

 private:
  std::vector<std::string> phones_;
  std::unordered_map<std::string, int> index_;  // upper-cased label -> index
};

}  // namespace sawt

#endif  // SAWT_LEXICON_PHONE_SET_H_
