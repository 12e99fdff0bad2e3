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

#include "lexicon/phone_set.h"

#include "common/error.h"
#include "common/io.h"
#include "common/text.h"

namespace sawt {

PhoneSet PhoneSet::load(const std::string& path) {
  std::vector<std::string> phones;
  for (const std::string& raw : read_lines(path)) {
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (split_ws(line).size() != 1)
      throw Error(ErrorKind::kData, "phone list " + path + ": expected one phone per line, got \"" + line + "\"");
    phones.push_back(line);
  }
  if (phones.empty()) throw Error(ErrorKind::kData, "phone list is empty: " + path);
  return from_phones(phones);
}

PhoneSet PhoneSet::from_phones(const std::vector<std::string>& phones) {
  if (phones.empty()) throw Error(ErrorKind::kData, "phone set cannot be empty");
  PhoneSet set;
  for (const std::string& p : phones) {
    const std::string key = to_upper(p);
    if (set.index_.count(key))
      throw Error(ErrorKind::kData, "duplicate phone in phone set: " + p);
    set.index_[key] = static_cast<int>(set.phones_.size());
    set.phones_.push_back(p);
  }
  if (!set.contains(kSilence)) {
    set.index_[kSilence] = static_cast<int>(set.phones_.size());
    set.phones_.push_back(kSilence);
  }
  return set;
}

int PhoneSet::index_of(const std::string& label) const {
  auto it = index_.find(to_upper(label));
  return it == index_.end() ? -1 : it->second;
}

const std::string& PhoneSet::canonical(const std::string& label) const {
  int idx = index_of(label);
  if (idx < 0) throw Error(ErrorKind::kData, "phone not in phone set: " + label);
  return phones_[idx];
}

}  // namespace sawt
