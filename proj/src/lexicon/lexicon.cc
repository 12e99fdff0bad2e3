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

#include "lexicon/lexicon.h"

#include <set>

#include "common/error.h"
#include "common/io.h"
#include "common/text.h"

namespace sawt {

namespace {

// Splits "WORD(2)" into ("WORD", 2); plain labels get variant 1.
std::pair<std::string, int> split_variant(const std::string& label) {
  if (label.size() >= 3 && label.back() == ')') {
    size_t open = label.rfind('(');
    if (open != std::string::npos && open > 0) {
      const std::string num = label.substr(open + 1, label.size() - open - 2);
      if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos)
        return {label.substr(0, open), static_cast<int>(parse_int(num, "variant"))};
    }
  }
  return {label, 1};
}

}  // namespace

Lexicon Lexicon::parse(const std::string& path, const PhoneSet& phones) {
  Lexicon lex;
  int line_no = 0;
  for (const std::string& raw : read_lines(path)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::vector<std::string> tokens = split_ws(line);
    try {
      lex.add(tokens[0], {tokens.begin() + 1, tokens.end()}, phones);
    } catch (const Error& e) {
      throw Error(e.kind(), str_cat(path, ":", line_no, ": ", e.what()));
    }
  }
  return lex;
}

void Lexicon::add(const std::string& label, const std::vector<std::string>& phones,
                  const PhoneSet& phone_set) {
  auto [word, variant] = split_variant(label);
  if (word.empty()) throw Error(ErrorKind::kData, "empty word label");
  if (phones.empty())
    throw Error(ErrorKind::kData, "empty pronunciation for word " + word);

  LexiconEntry entry;
  entry.word = word;
  entry.variant = variant;
  for (const std::string& p : phones) {
    if (!phone_set.contains(p))
      throw Error(ErrorKind::kData,
                  str_cat("word ", word, " uses unknown phone ", p));
    entry.phones.push_back(phone_set.canonical(p));
  }

  auto it = by_word_.find(word);
  if (it != by_word_.end()) {
    for (int idx : it->second)
      if (entries_[idx].phones == entry.phones)
        throw Error(ErrorKind::kData, "duplicate pronunciation for word " + word);
  }
  add_unchecked_entry(std::move(entry));
}

void Lexicon::add_unchecked(const std::string& label, const std::vector<std::string>& phones) {
  auto [word, variant] = split_variant(label);
  LexiconEntry entry;
  entry.word = word;
  entry.variant = variant;
  entry.phones = phones;
  add_unchecked_entry(std::move(entry));
}

std::vector<const LexiconEntry*> Lexicon::lookup(const std::string& word) const {
  std::vector<const LexiconEntry*> out;
  auto it = by_word_.find(word);
  if (it != by_word_.end())
    for (int idx : it->second) out.push_back(&entries_[idx]);
  return out;
}

const LexiconEntry* Lexicon::first(const std::string& word) const {
  auto it = by_word_.find(word);
  return it == by_word_.end() ? nullptr : &entries_[it->second.front()];
}

bool Lexicon::contains(const std::string& word) const { return by_word_.count(word) > 0; }

std::vector<std::string> Lexicon::words() const { return word_order_; }

void Lexicon::save(const std::string& path) const {
  std::ofstream out = open_output(path);
  for (const LexiconEntry& e : entries_) {
    out << e.word;
    if (e.variant > 1) out << '(' << e.variant << ')';
    for (const std::string& p : e.phones) out << ' ' << p;
    out << '\n';
  }
  if (!out) throw Error(ErrorKind::kIo, "short write to " + path);
}

LexiconReport validate_lexicon(const Lexicon& lexicon, const PhoneSet& phones) {
  LexiconReport report;
  std::set<std::string> used;
  std::set<std::pair<std::string, std::vector<std::string>>> seen;
  std::set<std::pair<std::string, std::vector<std::string>>> reported_dup;

  for (const LexiconEntry& e : lexicon.entries()) {
    for (const std::string& p : e.phones) {
      if (!phones.contains(p))
        report.out_of_set.push_back(e.word + ": phone " + p);
      else
        used.insert(to_upper(p));
    }
    auto key = std::make_pair(e.word, e.phones);
    if (!seen.insert(key).second && reported_dup.insert(key).second)
      report.duplicates.push_back(e.word + " " + join(e.phones, " "));
  }

  for (const std::string& p : phones.phones()) {
    if (p == PhoneSet::kSilence) continue;  // non-speech, never in pronunciations
    if (!used.count(to_upper(p))) report.unused_phones.push_back(p);
  }
  return report;
}

std::string LexiconReport::to_string() const {
  std::string s;
  s += str_cat("out-of-set phones: ", out_of_set.size(), "\n");
  for (const auto& x : out_of_set) s += "  " + x + "\n";
  s += str_cat("duplicate pronunciations: ", duplicates.size(), "\n");
  for (const auto& x : duplicates) s += "  " + x + "\n";
  s += str_cat("unused phones: ", unused_phones.size(), "\n");
  for (const auto& x : unused_phones) s += "  " + x + "\n";
  return s;
}

}  // namespace sawt
