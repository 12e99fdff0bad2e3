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

#include "lexicon/arabic_g2p.h"

#include <unordered_map>

#include "common/error.h"
#include "common/text.h"

namespace sawt {

namespace {

// Arabic letter and diacritic codepoints.
enum : uint32_t {
  kHamza = 0x0621,
  kAlefMadda = 0x0622,
  kAlefHamzaAbove = 0x0623,
  kWawHamza = 0x0624,
  kAlefHamzaBelow = 0x0625,
  kYaHamza = 0x0626,
  kAlef = 0x0627,
  kTaMarbuta = 0x0629,
  kTatweel = 0x0640,
  kFathatan = 0x064B,
  kDammatan = 0x064C,
  kKasratan = 0x064D,
  kFatha = 0x064E,
  kDamma = 0x064F,
  kKasra = 0x0650,
  kShadda = 0x0651,
  kSukun = 0x0652,
  kWaw = 0x0648,
  kAlefMaqsura = 0x0649,
  kYa = 0x064A,
};

const std::unordered_map<uint32_t, const char*>& consonant_map() {
  static const std::unordered_map<uint32_t, const char*> map = {
      {0x0628, "B"},   // ba
      {0x062A, "T"},   // ta
      {0x062B, "TH"},  // tha
      {0x062C, "J"},   // jim
      {0x062D, "~H"},  // ha
      {0x062E, "X"},   // kha
      {0x062F, "D"},   // dal
      {0x0630, "Z2"},  // dhal
      {0x0631, "R"},   // ra
      {0x0632, "Z"},   // zay
      {0x0633, "S"},   // sin
      {0x0634, "SH"},  // shin
      {0x0635, "S2"},  // sad
      {0x0636, "D2"},  // dad
      {0x0637, "T2"},  // tah
      {0x0638, "~Z"},  // zah
      {0x0639, "~@"},  // ain
      {0x063A, "GH"},  // ghain
      {0x0641, "F"},   // fa
      {0x0642, "Q"},   // qaf
      {0x0643, "K"},   // kaf
      {0x0644, "L"},   // lam
      {0x0645, "M"},   // mim
      {0x0646, "N"},   // nun
      {0x0647, "H"},   // ha (light)
      {0x067E, "P"},   // peh (foreign)
      {0x06A4, "V"},   // veh (foreign)
      {0x06AF, "G"},   // gaf (hard g)
  };
  return map;
}

bool is_diacritic(uint32_t cp) { return cp >= kFathatan && cp <= kSukun; }

}  // namespace

const std::vector<std::string>& arabic_phone_inventory() {
  static const std::vector<std::string> inventory = {
      "@",  "B",  "T",  "TH", "J",  "~H", "X",  "D",  "Z2", "R",
      "Z",  "S",  "SH", "S2", "D2", "T2", "~Z", "~@", "GH", "F",
      "Q",  "K",  "L",  "M",  "N",  "H",  "W",  "Y",  "G",  "P",
      "V",  "A",  "A2", "U",  "U2", "I",  "I2"};
  return inventory;
}

std::vector<std::string> graphemes_to_phones(const std::string& utf8_word) {
  const std::vector<uint32_t> cps = utf8_decode(utf8_word);
  std::vector<std::string> out;
  int last_consonant = -1;   // index into out
  char pending_vowel = 0;    // 'A'/'U'/'I' when the last phone is that short vowel
  bool after_fathatan = false;
  bool need_diacritic = false;
  bool seen_letter = false;

  const auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorKind::kData, what + " in word \"" + utf8_word + "\"");
  };
  const auto push_consonant = [&](const char* phone) {
    out.push_back(phone);
    last_consonant = static_cast<int>(out.size()) - 1;
    need_diacritic = true;
    pending_vowel = 0;
    seen_letter = true;
  };
  const auto push_vowel = [&](const char* phone, char pending) {
    out.push_back(phone);
    pending_vowel = pending;
  };

  for (size_t i = 0; i < cps.size(); ++i) {
    const uint32_t cp = cps[i];
    const bool after_tanween = after_fathatan;
    after_fathatan = false;

    if (cp == kTatweel) {
      after_fathatan = after_tanween;  // purely cosmetic, changes nothing
      continue;
    }

    if (is_diacritic(cp)) {
      if (!seen_letter) {
        if (cp == kShadda) throw fail("shadda on first character");
        throw fail("diacritic before any letter");
      }
      need_diacritic = false;
      switch (cp) {
        case kFatha: push_vowel("A", 'A'); break;
        case kDamma: push_vowel("U", 'U'); break;
        case kKasra: push_vowel("I", 'I'); break;
        case kFathatan:
          out.push_back("A");
          out.push_back("N");
          pending_vowel = 0;
          after_fathatan = true;
          break;
        case kDammatan:
          out.push_back("U");
          out.push_back("N");
          pending_vowel = 0;
          break;
        case kKasratan:
          out.push_back("I");
          out.push_back("N");
          pending_vowel = 0;
          break;
        case kShadda:
          if (last_consonant < 0) throw fail("shadda with no preceding consonant");
          out.insert(out.begin() + last_consonant + 1, out[last_consonant]);
          ++last_consonant;
          break;
        case kSukun: pending_vowel = 0; break;
      }
      continue;
    }

    // From here on cp is a letter. Reject consonant clusters that would
    // only arise from undiacritized input.
    const bool next_is_diacritic = i + 1 < cps.size() && is_diacritic(cps[i + 1]);
    if (need_diacritic)
      throw fail(str_cat("letter ", codepoint_repr(cp),
                         " follows an unvocalized consonant (undiacritized input?)"));

    if (cp == kAlef || cp == kAlefMaqsura) {
      if (after_tanween) {
        // orthographic alef after fathatan
      } else if (pending_vowel == 'A') {
        out.back() = "A2";
      } else {
        out.push_back("A2");
      }
      pending_vowel = 0;
      seen_letter = true;
    } else if (cp == kWaw) {
      if (next_is_diacritic) {
        push_consonant("W");
      } else if (pending_vowel == 'U') {
        out.back() = "U2";
        pending_vowel = 0;
      } else {
        out.push_back("U2");
        pending_vowel = 0;
      }
      seen_letter = true;
    } else if (cp == kYa) {
      if (next_is_diacritic) {
        push_consonant("Y");
      } else if (pending_vowel == 'I') {
        out.back() = "I2";
        pending_vowel = 0;
      } else {
        out.push_back("I2");
        pending_vowel = 0;
      }
      seen_letter = true;
    } else if (cp == kTaMarbuta) {
      if (next_is_diacritic) {
        push_consonant("T");
      } else {
        pending_vowel = 0;  // silent
      }
      seen_letter = true;
    } else if (cp == kAlefMadda) {
      out.push_back("@");
      last_consonant = static_cast<int>(out.size()) - 1;
      out.push_back("A2");
      pending_vowel = 0;
      seen_letter = true;
    } else if (cp == kHamza || cp == kAlefHamzaAbove || cp == kAlefHamzaBelow ||
               cp == kWawHamza || cp == kYaHamza) {
      push_consonant("@");
    } else {
      auto it = consonant_map().find(cp);
      if (it == consonant_map().end())
        throw fail("unknown character " + codepoint_repr(cp));
      push_consonant(it->second);
    }
  }

  if (out.empty()) throw fail("no phones produced");
  return out;
}

}  // namespace sawt
