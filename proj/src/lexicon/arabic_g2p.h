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

#ifndef SAWT_LEXICON_ARABIC_G2P_H_
#define SAWT_LEXICON_ARABIC_G2P_H_

#include <string>
#include <vector>

namespace sawt {

// The 37-phone Arabic inventory used by the lexicon tools, in canonical
// order. Multi-letter romanizations are single tokens (TH, GH, SH, ...);
// emphatics carry a 2 suffix, pharyngeals/uvulars a ~ prefix. SIL is not
// part of this list.
const std::vector<std::string>& arabic_phone_inventory();

// Transliterates one fully diacritized Arabic word (UTF-8) into phones.
//
// RULES:
//   - consonant letters map to consonant phones; hamza carriers
//     (hamza, alef-hamza forms, waw-hamza, ya-hamza) all map to @
//   - fatha/damma/kasra produce A/U/I; a following bare alef/waw/ya
//     lengthens the vowel to A2/U2/I2
//   - alef madda produces @ A2
//   - shadda doubles the phone of the consonant it sits on
//   - tanween produces vowel + N; an alef right after fathatan is
//     orthographic only and stays silent
//   - bare ta marbuta is silent; with a vowel mark it reads as T
//   - a bare alef/waw/ya with no preceding matching short vowel reads as
//     the long vowel itself (A2/U2/I2); alef maqsura reads like alef
//   - waw/ya followed by a diacritic are the consonants W/Y
//
// Errors (kData): characters outside the inventory, a diacritic before the
// first letter, and undiacritized input (a non-final consonant that carries
// no vowel, sukun, shadda or tanween).
std::vector<std::string> graphemes_to_phones(const std::string& utf8_word);

}  // namespace sawt

#endif  // SAWT_LEXICON_ARABIC_G2P_H_
