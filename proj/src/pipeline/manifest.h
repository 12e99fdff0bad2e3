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

#ifndef SAWT_PIPELINE_MANIFEST_H_
#define SAWT_PIPELINE_MANIFEST_H_

#include <cstdint>
#include <string>
#include <vector>

#include "lexicon/lexicon.h"

namespace sawt {

enum class Split { kTrain, kTest };

struct Utterance {
  std::string id;
  std::string audio_path;
  std::vector<std::string> words;
  Split split = Split::kTrain;
};

struct CorpusManifest {
  std::vector<Utterance> utterances;

  std::vector<const Utterance*> split_view(Split split) const;
};

// Joins a fileids file (one utterance id per line) with a transcription
// file.
//
// TRANSCRIPTION FORMAT: one line per utterance,
//   <s> WORD WORD ... </s> (utterance-id)
// The <s>/</s> markers are optional and stripped. Audio paths become
// audio_dir/<id>.wav. Errors (kData): ids without transcriptions and vice
// versa, duplicated ids, lines without a trailing "(id)".
CorpusManifest load_manifest(const std::string& fileids_path,
                             const std::string& transcription_path,
                             const std::string& audio_dir);

// Throws Error(kData) naming the first word that the lexicon cannot
// resolve.
void validate_manifest(const CorpusManifest& manifest, const Lexicon& lexicon);

// Seeded Fisher-Yates shuffle, then round(n * test_fraction) utterances
// become the test split. Both splits must end up non-empty.
void split_corpus(CorpusManifest* manifest, double test_fraction, uint64_t seed);

// Deterministic split by id prefix: matching utterances become the test
// split (mirrors corpora recorded in separate series).
void split_corpus_by_tag(CorpusManifest* manifest, const std::string& test_id_prefix);

// Writes "WORD WORD ... (id)" lines; the scorer reads the same format back.
void write_transcription(const std::string& path,
                         const std::vector<std::pair<std::string, std::vector<std::string>>>& lines);
std::vector<std::pair<std::string, std::vector<std::string>>> read_transcription(
    const std::string& path);

}  // namespace sawt

#endif  // SAWT_PIPELINE_MANIFEST_H_
