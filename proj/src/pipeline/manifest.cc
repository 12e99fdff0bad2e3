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

#include "pipeline/manifest.h"

#include <cmath>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "common/error.h"
#include "common/io.h"
#include "common/text.h"
#include "lm/ngram_counts.h"

namespace sawt {

std::vector<const Utterance*> CorpusManifest::split_view(Split split) const {
  std::vector<const Utterance*> view;
  for (const Utterance& u : utterances)
    if (u.split == split) view.push_back(&u);
  return view;
}

std::vector<std::pair<std::string, std::vector<std::string>>> read_transcription(
    const std::string& path) {
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  int line_no = 0;
  for (const std::string& raw : read_lines(path)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    std::vector<std::string> tokens = split_ws(line);
    const std::string& tail = tokens.back();
    if (tail.size() < 3 || tail.front() != '(' || tail.back() != ')')
      throw Error(ErrorKind::kData,
                  str_cat(path, ":", line_no, ": transcription line must end with \"(id)\""));
    const std::string id = tail.substr(1, tail.size() - 2);
    tokens.pop_back();
    std::vector<std::string> words;
    for (std::string& w : tokens) {
      if (w == kSentStart || w == kSentEnd) continue;
      words.push_back(std::move(w));
    }
    out.emplace_back(id, std::move(words));
  }
  return out;
}

void write_transcription(
    const std::string& path,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& lines) {
  std::ofstream out = open_output(path);
  for (const auto& [id, words] : lines) {
    for (const std::string& w : words) out << w << ' ';
    out << '(' << id << ")\n";
  }
  if (!out) throw Error(ErrorKind::kIo, "short write to " + path);
}

CorpusManifest load_manifest(const std::string& fileids_path,
                             const std::string& transcription_path,
                             const std::string& audio_dir) {
  std::vector<std::string> ids;
  std::unordered_set<std::string> seen;
  for (const std::string& raw : read_lines(fileids_path)) {
    const std::string id = trim(raw);
    if (id.empty()) continue;
    if (!seen.insert(id).second)
      throw Error(ErrorKind::kData, "duplicate utterance id in fileids: " + id);
    ids.push_back(id);
  }
  if (ids.empty()) throw Error(ErrorKind::kData, "fileids file is empty: " + fileids_path);

  std::unordered_map<std::string, std::vector<std::string>> transcripts;
  for (auto& [id, words] : read_transcription(transcription_path)) {
    if (!transcripts.emplace(id, std::move(words)).second)
      throw Error(ErrorKind::kData, "duplicate utterance id in transcription: " + id);
  }

  CorpusManifest manifest;
  for (const std::string& id : ids) {
    auto it = transcripts.find(id);
    if (it == transcripts.end())
      throw Error(ErrorKind::kData, "utterance " + id + " has no transcription");
    Utterance utt;
    utt.id = id;
    utt.audio_path = path_join(audio_dir, id + ".wav");
    utt.words = it->second;
    manifest.utterances.push_back(std::move(utt));
    transcripts.erase(it);
  }
  if (!transcripts.empty())
    throw Error(ErrorKind::kData,
                "transcription for unknown utterance id: " + transcripts.begin()->first);
  return manifest;
}

void validate_manifest(const CorpusManifest& manifest, const Lexicon& lexicon) {
  for (const Utterance& u : manifest.utterances)
    for (const std::string& w : u.words)
      if (!lexicon.contains(w))
        throw Error(ErrorKind::kData,
                    "utterance " + u.id + ": word not in lexicon: " + w);
}

void split_corpus(CorpusManifest* manifest, double test_fraction, uint64_t seed) {
  const int n = static_cast<int>(manifest->utterances.size());
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw Error(ErrorKind::kUsage, "test fraction must be in (0, 1)");
  if (n < 2) throw Error(ErrorKind::kData, "corpus too small to split");

  int n_test = static_cast<int>(std::llround(n * test_fraction));
  if (n_test < 1) n_test = 1;
  if (n_test > n - 1) n_test = n - 1;

  // Hand-rolled Fisher-Yates so the split does not depend on the standard
  // library's shuffle implementation.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
    std::swap(order[i], order[j]);
  }
  for (int i = 0; i < n; ++i)
    manifest->utterances[order[i]].split = i < n_test ? Split::kTest : Split::kTrain;
}

void split_corpus_by_tag(CorpusManifest* manifest, const std::string& test_id_prefix) {
  if (test_id_prefix.empty())
    throw Error(ErrorKind::kUsage, "split-by-tag needs a non-empty test id prefix");
  int n_test = 0;
  for (Utterance& u : manifest->utterances) {
    const bool test = u.id.rfind(test_id_prefix, 0) == 0;
    u.split = test ? Split::kTest : Split::kTrain;
    if (test) ++n_test;
  }
  if (n_test == 0 || n_test == static_cast<int>(manifest->utterances.size()))
    throw Error(ErrorKind::kData,
                "prefix \"" + test_id_prefix + "\" leaves one of the splits empty");
}

}  // namespace sawt
