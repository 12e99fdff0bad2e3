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

#include "pipeline/synth.h"

#include <cmath>
#include <cstdio>
#include <random>

#include "common/error.h"
#include "common/io.h"
#include "common/logmath.h"
#include "frontend/wav.h"
#include "lexicon/arabic_g2p.h"
#include "lexicon/phone_set.h"
#include "pipeline/manifest.h"

namespace sawt {

const std::vector<std::pair<std::string, std::vector<std::string>>>& synth_vocabulary() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> vocab = {
      {"MUSLIM", {"M", "U", "S", "L", "I", "M"}},
      {"QUWWA", {"Q", "U", "W", "W", "A"}},
      {"GHAALIBAN", {"GH", "A2", "L", "I", "B", "A", "N"}},
      {"WASIYMOUN", {"W", "A", "S", "I2", "M", "U2", "N"}},
      {"SOJOUD", {"S", "U", "J", "U2", "D"}},
      {"OUHRIZA", {"@", "U", "~H", "R", "I", "Z", "A"}},
      {"RAQABA", {"R", "A", "Q", "A", "B", "A"}},
      {"NOQOUD", {"N", "U", "Q", "U2", "D"}},
      {"MUTABADAL", {"M", "U", "T", "A", "B", "A2", "D", "A", "L"}},
      {"AHD", {"~@", "A", "H", "D"}},
      {"BIDDABT", {"B", "I", "D2", "D2", "A", "B", "T2"}},
      {"THAKIF", {"TH", "A", "K", "I", "F"}},
      {"XUBZ", {"X", "U", "B", "Z"}},
      {"SHAY", {"SH", "A", "Y"}},
      {"ZAHAB", {"Z2", "A", "H", "A", "B"}},
      {"SABR", {"S2", "A", "B", "R"}},
      {"ZUHR", {"~Z", "U", "H", "R"}},
      {"GARAJ", {"G", "A", "R", "A", "J"}},
      {"PAVIL", {"P", "A", "V", "I", "L"}},
      {"FIKR", {"F", "I", "K", "R"}},
  };
  return vocab;
}

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// Two fixed sine tones per phone, both inside the default mel band.
struct PhoneVoice {
  double f1, f2;
};

PhoneVoice voice_for(int phone_index) {
  const int p = phone_index;
  PhoneVoice v;
  v.f1 = 250.0 + 155.0 * p;
  v.f2 = 320.0 + 150.0 * ((p * 7 + 3) % 38);
  return v;
}

void append_segment(std::vector<double>* samples, const PhoneVoice& voice, int len,
                    double amplitude, std::mt19937_64& rng) {
  std::normal_distribution<double> noise(0.0, 0.008);
  const int ramp = std::min(len / 4, 160);  // 10 ms attack/decay at 16 kHz
  for (int i = 0; i < len; ++i) {
    double env = 1.0;
    if (i < ramp) env = 0.5 - 0.5 * std::cos(kTwoPi * i / (2.0 * ramp));
    if (len - 1 - i < ramp)
      env = std::min(env, 0.5 - 0.5 * std::cos(kTwoPi * (len - 1 - i) / (2.0 * ramp)));
    const double s = 0.28 * std::sin(kTwoPi * voice.f1 * i / 16000.0) +
                     0.18 * std::sin(kTwoPi * voice.f2 * i / 16000.0);
    samples->push_back(amplitude * env * s + noise(rng));
  }
}

void append_silence(std::vector<double>* samples, int len, std::mt19937_64& rng) {
  std::normal_distribution<double> noise(0.0, 0.008);
  for (int i = 0; i < len; ++i) samples->push_back(noise(rng));
}

}  // namespace

void synth_corpus(const SynthOptions& options) {
  if (options.num_utterances < 10)
    throw Error(ErrorKind::kUsage, "synth-corpus needs at least 10 utterances");
  if (options.sample_rate != 16000)
    throw Error(ErrorKind::kUsage, "synth-corpus generates 16 kHz audio only");

  make_directories(options.out_dir);
  make_directories(path_join(options.out_dir, "wav"));

  const auto& vocab = synth_vocabulary();
  const auto& phones = arabic_phone_inventory();

  // phones.txt
  {
    std::string text;
    for (const std::string& p : phones) text += p + "\n";
    write_text_file(path_join(options.out_dir, "phones.txt"), text);
  }
  // lexicon.dict
  {
    std::string text;
    for (const auto& [word, pron] : vocab) {
      text += word;
      for (const std::string& p : pron) text += " " + p;
      text += "\n";
    }
    write_text_file(path_join(options.out_dir, "lexicon.dict"), text);
  }

  const PhoneSet phone_set = PhoneSet::from_phones(phones);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> sentence_len(1, 3);
  std::uniform_int_distribution<int> word_pick(0, static_cast<int>(vocab.size()) - 1);
  std::uniform_int_distribution<int> phone_ms(70, 110);
  std::uniform_int_distribution<int> sil_ms(120, 200);
  std::uniform_real_distribution<double> amp(0.85, 1.0);

  std::vector<std::string> fileids;
  std::vector<std::pair<std::string, std::vector<std::string>>> transcripts;

  for (int k = 0; k < options.num_utterances; ++k) {
    // the leading word cycles through the vocabulary so every word is seen
    std::vector<int> sentence{k % static_cast<int>(vocab.size())};
    const int extra = sentence_len(rng) - 1;
    for (int j = 0; j < extra; ++j) sentence.push_back(word_pick(rng));

    std::vector<double> samples;
    append_silence(&samples, sil_ms(rng) * options.sample_rate / 1000, rng);
    for (int w : sentence) {
      for (const std::string& phone : vocab[w].second) {
        const int idx = phone_set.index_of(phone);
        append_segment(&samples, voice_for(idx), phone_ms(rng) * options.sample_rate / 1000,
                       amp(rng), rng);
      }
    }
    append_silence(&samples, sil_ms(rng) * options.sample_rate / 1000, rng);

    char id[32];
    std::snprintf(id, sizeof(id), "utt%04d", k);
    AudioBuffer audio;
    audio.sample_rate = options.sample_rate;
    audio.samples = std::move(samples);
    write_wav(path_join(options.out_dir, path_join("wav", std::string(id) + ".wav")), audio);

    fileids.push_back(id);
    std::vector<std::string> words;
    for (int w : sentence) words.push_back(vocab[w].first);
    transcripts.emplace_back(id, std::move(words));
  }

  {
    std::string text;
    for (const std::string& id : fileids) text += id + "\n";
    write_text_file(path_join(options.out_dir, "corpus.fileids"), text);
  }
  write_transcription(path_join(options.out_dir, "corpus.transcription"), transcripts);

  const std::string cfg =
      "# generated by synth-corpus\n"
      "phone_list = " + path_join(options.out_dir, "phones.txt") + "\n" +
      "dictionary = " + path_join(options.out_dir, "lexicon.dict") + "\n" +
      "fileids = " + path_join(options.out_dir, "corpus.fileids") + "\n" +
      "transcription = " + path_join(options.out_dir, "corpus.transcription") + "\n" +
      "audio_dir = " + path_join(options.out_dir, "wav") + "\n" +
      "out_dir = " + path_join(options.out_dir, "exp") + "\n" +
      "test_fraction = 0.2\n"
      "split_seed = 7\n"
      "em_iterations = 8\n"
      "mixture_target = 4\n";
  write_text_file(path_join(options.out_dir, "experiment.cfg"), cfg);
}

}  // namespace sawt
