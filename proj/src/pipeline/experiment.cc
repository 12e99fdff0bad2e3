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

#include "pipeline/experiment.h"

#include <cmath>
#include <map>
#include <unordered_map>

#include <json.hpp>

#include "am/trainer.h"
#include "common/error.h"
#include "common/io.h"
#include "common/parallel.h"
#include "common/text.h"
#include "decoder/decoder.h"
#include "frontend/wav.h"
#include "lexicon/arabic_g2p.h"
#include "lm/bigram_lm.h"
#include "pipeline/manifest.h"

namespace sawt {

namespace {

template <typename Fn>
auto with_stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.kind(), str_cat("[stage ", name, "] ", e.what()));
  }
}

std::string features_dir(const ExperimentConfig& c) { return path_join(c.out_dir, "features"); }

CorpusManifest load_split_manifest(const ExperimentConfig& c) {
  require_file(c.fileids, "fileids");
  require_file(c.transcription, "transcription");
  CorpusManifest manifest = load_manifest(c.fileids, c.transcription, c.audio_dir);
  if (c.split_mode == "random")
    split_corpus(&manifest, c.test_fraction, c.split_seed);
  else if (c.split_mode == "by-tag")
    split_corpus_by_tag(&manifest, c.test_tag_prefix);
  else
    throw Error(ErrorKind::kUsage, "split_mode must be random or by-tag, got " + c.split_mode);
  return manifest;
}

FeatureMatrix utterance_features(const ExperimentConfig& c, const Utterance& u) {
  const std::string feat_path = path_join(features_dir(c), u.id + ".feat");
  if (file_exists(feat_path)) return FeatureMatrix::load(feat_path);
  return extract_features(read_wav(u.audio_path), c.frontend);
}

std::unordered_map<std::string, double> load_durations(const std::string& path) {
  std::unordered_map<std::string, double> durations;
  for (const std::string& raw : read_lines(path)) {
    const auto tokens = split_ws(raw);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw Error(ErrorKind::kData, "durations file: expected \"id seconds\", got: " + raw);
    durations[tokens[0]] = parse_double(tokens[1], "duration");
  }
  return durations;
}

std::vector<std::string> words_to_phones(const Lexicon& lexicon,
                                         const std::vector<std::string>& words,
                                         const std::map<std::string, int>* variants) {
  std::vector<std::string> phones;
  for (size_t i = 0; i < words.size(); ++i) {
    const LexiconEntry* entry = lexicon.first(words[i]);
    if (variants) {
      auto it = variants->find(str_cat(i, ":", words[i]));
      if (it != variants->end()) {
        for (const LexiconEntry* e : lexicon.lookup(words[i]))
          if (e->variant == it->second) entry = e;
      }
    }
    if (!entry) throw Error(ErrorKind::kData, "word not in lexicon: " + words[i]);
    phones.insert(phones.end(), entry->phones.begin(), entry->phones.end());
  }
  return phones;
}

}  // namespace

void stage_featextract(const ExperimentConfig& config) {
  with_stage("featextract", [&] {
    CorpusManifest manifest = load_split_manifest(config);
    make_directories(features_dir(config));

    const int n = static_cast<int>(manifest.utterances.size());
    std::vector<double> durations(n, 0.0);
    parallel_for(n, config.threads, [&](int i) {
      const Utterance& u = manifest.utterances[i];
      const AudioBuffer audio = read_wav(u.audio_path);
      durations[i] = audio.duration_seconds();
      extract_features(audio, config.frontend)
          .save(path_join(features_dir(config), u.id + ".feat"));
    });

    std::string text;
    for (int i = 0; i < n; ++i)
      text += manifest.utterances[i].id + " " + double_repr(durations[i]) + "\n";
    write_text_file(path_join(config.out_dir, "durations.txt"), text);
    return 0;
  });
}

void stage_compile_dict(const ExperimentConfig& config) {
  with_stage("compile-dict", [&] {
    require_file(config.wordlist, "wordlist");
    if (config.dictionary.empty())
      throw Error(ErrorKind::kUsage, "dictionary output path is not set");

    // Optional phone-set check when a phone list is configured.
    const bool have_phones = !config.phone_list.empty();
    PhoneSet phones = have_phones ? PhoneSet::load(config.phone_list)
                                  : PhoneSet::from_phones(arabic_phone_inventory());

    std::string text;
    int line_no = 0;
    for (const std::string& raw : read_lines(config.wordlist)) {
      ++line_no;
      const std::string line = trim(raw);
      if (line.empty()) continue;
      const auto tokens = split_ws(line);
      if (tokens.size() != 2)
        throw Error(ErrorKind::kData,
                    str_cat(config.wordlist, ":", line_no,
                            ": expected \"LABEL arabic-word\", got: ", line));
      text += tokens[0];
      for (const std::string& p : graphemes_to_phones(tokens[1])) {
        if (!phones.contains(p))
          throw Error(ErrorKind::kData,
                      str_cat(config.wordlist, ":", line_no, ": phone ", p,
                              " missing from the phone list"));
        text += " " + p;
      }
      text += "\n";
    }
    write_text_file(config.dictionary, text);
    return 0;
  });
}

void stage_train_lm(const ExperimentConfig& config) {
  with_stage("train-lm", [&] {
    std::vector<std::vector<std::string>> sentences;
    if (!config.lm_text.empty()) {
      require_file(config.lm_text, "lm_text");
      for (const std::string& raw : read_lines(config.lm_text)) {
        std::vector<std::string> tokens = split_ws(raw);
        // boundary markers are optional on input
        std::vector<std::string> words;
        for (std::string& w : tokens)
          if (w != kSentStart && w != kSentEnd) words.push_back(std::move(w));
        if (!words.empty() || !tokens.empty()) sentences.push_back(std::move(words));
      }
    } else {
      CorpusManifest manifest = load_split_manifest(config);
      for (const Utterance* u : manifest.split_view(Split::kTrain))
        sentences.push_back(u->words);
    }
    make_directories(config.out_dir);
    write_arpa(estimate_bigram(count_ngrams(sentences)), path_join(config.out_dir, "lm.arpa"));
    return 0;
  });
}

void stage_train_am(const ExperimentConfig& config) {
  with_stage("train-am", [&] {
    require_file(config.phone_list, "phone_list");
    require_file(config.dictionary, "dictionary");
    const PhoneSet phones = PhoneSet::load(config.phone_list);
    const Lexicon lexicon = Lexicon::parse(config.dictionary, phones);
    CorpusManifest manifest = load_split_manifest(config);
    validate_manifest(manifest, lexicon);
    make_directories(config.out_dir);

    {  // split.txt for inspection
      std::string text;
      for (const Utterance& u : manifest.utterances)
        text += u.id + (u.split == Split::kTrain ? " train\n" : " test\n");
      write_text_file(path_join(config.out_dir, "split.txt"), text);
    }

    const auto train_view = manifest.split_view(Split::kTrain);
    std::vector<FeatureMatrix> features(train_view.size());
    parallel_for(static_cast<int>(train_view.size()), config.threads,
                 [&](int i) { features[i] = utterance_features(config, *train_view[i]); });

    std::vector<TrainingUtterance> corpus;
    std::vector<const FeatureMatrix*> feature_ptrs;
    for (size_t i = 0; i < train_view.size(); ++i) {
      TrainingUtterance utt;
      utt.features = &features[i];
      utt.phones = words_to_phones(lexicon, train_view[i]->words, nullptr);
      corpus.push_back(std::move(utt));
      feature_ptrs.push_back(&features[i]);
    }

    AcousticModel model =
        flat_start_init(phones, feature_ptrs, 1, config.variance_floor_scale);

    // Mixtures double between EM blocks until the target is reached; the
    // iteration budget is spread over the blocks, earliest blocks first.
    int splits = 0;
    for (int m = 1; m < config.mixture_target; m *= 2) ++splits;
    const int blocks = splits + 1;
    std::vector<double> loglik_log;
    TrainOptions train_options;
    train_options.min_mixture_occupancy = config.min_mixture_occupancy;
    train_options.threads = config.threads;
    if (config.em_iterations > 0) {
      for (int b = 0; b < blocks; ++b) {
        int iters = config.em_iterations / blocks;
        if (b < config.em_iterations % blocks) ++iters;
        if (iters > 0) {
          train_options.iterations = iters;
          auto [updated, report] = train(corpus, std::move(model), train_options);
          model = std::move(updated);
          for (double ll : report.iteration_log_likelihood) loglik_log.push_back(ll);
        }
        if (b + 1 < blocks) model = split_mixtures(model);
      }
      if (config.use_triphones) {
        add_seen_triphones(&model, corpus, /*add_boundary_silence=*/true);
        train_options.iterations = 2;
        train_options.use_triphones = true;
        auto [updated, report] = train(corpus, std::move(model), train_options);
        model = std::move(updated);
        for (double ll : report.iteration_log_likelihood) loglik_log.push_back(ll);
      }
    }

    model.save(path_join(config.out_dir, "am.txt"));
    std::string log_text;
    for (size_t i = 0; i < loglik_log.size(); ++i)
      log_text += str_cat("iteration ", i + 1, " log-likelihood ", double_repr(loglik_log[i]), "\n");
    write_text_file(path_join(config.out_dir, "train_log.txt"), log_text);
    return 0;
  });
}

void stage_decode(const ExperimentConfig& config) {
  with_stage("decode", [&] {
    require_file(config.phone_list, "phone_list");
    require_file(config.dictionary, "dictionary");
    require_file(path_join(config.out_dir, "am.txt"), "acoustic model");
    require_file(path_join(config.out_dir, "lm.arpa"), "language model");

    const PhoneSet phones = PhoneSet::load(config.phone_list);
    const Lexicon lexicon = Lexicon::parse(config.dictionary, phones);
    const AcousticModel model = AcousticModel::load(path_join(config.out_dir, "am.txt"));
    const BigramLm lm = read_arpa(path_join(config.out_dir, "lm.arpa"));
    CorpusManifest manifest = load_split_manifest(config);

    DecoderConfig decoder_config = config.decoder;
    decoder_config.frame_shift_seconds = config.frontend.frame_shift_ms / 1000.0;
    decoder_config.use_triphones = config.use_triphones;
    const Decoder decoder(model, lm, lexicon, decoder_config);

    const auto test_view = manifest.split_view(Split::kTest);
    const int n = static_cast<int>(test_view.size());
    std::vector<DecodeResult> results(n);
    parallel_for(n, config.threads, [&](int i) {
      results[i] = decoder.decode(utterance_features(config, *test_view[i]));
    });

    std::vector<std::pair<std::string, std::vector<std::string>>> hyp_lines;
    nlohmann::json details = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
      hyp_lines.emplace_back(test_view[i]->id, results[i].word_labels());
      nlohmann::json words = nlohmann::json::array();
      for (const DecodedWord& w : results[i].words)
        words.push_back({{"word", w.word},
                         {"variant", w.variant},
                         {"begin_frame", w.begin_frame},
                         {"end_frame", w.end_frame}});
      details.push_back({{"id", test_view[i]->id},
                         {"found", results[i].found},
                         {"log_score", results[i].log_score},
                         {"real_time_factor", results[i].real_time_factor},
                         {"words", words}});
    }
    write_transcription(path_join(config.out_dir, "hyp.trans"), hyp_lines);
    write_text_file(path_join(config.out_dir, "decode_details.json"), details.dump(2));
    return 0;
  });
}

CorpusReport stage_score(const ExperimentConfig& config) {
  return with_stage("score", [&]() -> CorpusReport {
    // Reference/hypothesis pairs: explicit files when given, otherwise the
    // experiment's test split against out_dir/hyp.trans.
    std::vector<std::pair<std::string, std::vector<std::string>>> refs;
    std::string hyp_path;
    std::string durations_path = config.durations;
    if (!config.score_ref.empty() || !config.score_hyp.empty()) {
      require_file(config.score_ref, "score_ref");
      require_file(config.score_hyp, "score_hyp");
      refs = read_transcription(config.score_ref);
      hyp_path = config.score_hyp;
    } else {
      CorpusManifest manifest = load_split_manifest(config);
      for (const Utterance* u : manifest.split_view(Split::kTest))
        refs.emplace_back(u->id, u->words);
      hyp_path = path_join(config.out_dir, "hyp.trans");
      require_file(hyp_path, "hypothesis");
      if (durations_path.empty()) {
        const std::string default_durations = path_join(config.out_dir, "durations.txt");
        if (file_exists(default_durations)) durations_path = default_durations;
      }
    }

    std::unordered_map<std::string, std::vector<std::string>> hyps;
    for (auto& [id, words] : read_transcription(hyp_path)) hyps[id] = std::move(words);

    std::unordered_map<std::string, double> durations;
    const bool has_durations = !durations_path.empty();
    if (has_durations) {
      require_file(durations_path, "durations");
      durations = load_durations(durations_path);
    }

    // Pronunciation variants decoded per utterance, for phone_hyp_mode=align.
    std::unordered_map<std::string, std::map<std::string, int>> decoded_variants;
    if (config.phone_hyp_mode == "align") {
      const std::string details_path = path_join(config.out_dir, "decode_details.json");
      require_file(details_path, "decode details (needed for phone_hyp_mode=align)");
      std::string details_text;
      for (const std::string& line : read_lines(details_path)) details_text += line + "\n";
      const nlohmann::json details = nlohmann::json::parse(details_text);
      for (const auto& utt : details) {
        std::map<std::string, int> variants;
        int pos = 0;
        for (const auto& w : utt["words"])
          variants[str_cat(pos++, ":", w["word"].get<std::string>())] = w["variant"].get<int>();
        decoded_variants[utt["id"].get<std::string>()] = std::move(variants);
      }
    } else if (config.phone_hyp_mode != "lexicon") {
      throw Error(ErrorKind::kUsage, "phone_hyp_mode must be lexicon or align");
    }

    // Phone-level scoring needs the lexicon; skip the table when absent.
    bool has_phone_table = !config.phone_list.empty() && !config.dictionary.empty();
    PhoneSet phones = has_phone_table ? PhoneSet::load(config.phone_list)
                                      : PhoneSet::from_phones(arabic_phone_inventory());
    Lexicon lexicon;
    if (has_phone_table) lexicon = Lexicon::parse(config.dictionary, phones);

    std::vector<UtteranceScore> scores;
    std::vector<std::vector<std::string>> ref_phones, hyp_phones;
    for (const auto& [id, ref_words] : refs) {
      auto it = hyps.find(id);
      if (it == hyps.end())
        throw Error(ErrorKind::kData, "no hypothesis for utterance " + id);
      UtteranceScore score;
      score.id = id;
      score.alignment = align(ref_words, it->second);
      if (has_durations) {
        auto dit = durations.find(id);
        if (dit == durations.end())
          throw Error(ErrorKind::kData, "no duration for utterance " + id);
        score.duration = dit->second;
      }
      if (has_phone_table) {
        ref_phones.push_back(words_to_phones(lexicon, ref_words, nullptr));
        const std::map<std::string, int>* variants = nullptr;
        if (config.phone_hyp_mode == "align") {
          auto vit = decoded_variants.find(id);
          if (vit != decoded_variants.end()) variants = &vit->second;
        }
        hyp_phones.push_back(words_to_phones(lexicon, it->second, variants));
      }
      scores.push_back(std::move(score));
    }

    std::vector<PhoneRow> phone_table;
    if (has_phone_table) phone_table = phone_accuracy(ref_phones, hyp_phones, phones);

    CorpusReport report =
        make_corpus_report(std::move(scores), std::move(phone_table), has_durations,
                           has_phone_table);
    make_directories(config.out_dir);
    write_text_file(path_join(config.out_dir, "report.txt"), report.to_text());
    write_text_file(path_join(config.out_dir, "report.json"), report.to_json());
    return report;
  });
}

CorpusReport run_experiment(const ExperimentConfig& config) {
  // Fail fast on the input files before any computation.
  with_stage("check-inputs", [&] {
    require_file(config.phone_list, "phone_list");
    require_file(config.dictionary, "dictionary");
    require_file(config.fileids, "fileids");
    require_file(config.transcription, "transcription");
    if (!config.lm_text.empty()) require_file(config.lm_text, "lm_text");
    return 0;
  });
  stage_featextract(config);
  stage_train_lm(config);
  stage_train_am(config);
  stage_decode(config);
  return stage_score(config);
}

}  // namespace sawt
