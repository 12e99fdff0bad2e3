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

// Batch front door of the toolkit. Every subcommand is a thin wrapper over
// the libsawt C API; all heavy lifting happens behind it.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sawt/sawt.h"

namespace {

int exit_code(sawt_status status) {
  switch (status) {
    case SAWT_OK: return 0;
    case SAWT_ERR_USAGE: return 1;
    case SAWT_ERR_DATA: return 2;
    case SAWT_ERR_IO: return 2;  // missing/unreadable files are data errors
    case SAWT_ERR_NUMERIC: return 3;
    default: return 3;
  }
}

int fail(sawt_status status) {
  std::cerr << "error: " << sawt_last_error() << "\n";
  return exit_code(status);
}

struct ConfigHandle {
  sawt_config* config = nullptr;
  ~ConfigHandle() { sawt_config_free(config); }
};

// -c FILE first, then repeated --set key=value overrides.
sawt_status build_config(const std::string& config_path,
                         const std::vector<std::string>& overrides, ConfigHandle* out) {
  sawt_status status =
      config_path.empty() ? sawt_config_new(&out->config)
                          : sawt_config_load(config_path.c_str(), &out->config);
  if (status != SAWT_OK) return status;
  for (const std::string& kv : overrides) {
    const size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --set expects key=value, got \"" << kv << "\"\n";
      return SAWT_ERR_USAGE;
    }
    status = sawt_config_set(out->config, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str());
    if (status != SAWT_OK) return status;
  }
  return SAWT_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sawt - HMM/GMM speech recognition toolkit for Arabic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sawt_version()));

  std::string config_path;
  std::vector<std::string> overrides;
  app.add_option("-c,--config", config_path, "experiment configuration file")
      ->envname("")
      ->expected(1);
  app.add_option("--set", overrides, "override a config key, e.g. --set beam=1e-80")
      ->take_all();

  auto* cmd_featextract =
      app.add_subcommand("featextract", "extract MFCC+delta features for the corpus");
  cmd_featextract->fallthrough();
  std::string wav_in, feat_out;
  cmd_featextract->add_option("--wav", wav_in, "single input WAV (instead of the corpus)");
  cmd_featextract->add_option("--out", feat_out, "feature file for --wav");

  auto* cmd_g2p = app.add_subcommand("g2p", "transliterate diacritized Arabic words to phones");
  cmd_g2p->fallthrough();
  std::vector<std::string> g2p_words;
  cmd_g2p->add_option("words", g2p_words, "UTF-8 words")->required();

  auto* cmd_compile_dict =
      app.add_subcommand("compile-dict", "build a pronunciation dictionary from a word list");
  cmd_compile_dict->fallthrough();
  auto* cmd_train_am = app.add_subcommand("train-am", "Baum-Welch acoustic model training");
  cmd_train_am->fallthrough();
  auto* cmd_train_lm = app.add_subcommand("train-lm", "estimate the bigram language model");
  cmd_train_lm->fallthrough();
  auto* cmd_decode = app.add_subcommand("decode", "decode the test split");
  cmd_decode->fallthrough();
  auto* cmd_score = app.add_subcommand("score", "score hypotheses against references");
  cmd_score->fallthrough();
  auto* cmd_run = app.add_subcommand("run", "full experiment: features, models, decode, score");
  cmd_run->fallthrough();

  auto* cmd_synth = app.add_subcommand("synth-corpus", "generate a synthetic test corpus");
  cmd_synth->fallthrough();
  std::string synth_out = "synth";
  int synth_utterances = 300;
  unsigned long long synth_seed = 1;
  cmd_synth->add_option("--out", synth_out, "output directory");
  cmd_synth->add_option("--utterances", synth_utterances, "number of utterances");
  cmd_synth->add_option("--seed", synth_seed, "random seed");

  CLI11_PARSE(app, argc, argv);

  if (cmd_synth->parsed()) {
    const sawt_status status =
        sawt_synth_corpus(synth_out.c_str(), synth_utterances, synth_seed);
    if (status != SAWT_OK) return fail(status);
    std::cout << "corpus written to " << synth_out << "\n";
    return 0;
  }

  if (cmd_g2p->parsed()) {
    for (const std::string& word : g2p_words) {
      char phones[1024];
      const sawt_status status = sawt_g2p_word(word.c_str(), phones, sizeof(phones));
      if (status != SAWT_OK) return fail(status);
      std::cout << word << " " << phones << "\n";
    }
    return 0;
  }

  if (cmd_featextract->parsed() && !wav_in.empty()) {
    if (feat_out.empty()) {
      std::cerr << "error: --wav needs --out\n";
      return 1;
    }
    sawt_features* features = nullptr;
    sawt_status status = sawt_features_from_wav(wav_in.c_str(), nullptr, &features);
    if (status != SAWT_OK) return fail(status);
    status = sawt_features_save(features, feat_out.c_str());
    sawt_features_free(features);
    if (status != SAWT_OK) return fail(status);
    std::cout << feat_out << " written\n";
    return 0;
  }

  ConfigHandle handle;
  sawt_status status = build_config(config_path, overrides, &handle);
  if (status != SAWT_OK) return fail(status);

  std::vector<char> report(1 << 20);
  if (cmd_featextract->parsed()) {
    status = sawt_pipeline_featextract(handle.config);
  } else if (cmd_compile_dict->parsed()) {
    status = sawt_pipeline_compile_dict(handle.config);
  } else if (cmd_train_am->parsed()) {
    status = sawt_pipeline_train_am(handle.config);
  } else if (cmd_train_lm->parsed()) {
    status = sawt_pipeline_train_lm(handle.config);
  } else if (cmd_decode->parsed()) {
    status = sawt_pipeline_decode(handle.config);
  } else if (cmd_score->parsed()) {
    status = sawt_pipeline_score(handle.config, report.data(), report.size());
    if (status == SAWT_OK) std::cout << report.data();
  } else if (cmd_run->parsed()) {
    status = sawt_pipeline_run(handle.config, report.data(), report.size());
    if (status == SAWT_OK) std::cout << report.data();
  } else {
    std::cerr << "error: no subcommand\n";
    return 1;
  }
  if (status != SAWT_OK) return fail(status);
  return 0;
}
