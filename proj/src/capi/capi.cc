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

#include "sawt/sawt.h"

#include <cstring>
#include <string>

#include "am/acoustic_model.h"
#include "common/error.h"
#include "common/text.h"
#include "decoder/decoder.h"
#include "frontend/mfcc.h"
#include "frontend/wav.h"
#include "lexicon/arabic_g2p.h"
#include "lexicon/lexicon.h"
#include "lexicon/phone_set.h"
#include "lm/bigram_lm.h"
#include "pipeline/experiment.h"
#include "pipeline/synth.h"
#include "scoring/alignment.h"

using sawt::Error;
using sawt::ErrorKind;

namespace {

thread_local std::string g_last_error;

sawt_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage: return SAWT_ERR_USAGE;
    case ErrorKind::kData: return SAWT_ERR_DATA;
    case ErrorKind::kIo: return SAWT_ERR_IO;
    case ErrorKind::kNumeric: return SAWT_ERR_NUMERIC;
  }
  return SAWT_ERR_INTERNAL;
}

template <typename Fn>
sawt_status wrap(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SAWT_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SAWT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SAWT_ERR_INTERNAL;
  }
}

sawt_status fill_buffer(const std::string& text, char* out, size_t out_size) {
  if (!out || out_size == 0) {
    g_last_error = "output buffer is null or empty";
    return SAWT_ERR_USAGE;
  }
  if (text.size() + 1 > out_size) {
    g_last_error = sawt::str_cat("output buffer too small: need ", text.size() + 1, " bytes");
    return SAWT_ERR_BUFFER;
  }
  std::memcpy(out, text.c_str(), text.size() + 1);
  return SAWT_OK;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorKind::kUsage, std::string(what) + " is null");
}

}  // namespace

struct sawt_features {
  sawt::FeatureMatrix matrix;
};
struct sawt_phone_set {
  sawt::PhoneSet phones;
};
struct sawt_lexicon {
  sawt::Lexicon lexicon;
};
struct sawt_acoustic_model {
  sawt::AcousticModel model;
};
struct sawt_lm {
  sawt::BigramLm lm;
};
struct sawt_config {
  sawt::ExperimentConfig config;
};

extern "C" {

const char* sawt_version(void) { return "1.0.0"; }

const char* sawt_last_error(void) { return g_last_error.c_str(); }

void sawt_frontend_params_init(sawt_frontend_params* params) {
  if (!params) return;
  const sawt::FrontendConfig defaults;
  params->pre_emphasis = defaults.pre_emphasis;
  params->frame_length_ms = defaults.frame_length_ms;
  params->frame_shift_ms = defaults.frame_shift_ms;
  params->fft_size = defaults.fft_size;
  params->num_filters = defaults.num_filters;
  params->num_cepstra = defaults.num_cepstra;
  params->low_freq = defaults.low_freq;
  params->high_freq = defaults.high_freq;
  params->log_floor = defaults.log_floor;
}

static sawt::FrontendConfig to_config(const sawt_frontend_params* params) {
  sawt::FrontendConfig config;
  if (!params) return config;
  config.pre_emphasis = params->pre_emphasis;
  config.frame_length_ms = params->frame_length_ms;
  config.frame_shift_ms = params->frame_shift_ms;
  config.fft_size = params->fft_size;
  config.num_filters = params->num_filters;
  config.num_cepstra = params->num_cepstra;
  config.low_freq = params->low_freq;
  config.high_freq = params->high_freq;
  config.log_floor = params->log_floor;
  return config;
}

sawt_status sawt_features_from_wav(const char* wav_path, const sawt_frontend_params* params,
                                   sawt_features** out) {
  return wrap([&] {
    require(wav_path, "wav_path");
    require(out, "out");
    auto* handle = new sawt_features{
        sawt::extract_features(sawt::read_wav(wav_path), to_config(params))};
    *out = handle;
  });
}

sawt_status sawt_features_load(const char* path, sawt_features** out) {
  return wrap([&] {
    require(path, "path");
    require(out, "out");
    *out = new sawt_features{sawt::FeatureMatrix::load(path)};
  });
}

sawt_status sawt_features_save(const sawt_features* features, const char* path) {
  return wrap([&] {
    require(features, "features");
    require(path, "path");
    features->matrix.save(path);
  });
}

int sawt_features_rows(const sawt_features* features) {
  return features ? features->matrix.rows() : 0;
}

int sawt_features_cols(const sawt_features* features) {
  return features ? features->matrix.cols() : 0;
}

const double* sawt_features_data(const sawt_features* features) {
  return features ? features->matrix.data().data() : nullptr;
}

void sawt_features_free(sawt_features* features) { delete features; }

sawt_status sawt_phone_set_load(const char* path, sawt_phone_set** out) {
  return wrap([&] {
    require(path, "path");
    require(out, "out");
    *out = new sawt_phone_set{sawt::PhoneSet::load(path)};
  });
}

int sawt_phone_set_size(const sawt_phone_set* phones) {
  return phones ? phones->phones.size() : 0;
}

const char* sawt_phone_set_phone(const sawt_phone_set* phones, int index) {
  if (!phones || index < 0 || index >= phones->phones.size()) return nullptr;
  return phones->phones.phones()[index].c_str();
}

void sawt_phone_set_free(sawt_phone_set* phones) { delete phones; }

sawt_status sawt_g2p_word(const char* utf8_word, char* out, size_t out_size) {
  std::string result;
  const sawt_status status = wrap([&] {
    require(utf8_word, "utf8_word");
    result = sawt::join(sawt::graphemes_to_phones(utf8_word), " ");
  });
  if (status != SAWT_OK) return status;
  return fill_buffer(result, out, out_size);
}

sawt_status sawt_lexicon_load(const char* path, const sawt_phone_set* phones,
                              sawt_lexicon** out) {
  return wrap([&] {
    require(path, "path");
    require(phones, "phones");
    require(out, "out");
    *out = new sawt_lexicon{sawt::Lexicon::parse(path, phones->phones)};
  });
}

int sawt_lexicon_num_words(const sawt_lexicon* lexicon) {
  return lexicon ? lexicon->lexicon.num_words() : 0;
}

int sawt_lexicon_num_entries(const sawt_lexicon* lexicon) {
  return lexicon ? lexicon->lexicon.num_entries() : 0;
}

void sawt_lexicon_free(sawt_lexicon* lexicon) { delete lexicon; }

sawt_status sawt_acoustic_model_load(const char* path, sawt_acoustic_model** out) {
  return wrap([&] {
    require(path, "path");
    require(out, "out");
    *out = new sawt_acoustic_model{sawt::AcousticModel::load(path)};
  });
}

int sawt_acoustic_model_dim(const sawt_acoustic_model* model) {
  return model ? model->model.dim() : 0;
}

void sawt_acoustic_model_free(sawt_acoustic_model* model) { delete model; }

sawt_status sawt_lm_load(const char* arpa_path, sawt_lm** out) {
  return wrap([&] {
    require(arpa_path, "arpa_path");
    require(out, "out");
    *out = new sawt_lm{sawt::read_arpa(arpa_path)};
  });
}

sawt_status sawt_lm_sentence_logprob(const sawt_lm* lm, const char* sentence, double* out) {
  return wrap([&] {
    require(lm, "lm");
    require(sentence, "sentence");
    require(out, "out");
    *out = lm->lm.sentence_logp(sawt::split_ws(sentence));
  });
}

void sawt_lm_free(sawt_lm* lm) { delete lm; }

void sawt_decoder_params_init(sawt_decoder_params* params) {
  if (!params) return;
  const sawt::DecoderConfig defaults;
  params->beam = defaults.beam;
  params->max_active = defaults.max_active;
  params->lm_weight = defaults.lm_weight;
  params->word_insertion_penalty = defaults.word_insertion_penalty;
  params->silence_insertion = defaults.silence_insertion ? 1 : 0;
}

sawt_status sawt_decode(const sawt_acoustic_model* model, const sawt_lm* lm,
                        const sawt_lexicon* lexicon, const sawt_features* features,
                        const sawt_decoder_params* params, char* hyp, size_t hyp_size,
                        double* log_score) {
  std::string result;
  const sawt_status status = wrap([&] {
    require(model, "model");
    require(lm, "lm");
    require(lexicon, "lexicon");
    require(features, "features");
    sawt::DecoderConfig config;
    if (params) {
      config.beam = params->beam;
      config.max_active = params->max_active;
      config.lm_weight = params->lm_weight;
      config.word_insertion_penalty = params->word_insertion_penalty;
      config.silence_insertion = params->silence_insertion != 0;
    }
    const sawt::DecodeResult decoded =
        sawt::decode(model->model, lm->lm, lexicon->lexicon, features->matrix, config);
    result = sawt::join(decoded.word_labels(), " ");
    if (log_score) *log_score = decoded.log_score;
  });
  if (status != SAWT_OK) return status;
  return fill_buffer(result, hyp, hyp_size);
}

sawt_status sawt_align_tokens(const char* ref, const char* hyp, sawt_align_counts* out) {
  return wrap([&] {
    require(ref, "ref");
    require(hyp, "hyp");
    require(out, "out");
    const sawt::AlignmentResult result =
        sawt::align(sawt::split_ws(ref), sawt::split_ws(hyp));
    out->n_ref = result.n_ref;
    out->matches = result.matches;
    out->substitutions = result.substitutions;
    out->deletions = result.deletions;
    out->insertions = result.insertions;
  });
}

sawt_status sawt_config_new(sawt_config** out) {
  return wrap([&] {
    require(out, "out");
    *out = new sawt_config{};
  });
}

sawt_status sawt_config_load(const char* path, sawt_config** out) {
  return wrap([&] {
    require(path, "path");
    require(out, "out");
    *out = new sawt_config{sawt::ExperimentConfig::load(path)};
  });
}

sawt_status sawt_config_set(sawt_config* config, const char* key, const char* value) {
  return wrap([&] {
    require(config, "config");
    require(key, "key");
    require(value, "value");
    config->config.set(key, value);
  });
}

sawt_status sawt_config_dump(const sawt_config* config, char* out, size_t out_size) {
  std::string text;
  const sawt_status status = wrap([&] {
    require(config, "config");
    text = config->config.to_string();
  });
  if (status != SAWT_OK) return status;
  return fill_buffer(text, out, out_size);
}

void sawt_config_free(sawt_config* config) { delete config; }

sawt_status sawt_pipeline_featextract(const sawt_config* config) {
  return wrap([&] {
    require(config, "config");
    sawt::stage_featextract(config->config);
  });
}

sawt_status sawt_pipeline_compile_dict(const sawt_config* config) {
  return wrap([&] {
    require(config, "config");
    sawt::stage_compile_dict(config->config);
  });
}

sawt_status sawt_pipeline_train_lm(const sawt_config* config) {
  return wrap([&] {
    require(config, "config");
    sawt::stage_train_lm(config->config);
  });
}

sawt_status sawt_pipeline_train_am(const sawt_config* config) {
  return wrap([&] {
    require(config, "config");
    sawt::stage_train_am(config->config);
  });
}

sawt_status sawt_pipeline_decode(const sawt_config* config) {
  return wrap([&] {
    require(config, "config");
    sawt::stage_decode(config->config);
  });
}

sawt_status sawt_pipeline_score(const sawt_config* config, char* report, size_t report_size) {
  std::string text;
  const sawt_status status = wrap([&] {
    require(config, "config");
    text = sawt::stage_score(config->config).to_text();
  });
  if (status != SAWT_OK) return status;
  if (!report || report_size == 0) return SAWT_OK;  // report is optional here
  return fill_buffer(text, report, report_size);
}

sawt_status sawt_pipeline_run(const sawt_config* config, char* report, size_t report_size) {
  std::string text;
  const sawt_status status = wrap([&] {
    require(config, "config");
    text = sawt::run_experiment(config->config).to_text();
  });
  if (status != SAWT_OK) return status;
  if (!report || report_size == 0) return SAWT_OK;
  return fill_buffer(text, report, report_size);
}

sawt_status sawt_synth_corpus(const char* out_dir, int num_utterances,
                              unsigned long long seed) {
  return wrap([&] {
    require(out_dir, "out_dir");
    sawt::SynthOptions options;
    options.out_dir = out_dir;
    options.num_utterances = num_utterances;
    options.seed = seed;
    sawt::synth_corpus(options);
  });
}

}  // extern "C"
