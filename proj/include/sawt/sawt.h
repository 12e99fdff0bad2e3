/* Copyright 2026 The Sawt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the sawt speech recognition toolkit.
 *
 * All functions return SAWT_OK (0) on success or a sawt_status error code;
 * sawt_last_error() describes the most recent failure on the calling
 * thread. Objects are opaque handles released with their _free function.
 * Handles are immutable after creation and may be shared across threads.
 */

#ifndef SAWT_SAWT_H_
#define SAWT_SAWT_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sawt_status {
  SAWT_OK = 0,
  SAWT_ERR_USAGE = 1,   /* bad arguments or configuration */
  SAWT_ERR_DATA = 2,    /* malformed or inconsistent input data */
  SAWT_ERR_NUMERIC = 3, /* numerical failure (no valid path, ...) */
  SAWT_ERR_IO = 4,      /* file system failure */
  SAWT_ERR_BUFFER = 5,  /* caller buffer too small */
  SAWT_ERR_INTERNAL = 6
} sawt_status;

const char* sawt_version(void);
/* Message for the last failing call on this thread; empty string if none. */
const char* sawt_last_error(void);

/* ----------------------------------------------------------- front end */

typedef struct sawt_frontend_params {
  double pre_emphasis;
  double frame_length_ms;
  double frame_shift_ms;
  int fft_size;
  int num_filters;
  int num_cepstra;
  double low_freq;
  double high_freq;
  double log_floor;
} sawt_frontend_params;

void sawt_frontend_params_init(sawt_frontend_params* params);

typedef struct sawt_features sawt_features;

/* 16-bit mono PCM WAV -> 39-dim normalized features (MFCC+E, deltas,
 * per-utterance mean/variance normalization). params may be NULL for the
 * defaults. */
sawt_status sawt_features_from_wav(const char* wav_path,
                                   const sawt_frontend_params* params,
                                   sawt_features** out);
sawt_status sawt_features_load(const char* path, sawt_features** out);
sawt_status sawt_features_save(const sawt_features* features, const char* path);
int sawt_features_rows(const sawt_features* features);
int sawt_features_cols(const sawt_features* features);
/* Row-major data, rows*cols doubles, owned by the handle. */
const double* sawt_features_data(const sawt_features* features);
void sawt_features_free(sawt_features* features);

/* ------------------------------------------------------------- lexicon */

typedef struct sawt_phone_set sawt_phone_set;

sawt_status sawt_phone_set_load(const char* path, sawt_phone_set** out);
int sawt_phone_set_size(const sawt_phone_set* phones); /* includes SIL */
const char* sawt_phone_set_phone(const sawt_phone_set* phones, int index);
void sawt_phone_set_free(sawt_phone_set* phones);

/* Transliterates one fully diacritized Arabic word (UTF-8) into a
 * space-joined phone string. */
sawt_status sawt_g2p_word(const char* utf8_word, char* out, size_t out_size);

typedef struct sawt_lexicon sawt_lexicon;

sawt_status sawt_lexicon_load(const char* path, const sawt_phone_set* phones,
                              sawt_lexicon** out);
int sawt_lexicon_num_words(const sawt_lexicon* lexicon);
int sawt_lexicon_num_entries(const sawt_lexicon* lexicon);
void sawt_lexicon_free(sawt_lexicon* lexicon);

/* -------------------------------------------------------------- models */

typedef struct sawt_acoustic_model sawt_acoustic_model;

sawt_status sawt_acoustic_model_load(const char* path, sawt_acoustic_model** out);
int sawt_acoustic_model_dim(const sawt_acoustic_model* model);
void sawt_acoustic_model_free(sawt_acoustic_model* model);

typedef struct sawt_lm sawt_lm;

sawt_status sawt_lm_load(const char* arpa_path, sawt_lm** out);
/* log10 probability of a whitespace-tokenized sentence (markers added). */
sawt_status sawt_lm_sentence_logprob(const sawt_lm* lm, const char* sentence,
                                     double* out);
void sawt_lm_free(sawt_lm* lm);

/* ------------------------------------------------------------- decoding */

typedef struct sawt_decoder_params {
  double beam;                  /* linear-domain pruning width, > 0 */
  int max_active;               /* token cap per frame */
  double lm_weight;             /* scale on ln P(W) */
  double word_insertion_penalty; /* linear, applied as ln() per word */
  int silence_insertion;        /* optional SIL between words */
} sawt_decoder_params;

void sawt_decoder_params_init(sawt_decoder_params* params);

/* Best word sequence as a space-joined string into `hyp`. `log_score`
 * (optional) receives the total path score. An empty hypothesis with
 * SAWT_OK means every token was pruned. */
sawt_status sawt_decode(const sawt_acoustic_model* model, const sawt_lm* lm,
                        const sawt_lexicon* lexicon, const sawt_features* features,
                        const sawt_decoder_params* params, char* hyp,
                        size_t hyp_size, double* log_score);

/* -------------------------------------------------------------- scoring */

typedef struct sawt_align_counts {
  long n_ref;
  long matches;
  long substitutions;
  long deletions;
  long insertions;
} sawt_align_counts;

/* Levenshtein alignment of two whitespace-tokenized strings. */
sawt_status sawt_align_tokens(const char* ref, const char* hyp,
                              sawt_align_counts* out);

/* ------------------------------------------------------------- pipeline */

/* Key=value experiment configuration; see the distributed documentation
 * for the schema. */
typedef struct sawt_config sawt_config;

sawt_status sawt_config_new(sawt_config** out);
sawt_status sawt_config_load(const char* path, sawt_config** out);
sawt_status sawt_config_set(sawt_config* config, const char* key, const char* value);
/* Full key=value dump into the caller's buffer. */
sawt_status sawt_config_dump(const sawt_config* config, char* out, size_t out_size);
void sawt_config_free(sawt_config* config);

/* Batch pipeline stages; artifacts are written under the configured
 * out_dir. */
sawt_status sawt_pipeline_featextract(const sawt_config* config);
sawt_status sawt_pipeline_compile_dict(const sawt_config* config);
sawt_status sawt_pipeline_train_lm(const sawt_config* config);
sawt_status sawt_pipeline_train_am(const sawt_config* config);
sawt_status sawt_pipeline_decode(const sawt_config* config);
/* Writes report.txt/report.json and returns the report text. */
sawt_status sawt_pipeline_score(const sawt_config* config, char* report,
                                size_t report_size);
sawt_status sawt_pipeline_run(const sawt_config* config, char* report,
                              size_t report_size);

/* Deterministic pseudo-speech corpus for end-to-end experiments. */
sawt_status sawt_synth_corpus(const char* out_dir, int num_utterances,
                              unsigned long long seed);

#ifdef __cplusplus
}
#endif

#endif /* SAWT_SAWT_H_ */
