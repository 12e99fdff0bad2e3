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

#ifndef SAWT_PIPELINE_EXPERIMENT_H_
#define SAWT_PIPELINE_EXPERIMENT_H_

#include "pipeline/experiment_config.h"
#include "scoring/report.h"

namespace sawt {

// Pipeline stages. Each one communicates with the next through files under
// out_dir, so every intermediate artifact can be inspected and reloaded:
//   features/<id>.feat   39-dim normalized features
//   durations.txt        "id seconds" per utterance
//   split.txt            "id train|test"
//   lm.arpa              bigram language model
//   am.txt               acoustic model
//   hyp.trans            decoded hypotheses, "WORDS (id)"
//   decode_details.json  scores, word boundaries, real-time factors
//   report.txt/.json     scoring report
// Errors are re-thrown with the stage name prefixed.

void stage_featextract(const ExperimentConfig& config);
void stage_compile_dict(const ExperimentConfig& config);  // wordlist -> dictionary via g2p
void stage_train_lm(const ExperimentConfig& config);
void stage_train_am(const ExperimentConfig& config);
void stage_decode(const ExperimentConfig& config);
CorpusReport stage_score(const ExperimentConfig& config);

// featextract + train-lm + train-am + decode + score, end to end.
CorpusReport run_experiment(const ExperimentConfig& config);

}  // namespace sawt

#endif  // SAWT_PIPELINE_EXPERIMENT_H_
