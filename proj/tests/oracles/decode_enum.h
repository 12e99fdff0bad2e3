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

// Brute-force hypothesis scorer: enumerates word sequences up to a length
// bound and scores each one with its own max-plus trellis built directly
// from the model parameters (no CompositeHmm, no decoder code), plus the
// LM and insertion-penalty terms of the decoding objective.

#ifndef SAWT_TESTS_ORACLES_DECODE_ENUM_H_
#define SAWT_TESTS_ORACLES_DECODE_ENUM_H_

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "am/acoustic_model.h"
#include "common/logmath.h"
#include "frontend/feature_matrix.h"
#include "lexicon/lexicon.h"
#include "lm/bigram_lm.h"

namespace sawt_test {

// Viterbi over the concatenated per-phone chains of one pronunciation
// sequence. Returns kLogZero when no path of length T exists.
inline double oracle_viterbi(const sawt::AcousticModel& model,
                             const std::vector<std::vector<std::string>>& pronunciations,
                             const sawt::FeatureMatrix& features) {
  using sawt::kLogZero;
  struct St {
    const sawt::Gmm* gmm;
    int unit;   // index into the flattened unit list
    int local;  // 0..2
  };
  std::vector<const sawt::UnitModel*> units;
  for (const auto& pron : pronunciations)
    for (const std::string& phone : pron)
      units.push_back(&model.unit(model.resolve_unit(sawt::PhoneUnit{phone})));

  std::vector<St> states;
  for (size_t u = 0; u < units.size(); ++u)
    for (int s = 0; s < sawt::kStatesPerUnit; ++s)
      states.push_back({&units[u]->states[s], static_cast<int>(u), s});
  const int N = static_cast<int>(states.size());
  const int T = features.rows();

  // transition weight between flattened states, following exits through
  // the next unit's entry distribution
  const auto trans = [&](int from, int to) -> double {
    const St& a = states[from];
    const St& b = states[to];
    if (a.unit == b.unit) return units[a.unit]->log_trans[a.local][b.local];
    if (b.unit == a.unit + 1)
      return units[a.unit]->log_trans[a.local][sawt::kExit] + units[b.unit]->log_pi[b.local];
    return kLogZero;
  };

  std::vector<double> cur(N, kLogZero), next(N);
  for (int s = 0; s < sawt::kStatesPerUnit && s < N; ++s) {
    if (units[0]->log_pi[s] == kLogZero) continue;
    double v = units[0]->log_pi[s];
    v += states[s].gmm->log_density(features.row(0), features.cols());
    cur[s] = v;
  }
  for (int t = 1; t < T; ++t) {
    for (int s = 0; s < N; ++s) {
      double best = kLogZero;
      for (int p = 0; p < N; ++p) {
        if (cur[p] == kLogZero) continue;
        const double w = trans(p, s);
        if (w == kLogZero) continue;
        const double cand = cur[p] + w;
        if (cand > best) best = cand;
      }
      if (best == kLogZero) {
        next[s] = kLogZero;
        continue;
      }
      best += states[s].gmm->log_density(features.row(t), features.cols());
      next[s] = best;
    }
    cur.swap(next);
  }
  double best = kLogZero;
  for (int s = 0; s < N; ++s) {
    if (cur[s] == kLogZero) continue;
    if (states[s].unit != static_cast<int>(units.size()) - 1) continue;
    const double exit = units[states[s].unit]->log_trans[states[s].local][sawt::kExit];
    if (exit == kLogZero) continue;
    const double cand = cur[s] + exit;
    if (cand > best) best = cand;
  }
  return best;
}

struct OracleHypothesis {
  std::vector<std::string> words;
  double score = sawt::kLogZero;
};

// Scores every word sequence of length 1..max_words using first
// pronunciations, mirroring the decoding objective:
//   acoustic + lm_weight * ln P(W) + num_words * ln(wip)
inline OracleHypothesis best_hypothesis(const sawt::AcousticModel& model,
                                        const sawt::BigramLm& lm, const sawt::Lexicon& lexicon,
                                        const sawt::FeatureMatrix& features, double lm_weight,
                                        double wip, int max_words) {
  const std::vector<std::string> words = lexicon.words();
  OracleHypothesis best;

  std::vector<int> sequence;
  const std::function<void(int)> recurse = [&](int remaining) {
    if (!sequence.empty()) {
      std::vector<std::vector<std::string>> prons;
      double lm_log10 = 0.0;
      std::string prev = sawt::kSentStart;
      for (int w : sequence) {
        prons.push_back(lexicon.first(words[w])->phones);
        lm_log10 += lm.cond_logp(prev, words[w]);
        prev = words[w];
      }
      lm_log10 += lm.cond_logp(prev, sawt::kSentEnd);
      const double acoustic = oracle_viterbi(model, prons, features);
      if (acoustic != sawt::kLogZero) {
        const double total = acoustic + lm_weight * sawt::kLn10 * lm_log10 +
                             static_cast<double>(sequence.size()) * std::log(wip);
        if (total > best.score) {
          best.score = total;
          best.words.clear();
          for (int w : sequence) best.words.push_back(words[w]);
        }
      }
    }
    if (remaining == 0) return;
    for (int w = 0; w < static_cast<int>(words.size()); ++w) {
      sequence.push_back(w);
      recurse(remaining - 1);
      sequence.pop_back();
    }
  };
  recurse(max_words);
  return best;
}

}  // namespace sawt_test

#endif  // SAWT_TESTS_ORACLES_DECODE_ENUM_H_
