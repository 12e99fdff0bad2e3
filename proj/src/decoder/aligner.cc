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

#include "decoder/aligner.h"

#include "common/error.h"
#include "common/logmath.h"

namespace sawt {

AlignmentPath viterbi_align(const CompositeHmm& hmm, const FeatureMatrix& features) {
  const int T = features.rows();
  const int N = hmm.num_states();
  if (T < 1) throw Error(ErrorKind::kData, "viterbi_align on empty features");
  const int dim = features.cols();

  FeatureMatrix logb(T, N);
  for (int s = 0; s < N; ++s) {
    const Gmm* gmm = hmm.states()[s].gmm;
    for (int t = 0; t < T; ++t) logb.at(t, s) = gmm->log_density(features.row(t), dim);
  }

  const auto& arcs = hmm.arcs();
  const auto& into = hmm.arcs_into();

  FeatureMatrix score(T, N);
  std::vector<std::vector<int>> back(T, std::vector<int>(N, -1));

  for (int s = 0; s < N; ++s) score.at(0, s) = kLogZero;
  for (const auto& e : hmm.entries()) {
    if (e.logp > score.at(0, e.state)) score.at(0, e.state) = e.logp;
  }
  for (int s = 0; s < N; ++s)
    if (score.at(0, s) != kLogZero) score.at(0, s) += logb.at(0, s);

  for (int t = 1; t < T; ++t) {
    for (int s = 0; s < N; ++s) {
      double best = kLogZero;
      int best_arc = -1;
      for (int ai : into[s]) {
        const auto& a = arcs[ai];
        const double prev = score.at(t - 1, a.from);
        if (prev == kLogZero) continue;
        const double cand = prev + a.logp;
        if (cand > best) {
          best = cand;
          best_arc = ai;
        }
      }
      score.at(t, s) = best == kLogZero ? kLogZero : best + logb.at(t, s);
      back[t][s] = best_arc;
    }
  }

  double best_total = kLogZero;
  int best_state = -1;
  for (const auto& f : hmm.finals()) {
    const double v = score.at(T - 1, f.state);
    if (v == kLogZero) continue;
    const double cand = v + f.logp;
    if (cand > best_total) {
      best_total = cand;
      best_state = f.state;
    }
  }
  if (best_state < 0)
    throw Error(ErrorKind::kNumeric,
                str_cat("no valid alignment of ", hmm.num_units(), " units to ", T, " frames"));

  AlignmentPath result;
  result.log_score = best_total;
  result.state_path.assign(T, -1);
  int s = best_state;
  for (int t = T - 1; t >= 0; --t) {
    result.state_path[t] = s;
    if (t > 0) s = arcs[back[t][s]].from;
  }

  int span_begin = 0;
  for (int t = 1; t <= T; ++t) {
    const int prev_unit = hmm.states()[result.state_path[t - 1]].unit_seq;
    if (t == T || hmm.states()[result.state_path[t]].unit_seq != prev_unit) {
      PhoneSpan span;
      span.label = hmm.states()[result.state_path[t - 1]].label;
      span.unit_seq = prev_unit;
      span.begin = span_begin;
      span.end = t;
      result.spans.push_back(std::move(span));
      span_begin = t;
    }
  }
  return result;
}

AlignmentPath viterbi_align(const AcousticModel& model, const FeatureMatrix& features,
                            const std::vector<std::string>& phones, bool triphones) {
  return viterbi_align(compose_utterance_hmm(model, make_phone_units(phones, triphones)),
                       features);
}

double score_state_path(const CompositeHmm& hmm, const FeatureMatrix& features,
                        const std::vector<int>& path) {
  const int T = features.rows();
  if (static_cast<int>(path.size()) != T)
    throw Error(ErrorKind::kUsage, "path length does not match frame count");
  const int dim = features.cols();
  const auto& arcs = hmm.arcs();
  const auto& from = hmm.arcs_from();

  double entry = kLogZero;
  for (const auto& e : hmm.entries())
    if (e.state == path[0] && e.logp > entry) entry = e.logp;
  if (entry == kLogZero) throw Error(ErrorKind::kNumeric, "path does not start at an entry state");

  double v = entry + hmm.states()[path[0]].gmm->log_density(features.row(0), dim);
  for (int t = 1; t < T; ++t) {
    double best = kLogZero;
    for (int ai : from[path[t - 1]]) {
      const auto& a = arcs[ai];
      if (a.to == path[t] && a.logp > best) best = a.logp;
    }
    if (best == kLogZero)
      throw Error(ErrorKind::kNumeric, str_cat("no arc between path states at frame ", t));
    v += best;
    v += hmm.states()[path[t]].gmm->log_density(features.row(t), dim);
  }
  double final_logp = kLogZero;
  for (const auto& f : hmm.finals())
    if (f.state == path[T - 1] && f.logp > final_logp) final_logp = f.logp;
  if (final_logp == kLogZero)
    throw Error(ErrorKind::kNumeric, "path does not end at a final state");
  return v + final_logp;
}

}  // namespace sawt
