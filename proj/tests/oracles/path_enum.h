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

// Exhaustive enumeration over all state paths of a composite graph, for
// checking the forward (sum) and Viterbi (max) recursions on small cases.
// Each path is accumulated left to right in the same addition order the
// dynamic programs use, so the Viterbi comparison can be exact.

#ifndef SAWT_TESTS_ORACLES_PATH_ENUM_H_
#define SAWT_TESTS_ORACLES_PATH_ENUM_H_

#include <vector>

#include "am/composite_hmm.h"
#include "common/logmath.h"
#include "frontend/feature_matrix.h"

namespace sawt_test {

struct PathEnumResult {
  double forward_log = sawt::kLogZero;  // logsumexp over complete paths
  double viterbi_log = sawt::kLogZero;  // max over complete paths
  long num_paths = 0;
};

inline void enumerate_paths(const sawt::CompositeHmm& hmm, const sawt::FeatureMatrix& logb,
                            int t, int state, double score, PathEnumResult* result) {
  const int T = logb.rows();
  if (t == T - 1) {
    for (const auto& f : hmm.finals()) {
      if (f.state != state) continue;
      double total = score;
      total += f.logp;
      result->forward_log = sawt::log_add(result->forward_log, total);
      if (total > result->viterbi_log) result->viterbi_log = total;
      ++result->num_paths;
    }
    return;
  }
  for (const auto& a : hmm.arcs()) {
    if (a.from != state) continue;
    double next = score;
    next += a.logp;
    next += logb.at(t + 1, a.to);
    enumerate_paths(hmm, logb, t + 1, a.to, next, result);
  }
}

// logb must hold the per-frame, per-state emission log-densities the
// implementation under test uses.
inline PathEnumResult enumerate_all_paths(const sawt::CompositeHmm& hmm,
                                          const sawt::FeatureMatrix& logb) {
  PathEnumResult result;
  for (const auto& e : hmm.entries()) {
    double score = e.logp;
    score += logb.at(0, e.state);
    enumerate_paths(hmm, logb, 0, e.state, score, &result);
  }
  return result;
}

inline sawt::FeatureMatrix emission_matrix(const sawt::CompositeHmm& hmm,
                                           const sawt::FeatureMatrix& features) {
  sawt::FeatureMatrix logb(features.rows(), hmm.num_states());
  for (int s = 0; s < hmm.num_states(); ++s)
    for (int t = 0; t < features.rows(); ++t)
      logb.at(t, s) = hmm.states()[s].gmm->log_density(features.row(t), features.cols());
  return logb;
}

}  // namespace sawt_test

#endif  // SAWT_TESTS_ORACLES_PATH_ENUM_H_
