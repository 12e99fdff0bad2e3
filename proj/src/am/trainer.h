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

#ifndef SAWT_AM_TRAINER_H_
#define SAWT_AM_TRAINER_H_

#include <map>
#include <utility>
#include <vector>

#include "am/composite_hmm.h"

namespace sawt {

// Zeroth/first/second-order statistics per mixture component.
struct GmmStats {
  std::vector<double> occupancy;
  std::vector<std::vector<double>> first;
  std::vector<std::vector<double>> second;

  void ensure(int components, int dim);
  void merge(const GmmStats& other);
};

struct UnitStats {
  std::array<std::array<double, kStatesPerUnit + 1>, kStatesPerUnit> trans{};
  std::array<GmmStats, kStatesPerUnit> states;

  void merge(const UnitStats& other);
};

// Sufficient statistics from forward-backward passes. Merging two
// accumulators equals accumulating both datasets in one pass, up to
// floating-point reassociation.
struct Accumulators {
  std::map<int, UnitStats> units;  // keyed by model unit id
  double total_log_likelihood = 0.0;
  long num_frames = 0;
  long num_utterances = 0;

  void merge(const Accumulators& other);
};

// Log-domain forward-backward over the composite graph. Returns the data
// log-likelihood; posterior-weighted statistics go into *acc when given.
// gamma_out (T x num_states, linear domain) is for diagnostics/tests.
// Throws Error(kNumeric) when no state path fits the frame count.
double forward_backward(const CompositeHmm& hmm, const FeatureMatrix& features,
                        Accumulators* acc, FeatureMatrix* gamma_out = nullptr);

struct UpdateOptions {
  double min_mixture_occupancy = 3.0;
};

// EM re-estimation. States below the occupancy threshold keep their
// parameters; variances are floored with the model's floor; transition
// rows are renormalized over the structurally allowed targets.
AcousticModel baum_welch_update(const Accumulators& acc, const AcousticModel& model,
                                const UpdateOptions& options = {});

struct TrainingUtterance {
  const FeatureMatrix* features = nullptr;
  std::vector<std::string> phones;  // transcription as phone labels, no SIL
};

struct TrainOptions {
  int iterations = 1;
  double min_mixture_occupancy = 3.0;
  bool add_boundary_silence = true;
  bool use_triphones = false;
  int threads = 1;
};

struct TrainReport {
  std::vector<double> iteration_log_likelihood;  // total over scored utterances
  std::vector<long> iteration_skipped;           // utterances without a valid path
};

// Units for a phone sequence: triphones with wildcard edges when enabled
// (SIL always stays context-independent), monophones otherwise.
std::vector<PhoneUnit> make_phone_units(const std::vector<std::string>& phones, bool triphones);

// `iterations` rounds of accumulate-then-update over the corpus.
// Utterances whose graph admits no path of length T are skipped with a
// warning and counted in the report.
std::pair<AcousticModel, TrainReport> train(const std::vector<TrainingUtterance>& corpus,
                                            AcousticModel model, const TrainOptions& options);

// Clones monophones into triphone units for every context seen in the
// corpus; returns the number of units added.
int add_seen_triphones(AcousticModel* model, const std::vector<TrainingUtterance>& corpus,
                       bool add_boundary_silence);

}  // namespace sawt

#endif  // SAWT_AM_TRAINER_H_
