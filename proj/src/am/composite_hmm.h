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

#ifndef SAWT_AM_COMPOSITE_HMM_H_
#define SAWT_AM_COMPOSITE_HMM_H_

#include <string>
#include <vector>

#include "am/acoustic_model.h"

namespace sawt {

// Flat arc graph for one utterance (or one word): unit HMMs concatenated
// left to right. States reference Gmms owned elsewhere (the model or the
// test fixture); the owner must outlive the graph.
//
// Arcs carry the accumulator cell they feed: (unit_id, row, col) with
// col == kExit for arcs that leave a unit. Cross-unit arc weights already
// include the entry weight of the next unit's pi.
class CompositeHmm {
 public:
  struct State {
    const Gmm* gmm = nullptr;
    int unit_seq = -1;     // position in the composed sequence
    int phone_state = 0;   // 0..2 within the unit
    int unit_id = -1;      // model unit id (or test-assigned)
    std::string label;     // phone label for alignment output
  };
  struct Arc {
    int from = 0, to = 0;
    double logp = 0.0;
    int unit_id = -1, row = 0, col = 0;
  };
  struct Entry {
    int state = 0;
    double logp = 0.0;
  };
  struct Final {
    int state = 0;
    double logp = 0.0;
    int unit_id = -1, row = 0;
  };

  int num_states() const { return static_cast<int>(states_.size()); }
  int add_state(State s);
  void add_arc(Arc a);
  void add_entry(int state, double logp);
  void add_final(int state, double logp, int unit_id, int row);

  const std::vector<State>& states() const { return states_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<Final>& finals() const { return finals_; }

  // Arc indices grouped by target / source state; built lazily.
  const std::vector<std::vector<int>>& arcs_into() const;
  const std::vector<std::vector<int>>& arcs_from() const;

  int num_units() const { return num_units_; }

 private:
  std::vector<State> states_;
  std::vector<Arc> arcs_;
  std::vector<Entry> entries_;
  std::vector<Final> finals_;
  mutable std::vector<std::vector<int>> into_, from_;
  mutable bool index_built_ = false;
  int num_units_ = 0;

  void build_index() const;
};

// Concatenates the units' HMMs. Every unit is resolved through the model
// (exact context or monophone backoff). Exit mass of unit k flows into
// unit k+1 through its pi.
CompositeHmm compose_utterance_hmm(const AcousticModel& model,
                                   const std::vector<PhoneUnit>& units);

// [SIL phones SIL]
std::vector<std::string> with_boundary_silence(const std::vector<std::string>& phones);

}  // namespace sawt

#endif  // SAWT_AM_COMPOSITE_HMM_H_
