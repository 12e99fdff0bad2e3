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

#include "am/composite_hmm.h"

#include "common/error.h"
#include "common/logmath.h"

namespace sawt {

int CompositeHmm::add_state(State s) {
  index_built_ = false;
  if (s.unit_seq + 1 > num_units_) num_units_ = s.unit_seq + 1;
  states_.push_back(std::move(s));
  return num_states() - 1;
}

void CompositeHmm::add_arc(Arc a) {
  index_built_ = false;
  arcs_.push_back(a);
}

void CompositeHmm::add_entry(int state, double logp) {
  if (logp == kLogZero) return;
  entries_.push_back(Entry{state, logp});
}

void CompositeHmm::add_final(int state, double logp, int unit_id, int row) {
  if (logp == kLogZero) return;
  finals_.push_back(Final{state, logp, unit_id, row});
}

void CompositeHmm::build_index() const {
  into_.assign(num_states(), {});
  from_.assign(num_states(), {});
  for (int i = 0; i < static_cast<int>(arcs_.size()); ++i) {
    into_[arcs_[i].to].push_back(i);
    from_[arcs_[i].from].push_back(i);
  }
  index_built_ = true;
}

const std::vector<std::vector<int>>& CompositeHmm::arcs_into() const {
  if (!index_built_) build_index();
  return into_;
}

const std::vector<std::vector<int>>& CompositeHmm::arcs_from() const {
  if (!index_built_) build_index();
  return from_;
}

CompositeHmm compose_utterance_hmm(const AcousticModel& model,
                                   const std::vector<PhoneUnit>& units) {
  if (units.empty()) throw Error(ErrorKind::kData, "cannot compose an empty unit sequence");

  CompositeHmm hmm;
  const int P = static_cast<int>(units.size());
  std::vector<int> unit_ids(P);
  std::vector<int> base(P);  // first composite state of each unit

  for (int p = 0; p < P; ++p) {
    unit_ids[p] = model.resolve_unit(units[p]);
    const UnitModel& unit = model.unit(unit_ids[p]);
    for (int s = 0; s < kStatesPerUnit; ++s) {
      CompositeHmm::State state;
      state.gmm = &unit.states[s];
      state.unit_seq = p;
      state.phone_state = s;
      state.unit_id = unit_ids[p];
      state.label = units[p].base;
      const int id = hmm.add_state(std::move(state));
      if (s == 0) base[p] = id;
    }
  }

  // Entry through the first unit's pi.
  {
    const UnitModel& first = model.unit(unit_ids[0]);
    for (int s = 0; s < kStatesPerUnit; ++s)
      hmm.add_entry(base[0] + s, first.log_pi[s]);
  }

  for (int p = 0; p < P; ++p) {
    const UnitModel& unit = model.unit(unit_ids[p]);
    for (int i = 0; i < kStatesPerUnit; ++i) {
      for (int j = 0; j <= kExit; ++j) {
        const double logp = unit.log_trans[i][j];
        if (logp == kLogZero) continue;
        if (j < kStatesPerUnit) {
          hmm.add_arc({base[p] + i, base[p] + j, logp, unit_ids[p], i, j});
        } else if (p + 1 < P) {
          // exit flows into the next unit's pi
          const UnitModel& next = model.unit(unit_ids[p + 1]);
          for (int s = 0; s < kStatesPerUnit; ++s) {
            if (next.log_pi[s] == kLogZero) continue;
            hmm.add_arc({base[p] + i, base[p + 1] + s, logp + next.log_pi[s],
                         unit_ids[p], i, kExit});
          }
        } else {
          hmm.add_final(base[p] + i, logp, unit_ids[p], i);
        }
      }
    }
  }
  return hmm;
}

std::vector<std::string> with_boundary_silence(const std::vector<std::string>& phones) {
  std::vector<std::string> out;
  out.reserve(phones.size() + 2);
  out.push_back(PhoneSet::kSilence);
  out.insert(out.end(), phones.begin(), phones.end());
  out.push_back(PhoneSet::kSilence);
  return out;
}

}  // namespace sawt
