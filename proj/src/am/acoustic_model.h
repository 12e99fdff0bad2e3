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

#ifndef SAWT_AM_ACOUSTIC_MODEL_H_
#define SAWT_AM_ACOUSTIC_MODEL_H_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "am/gmm.h"
#include "frontend/feature_matrix.h"
#include "lexicon/phone_set.h"

namespace sawt {

// 3 emitting states per unit; column kExit in the transition matrix is the
// exit pseudo-state.
inline constexpr int kStatesPerUnit = 3;
inline constexpr int kExit = kStatesPerUnit;

// A phone with optional left/right context; "*" is the wildcard.
struct PhoneUnit {
  std::string base;
  std::string left = "*";
  std::string right = "*";

  bool is_monophone() const { return left == "*" && right == "*"; }
  PhoneUnit monophone() const { return PhoneUnit{base, "*", "*"}; }
  std::string key() const { return left + "-" + base + "+" + right; }
  bool operator==(const PhoneUnit& o) const {
    return base == o.base && left == o.left && right == o.right;
  }
};

// One left-right unit: log transitions (self, forward, skip; rows sum to 1
// in the linear domain), log initial distribution, one Gmm per state.
// Structural zeros (backward moves, jumps past i+2) stay -inf forever.
struct UnitModel {
  std::array<std::array<double, kStatesPerUnit + 1>, kStatesPerUnit> log_trans;
  std::array<double, kStatesPerUnit> log_pi;
  std::array<Gmm, kStatesPerUnit> states;

  static bool transition_allowed(int from, int to) {
    return to >= from && to <= from + 2 && to <= kExit;
  }
};

// Map from (context-dependent) phone units to their HMMs. A monophone
// entry exists for every phone; context-dependent lookups fall back to it.
//
// FILE FORMAT (text): a "SAWT_AM 1" header, dimension, phone list,
// per-dimension variance floor, then per unit the linear-domain pi and
// transition rows and per-state mixture parameters, all with enough digits
// to round-trip doubles.
class AcousticModel {
 public:
  AcousticModel() = default;
  AcousticModel(std::vector<std::string> phones, int dim, std::vector<double> var_floor);

  int dim() const { return dim_; }
  const std::vector<double>& var_floor() const { return var_floor_; }
  const std::vector<std::string>& phones() const { return phones_; }

  int num_units() const { return static_cast<int>(units_.size()); }
  const std::vector<PhoneUnit>& unit_keys() const { return keys_; }
  const UnitModel& unit(int id) const { return units_[id]; }
  UnitModel& unit(int id) { return units_[id]; }
  const PhoneUnit& unit_key(int id) const { return keys_[id]; }

  int find_unit(const PhoneUnit& u) const;  // -1 when absent
  // Exact match, else monophone backoff; throws Error(kData) when even the
  // monophone is missing.
  int resolve_unit(const PhoneUnit& u) const;
  int add_unit(const PhoneUnit& u, UnitModel model);  // throws on duplicates

  void save(const std::string& path) const;
  static AcousticModel load(const std::string& path);

 private:
  int dim_ = 0;
  std::vector<double> var_floor_;
  std::vector<std::string> phones_;
  std::vector<PhoneUnit> keys_;
  std::vector<UnitModel> units_;
  std::map<std::string, int> index_;  // unit key -> id
};

// Flat start: every monophone state gets the global mean/variance of the
// corpus; emitting transitions are loop 0.6 / forward 0.3 / skip 0.1 (the
// last row renormalized), pi puts all mass on state 0. With mixtures > 1
// the components get deterministic +-0.2 stddev offsets so EM can pull
// them apart. The variance floor is floor_scale * global variance.
AcousticModel flat_start_init(const PhoneSet& phones,
                              const std::vector<const FeatureMatrix*>& corpus,
                              int mixtures, double floor_scale = 1e-4);

// Annotates each phone with its neighbors; sequence edges get wildcards.
std::vector<PhoneUnit> expand_context(const std::vector<std::string>& phone_seq);

// Doubles every Gaussian: means perturbed +-0.2 stddev, weights halved.
AcousticModel split_mixtures(const AcousticModel& model);

}  // namespace sawt

#endif  // SAWT_AM_ACOUSTIC_MODEL_H_
