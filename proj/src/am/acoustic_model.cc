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

#include "am/acoustic_model.h"

#include <cmath>

#include "common/error.h"
#include "common/io.h"
#include "common/logmath.h"
#include "common/text.h"

namespace sawt {

AcousticModel::AcousticModel(std::vector<std::string> phones, int dim,
                             std::vector<double> var_floor)
    : dim_(dim), var_floor_(std::move(var_floor)), phones_(std::move(phones)) {
  if (static_cast<int>(var_floor_.size()) != dim_)
    throw Error(ErrorKind::kUsage, "variance floor dimension mismatch");
}

int AcousticModel::find_unit(const PhoneUnit& u) const {
  auto it = index_.find(u.key());
  return it == index_.end() ? -1 : it->second;
}

int AcousticModel::resolve_unit(const PhoneUnit& u) const {
  int id = find_unit(u);
  if (id >= 0) return id;
  id = find_unit(u.monophone());
  if (id >= 0) return id;
  throw Error(ErrorKind::kData, "no model for phone unit " + u.key());
}

int AcousticModel::add_unit(const PhoneUnit& u, UnitModel model) {
  if (index_.count(u.key()))
    throw Error(ErrorKind::kUsage, "duplicate unit " + u.key());
  for (const Gmm& g : model.states)
    if (g.dim() != dim_)
      throw Error(ErrorKind::kUsage, "unit " + u.key() + " has wrong feature dimension");
  const int id = num_units();
  index_[u.key()] = id;
  keys_.push_back(u);
  units_.push_back(std::move(model));
  return id;
}

namespace {

UnitModel default_unit(int dim, int mixtures, const std::vector<double>& mean,
                       const std::vector<double>& var) {
  UnitModel unit;
  for (int i = 0; i < kStatesPerUnit; ++i)
    for (int j = 0; j <= kExit; ++j) unit.log_trans[i][j] = kLogZero;
  // loop 0.6 / forward 0.3 / skip 0.1; the last row has no skip target and
  // is renormalized.
  unit.log_trans[0][0] = std::log(0.6);
  unit.log_trans[0][1] = std::log(0.3);
  unit.log_trans[0][2] = std::log(0.1);
  unit.log_trans[1][1] = std::log(0.6);
  unit.log_trans[1][2] = std::log(0.3);
  unit.log_trans[1][kExit] = std::log(0.1);
  unit.log_trans[2][2] = std::log(0.6 / 0.9);
  unit.log_trans[2][kExit] = std::log(0.3 / 0.9);
  unit.log_pi = {0.0, kLogZero, kLogZero};

  for (int s = 0; s < kStatesPerUnit; ++s) {
    Gmm gmm(dim);
    for (int k = 0; k < mixtures; ++k) {
      std::vector<double> m = mean;
      if (mixtures > 1) {
        // deterministic symmetric offsets: -0.2, +0.2, -0.4, +0.4, ...
        const double step = 0.2 * ((k / 2) + 1) * (k % 2 == 0 ? -1.0 : 1.0);
        for (int d = 0; d < dim; ++d) m[d] += step * std::sqrt(var[d]);
      }
      gmm.add_component(1.0 / mixtures, std::move(m), var);
    }
    unit.states[s] = std::move(gmm);
  }
  return unit;
}

}  // namespace

AcousticModel flat_start_init(const PhoneSet& phones,
                              const std::vector<const FeatureMatrix*>& corpus,
                              int mixtures, double floor_scale) {
  if (corpus.empty()) throw Error(ErrorKind::kData, "flat start needs a non-empty corpus");
  if (mixtures < 1) throw Error(ErrorKind::kUsage, "mixtures must be >= 1");

  const int dim = corpus.front()->cols();
  long total_frames = 0;
  std::vector<double> sum(dim, 0.0), sumsq(dim, 0.0);
  for (const FeatureMatrix* f : corpus) {
    if (f->cols() != dim)
      throw Error(ErrorKind::kData, "inconsistent feature dimensions across corpus");
    for (int t = 0; t < f->rows(); ++t) {
      const double* row = f->row(t);
      for (int d = 0; d < dim; ++d) {
        sum[d] += row[d];
        sumsq[d] += row[d] * row[d];
      }
    }
    total_frames += f->rows();
  }
  if (total_frames == 0) throw Error(ErrorKind::kData, "corpus has no frames");

  std::vector<double> mean(dim), var(dim), floor(dim);
  for (int d = 0; d < dim; ++d) {
    mean[d] = sum[d] / total_frames;
    var[d] = sumsq[d] / total_frames - mean[d] * mean[d];
    if (var[d] < 0.0) var[d] = 0.0;  // rounding on constant data
    floor[d] = floor_scale * var[d];
    if (floor[d] <= 0.0) floor[d] = 1e-10;  // constant dimension, absolute fallback
    if (var[d] < floor[d]) var[d] = floor[d];
    if (!(var[d] > 0.0))
      throw Error(ErrorKind::kNumeric, str_cat("zero variance in dimension ", d, " after flooring"));
  }

  AcousticModel model(phones.phones(), dim, floor);
  for (const std::string& p : phones.phones())
    model.add_unit(PhoneUnit{p}, default_unit(dim, mixtures, mean, var));
  return model;
}

std::vector<PhoneUnit> expand_context(const std::vector<std::string>& phone_seq) {
  if (phone_seq.empty()) throw Error(ErrorKind::kData, "cannot expand an empty phone sequence");
  std::vector<PhoneUnit> units;
  units.reserve(phone_seq.size());
  for (size_t i = 0; i < phone_seq.size(); ++i) {
    PhoneUnit u;
    u.base = phone_seq[i];
    u.left = i == 0 ? "*" : phone_seq[i - 1];
    u.right = i + 1 == phone_seq.size() ? "*" : phone_seq[i + 1];
    units.push_back(std::move(u));
  }
  return units;
}

AcousticModel split_mixtures(const AcousticModel& model) {
  AcousticModel out(model.phones(), model.dim(), model.var_floor());
  for (int id = 0; id < model.num_units(); ++id) {
    const UnitModel& unit = model.unit(id);
    UnitModel split;
    split.log_trans = unit.log_trans;
    split.log_pi = unit.log_pi;
    for (int s = 0; s < kStatesPerUnit; ++s) {
      const Gmm& gmm = unit.states[s];
      Gmm doubled(model.dim());
      for (int k = 0; k < gmm.num_components(); ++k) {
        std::vector<double> lo = gmm.mean(k), hi = gmm.mean(k);
        for (int d = 0; d < model.dim(); ++d) {
          const double offset = 0.2 * std::sqrt(gmm.var(k)[d]);
          lo[d] -= offset;
          hi[d] += offset;
        }
        doubled.add_component(gmm.weight(k) / 2.0, std::move(lo), gmm.var(k));
        doubled.add_component(gmm.weight(k) / 2.0, std::move(hi), gmm.var(k));
      }
      split.states[s] = std::move(doubled);
    }
    out.add_unit(model.unit_key(id), std::move(split));
  }
  return out;
}

// ---------------------------------------------------------------- file io

void AcousticModel::save(const std::string& path) const {
  std::ofstream out = open_output(path);
  out << "SAWT_AM 1\n";
  out << "dim " << dim_ << "\n";
  out << "phones " << phones_.size() << "\n";
  for (const std::string& p : phones_) out << p << "\n";
  out << "var_floor";
  for (double v : var_floor_) out << ' ' << double_repr(v);
  out << "\n";
  out << "units " << units_.size() << "\n";
  for (int id = 0; id < num_units(); ++id) {
    const PhoneUnit& key = keys_[id];
    const UnitModel& unit = units_[id];
    out << "unit " << key.left << ' ' << key.base << ' ' << key.right << "\n";
    out << "pi";
    for (double lp : unit.log_pi) out << ' ' << double_repr(std::exp(lp));
    out << "\n";
    for (int i = 0; i < kStatesPerUnit; ++i) {
      out << "trans";
      for (int j = 0; j <= kExit; ++j) out << ' ' << double_repr(std::exp(unit.log_trans[i][j]));
      out << "\n";
    }
    for (int s = 0; s < kStatesPerUnit; ++s) {
      const Gmm& gmm = unit.states[s];
      out << "state " << s << " components " << gmm.num_components() << "\n";
      for (int k = 0; k < gmm.num_components(); ++k) {
        out << "weight " << double_repr(gmm.weight(k)) << "\n";
        out << "mean";
        for (double m : gmm.mean(k)) out << ' ' << double_repr(m);
        out << "\nvar";
        for (double v : gmm.var(k)) out << ' ' << double_repr(v);
        out << "\n";
      }
    }
  }
  if (!out) throw Error(ErrorKind::kIo, "short write to " + path);
}

namespace {

class LineReader {
 public:
  LineReader(const std::string& path) : path_(path), lines_(read_lines(path)) {}

  std::vector<std::string> next_any() {
    while (pos_ < lines_.size() && trim(lines_[pos_]).empty()) ++pos_;
    if (pos_ >= lines_.size())
      throw Error(ErrorKind::kData, path_ + ": unexpected end of file");
    auto tokens = split_ws(lines_[pos_]);
    ++pos_;
    return tokens;
  }

  std::vector<std::string> next(const std::string& expected_head) {
    auto tokens = next_any();
    if (tokens.empty() || tokens[0] != expected_head)
      throw Error(ErrorKind::kData,
                  str_cat(path_, ":", pos_, ": expected \"", expected_head, "\""));
    return tokens;
  }

 private:
  std::string path_;
  std::vector<std::string> lines_;
  size_t pos_ = 0;
};

double log_of(const std::string& tok, const std::string& what) {
  const double v = parse_double(tok, what);
  if (v < 0.0) throw Error(ErrorKind::kData, what + " must be a probability");
  return v > 0.0 ? std::log(v) : kLogZero;
}

}  // namespace

AcousticModel AcousticModel::load(const std::string& path) {
  LineReader reader(path);
  auto header = reader.next("SAWT_AM");
  if (header.size() != 2 || header[1] != "1")
    throw Error(ErrorKind::kData, path + ": unsupported model version");

  const int dim = static_cast<int>(parse_int(reader.next("dim").at(1), "dim"));
  const int num_phones = static_cast<int>(parse_int(reader.next("phones").at(1), "phone count"));
  std::vector<std::string> phones;
  for (int i = 0; i < num_phones; ++i) {
    // phone lines have no keyword; reuse next() by peeking manually
    auto tokens = reader.next_any();
    if (tokens.size() != 1)
      throw Error(ErrorKind::kData, path + ": malformed phone line");
    phones.push_back(tokens[0]);
  }

  auto floor_tokens = reader.next("var_floor");
  if (static_cast<int>(floor_tokens.size()) != dim + 1)
    throw Error(ErrorKind::kData, path + ": var_floor dimension mismatch");
  std::vector<double> floor(dim);
  for (int d = 0; d < dim; ++d) floor[d] = parse_double(floor_tokens[d + 1], "var_floor");

  AcousticModel model(std::move(phones), dim, std::move(floor));

  const int num_units = static_cast<int>(parse_int(reader.next("units").at(1), "unit count"));
  for (int u = 0; u < num_units; ++u) {
    auto unit_tokens = reader.next("unit");
    if (unit_tokens.size() != 4) throw Error(ErrorKind::kData, path + ": malformed unit line");
    PhoneUnit key{unit_tokens[2], unit_tokens[1], unit_tokens[3]};

    UnitModel unit;
    auto pi_tokens = reader.next("pi");
    if (pi_tokens.size() != kStatesPerUnit + 1)
      throw Error(ErrorKind::kData, path + ": malformed pi line");
    for (int i = 0; i < kStatesPerUnit; ++i) unit.log_pi[i] = log_of(pi_tokens[i + 1], "pi");
    for (int i = 0; i < kStatesPerUnit; ++i) {
      auto trans_tokens = reader.next("trans");
      if (trans_tokens.size() != kExit + 2)
        throw Error(ErrorKind::kData, path + ": malformed trans line");
      for (int j = 0; j <= kExit; ++j)
        unit.log_trans[i][j] = log_of(trans_tokens[j + 1], "transition");
    }
    for (int s = 0; s < kStatesPerUnit; ++s) {
      auto state_tokens = reader.next("state");
      if (state_tokens.size() != 4 || state_tokens[2] != "components")
        throw Error(ErrorKind::kData, path + ": malformed state line");
      const int comps = static_cast<int>(parse_int(state_tokens[3], "component count"));
      Gmm gmm(dim);
      for (int k = 0; k < comps; ++k) {
        const double weight = parse_double(reader.next("weight").at(1), "weight");
        auto mean_tokens = reader.next("mean");
        auto var_tokens = reader.next("var");
        if (static_cast<int>(mean_tokens.size()) != dim + 1 ||
            static_cast<int>(var_tokens.size()) != dim + 1)
          throw Error(ErrorKind::kData, path + ": mean/var dimension mismatch");
        std::vector<double> mean(dim), var(dim);
        for (int d = 0; d < dim; ++d) {
          mean[d] = parse_double(mean_tokens[d + 1], "mean");
          var[d] = parse_double(var_tokens[d + 1], "var");
        }
        gmm.add_component(weight, std::move(mean), std::move(var));
      }
      unit.states[s] = std::move(gmm);
    }
    model.add_unit(key, std::move(unit));
  }
  for (const std::string& p : model.phones())
    if (model.find_unit(PhoneUnit{p}) < 0)
      throw Error(ErrorKind::kData, path + ": no monophone unit for phone " + p);
  return model;
}

}  // namespace sawt
