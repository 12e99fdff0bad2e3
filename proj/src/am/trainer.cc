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

#include "am/trainer.h"

#include <cmath>
#include <iostream>

#include "common/error.h"
#include "common/logmath.h"
#include "common/parallel.h"

namespace sawt {

void GmmStats::ensure(int components, int dim) {
  if (!occupancy.empty()) return;
  occupancy.assign(components, 0.0);
  first.assign(components, std::vector<double>(dim, 0.0));
  second.assign(components, std::vector<double>(dim, 0.0));
}

void GmmStats::merge(const GmmStats& other) {
  if (other.occupancy.empty()) return;
  if (occupancy.empty()) {
    *this = other;
    return;
  }
  if (occupancy.size() != other.occupancy.size())
    throw Error(ErrorKind::kUsage, "merging accumulators with different mixture sizes");
  for (size_t k = 0; k < occupancy.size(); ++k) {
    occupancy[k] += other.occupancy[k];
    for (size_t d = 0; d < first[k].size(); ++d) {
      first[k][d] += other.first[k][d];
      second[k][d] += other.second[k][d];
    }
  }
}

void UnitStats::merge(const UnitStats& other) {
  for (int i = 0; i < kStatesPerUnit; ++i)
    for (int j = 0; j <= kExit; ++j) trans[i][j] += other.trans[i][j];
  for (int s = 0; s < kStatesPerUnit; ++s) states[s].merge(other.states[s]);
}

void Accumulators::merge(const Accumulators& other) {
  for (const auto& [id, stats] : other.units) units[id].merge(stats);
  total_log_likelihood += other.total_log_likelihood;
  num_frames += other.num_frames;
  num_utterances += other.num_utterances;
}

double forward_backward(const CompositeHmm& hmm, const FeatureMatrix& features,
                        Accumulators* acc, FeatureMatrix* gamma_out) {
  const int T = features.rows();
  const int N = hmm.num_states();
  if (T < 1) throw Error(ErrorKind::kData, "forward_backward on empty features");
  const int dim = features.cols();

  // Emissions once; both passes reuse them.
  FeatureMatrix logb(T, N);
  for (int s = 0; s < N; ++s) {
    const Gmm* gmm = hmm.states()[s].gmm;
    for (int t = 0; t < T; ++t) logb.at(t, s) = gmm->log_density(features.row(t), dim);
  }

  const auto& arcs = hmm.arcs();
  const auto& into = hmm.arcs_into();
  const auto& from = hmm.arcs_from();

  FeatureMatrix alpha(T, N), beta(T, N);
  for (int s = 0; s < N; ++s) alpha.at(0, s) = kLogZero;
  for (const auto& e : hmm.entries())
    alpha.at(0, e.state) = log_add(alpha.at(0, e.state), e.logp);
  for (int s = 0; s < N; ++s)
    if (alpha.at(0, s) != kLogZero) alpha.at(0, s) += logb.at(0, s);

  for (int t = 1; t < T; ++t) {
    for (int s = 0; s < N; ++s) {
      double acc_log = kLogZero;
      for (int ai : into[s]) {
        const auto& a = arcs[ai];
        const double prev = alpha.at(t - 1, a.from);
        if (prev != kLogZero) acc_log = log_add(acc_log, prev + a.logp);
      }
      alpha.at(t, s) = acc_log == kLogZero ? kLogZero : acc_log + logb.at(t, s);
    }
  }

  double loglik = kLogZero;
  for (const auto& f : hmm.finals()) {
    const double v = alpha.at(T - 1, f.state);
    if (v != kLogZero) loglik = log_add(loglik, v + f.logp);
  }
  if (loglik == kLogZero)
    throw Error(ErrorKind::kNumeric,
                str_cat("no valid path through ", hmm.num_units(), " units in ", T, " frames"));

  for (int s = 0; s < N; ++s) beta.at(T - 1, s) = kLogZero;
  for (const auto& f : hmm.finals())
    beta.at(T - 1, f.state) = log_add(beta.at(T - 1, f.state), f.logp);
  for (int t = T - 2; t >= 0; --t) {
    for (int s = 0; s < N; ++s) {
      double acc_log = kLogZero;
      for (int ai : from[s]) {
        const auto& a = arcs[ai];
        const double next = beta.at(t + 1, a.to);
        if (next != kLogZero) acc_log = log_add(acc_log, a.logp + logb.at(t + 1, a.to) + next);
      }
      beta.at(t, s) = acc_log;
    }
  }

  if (gamma_out) {
    *gamma_out = FeatureMatrix(T, N);
    for (int t = 0; t < T; ++t)
      for (int s = 0; s < N; ++s) {
        const double lg = alpha.at(t, s) + beta.at(t, s) - loglik;
        gamma_out->at(t, s) = lg == kLogZero || std::isnan(lg) ? 0.0 : std::exp(lg);
      }
  }

  if (acc) {
    // State/mixture occupancies.
    for (int s = 0; s < N; ++s) {
      const auto& st = hmm.states()[s];
      const Gmm* gmm = st.gmm;
      GmmStats* stats = nullptr;
      for (int t = 0; t < T; ++t) {
        const double la = alpha.at(t, s);
        if (la == kLogZero) continue;
        const double lb = beta.at(t, s);
        if (lb == kLogZero) continue;
        const double gamma = std::exp(la + lb - loglik);
        if (gamma == 0.0) continue;
        if (!stats) {
          stats = &acc->units[st.unit_id].states[st.phone_state];
          stats->ensure(gmm->num_components(), dim);
        }
        const double* x = features.row(t);
        const double state_logd = logb.at(t, s);
        for (int k = 0; k < gmm->num_components(); ++k) {
          const double post = gamma * std::exp(gmm->component_log_density(k, x) - state_logd);
          if (post == 0.0) continue;
          stats->occupancy[k] += post;
          std::vector<double>& f1 = stats->first[k];
          std::vector<double>& f2 = stats->second[k];
          for (int d = 0; d < dim; ++d) {
            f1[d] += post * x[d];
            f2[d] += post * x[d] * x[d];
          }
        }
      }
    }
    // Transition counts.
    for (const auto& a : arcs) {
      double total = 0.0;
      for (int t = 0; t + 1 < T; ++t) {
        const double la = alpha.at(t, a.from);
        if (la == kLogZero) continue;
        const double lb = beta.at(t + 1, a.to);
        if (lb == kLogZero) continue;
        total += std::exp(la + a.logp + logb.at(t + 1, a.to) + lb - loglik);
      }
      if (total != 0.0) acc->units[a.unit_id].trans[a.row][a.col] += total;
    }
    for (const auto& f : hmm.finals()) {
      const double la = alpha.at(T - 1, f.state);
      if (la == kLogZero) continue;
      acc->units[f.unit_id].trans[f.row][kExit] += std::exp(la + f.logp - loglik);
    }
    acc->total_log_likelihood += loglik;
    acc->num_frames += T;
    acc->num_utterances += 1;
  }
  return loglik;
}

AcousticModel baum_welch_update(const Accumulators& acc, const AcousticModel& model,
                                const UpdateOptions& options) {
  AcousticModel out(model.phones(), model.dim(), model.var_floor());
  const std::vector<double>& floor = model.var_floor();
  const int dim = model.dim();

  for (int id = 0; id < model.num_units(); ++id) {
    UnitModel unit = model.unit(id);  // start from the old parameters
    auto it = acc.units.find(id);
    if (it != acc.units.end()) {
      const UnitStats& stats = it->second;

      for (int i = 0; i < kStatesPerUnit; ++i) {
        double row_total = 0.0;
        for (int j = 0; j <= kExit; ++j) row_total += stats.trans[i][j];
        if (row_total <= 0.0) continue;  // row unseen, keep old
        for (int j = 0; j <= kExit; ++j) {
          if (!UnitModel::transition_allowed(i, j)) continue;
          const double p = stats.trans[i][j] / row_total;
          unit.log_trans[i][j] = p > 0.0 ? std::log(p) : kLogZero;
        }
      }

      for (int s = 0; s < kStatesPerUnit; ++s) {
        const GmmStats& gs = stats.states[s];
        if (gs.occupancy.empty()) continue;
        double total_occ = 0.0;
        for (double o : gs.occupancy) total_occ += o;
        if (total_occ < options.min_mixture_occupancy) continue;  // state unseen enough

        const Gmm& old = unit.states[s];
        Gmm updated(dim);
        for (int k = 0; k < old.num_components(); ++k) {
          const double occ = gs.occupancy[k];
          std::vector<double> mean = old.mean(k);
          std::vector<double> var = old.var(k);
          if (occ >= options.min_mixture_occupancy) {
            for (int d = 0; d < dim; ++d) {
              mean[d] = gs.first[k][d] / occ;
              var[d] = gs.second[k][d] / occ - mean[d] * mean[d];
              if (var[d] < floor[d]) var[d] = floor[d];
            }
          }
          updated.add_component(occ / total_occ, std::move(mean), std::move(var));
        }
        unit.states[s] = std::move(updated);
      }
    }
    out.add_unit(model.unit_key(id), std::move(unit));
  }
  return out;
}

std::vector<PhoneUnit> make_phone_units(const std::vector<std::string>& phones, bool triphones) {
  if (!triphones) {
    std::vector<PhoneUnit> units;
    units.reserve(phones.size());
    for (const std::string& p : phones) units.push_back(PhoneUnit{p});
    return units;
  }
  std::vector<PhoneUnit> units = expand_context(phones);
  for (PhoneUnit& u : units)
    if (u.base == PhoneSet::kSilence) u = u.monophone();
  return units;
}

std::pair<AcousticModel, TrainReport> train(const std::vector<TrainingUtterance>& corpus,
                                            AcousticModel model, const TrainOptions& options) {
  if (corpus.empty()) throw Error(ErrorKind::kData, "training corpus is empty");
  TrainReport report;

  for (int iter = 0; iter < options.iterations; ++iter) {
    const int n = static_cast<int>(corpus.size());
    std::vector<Accumulators> slots(n);
    std::vector<char> skipped(n, 0);

    parallel_for(n, options.threads, [&](int i) {
      const TrainingUtterance& utt = corpus[i];
      std::vector<std::string> phones =
          options.add_boundary_silence ? with_boundary_silence(utt.phones) : utt.phones;
      const CompositeHmm hmm =
          compose_utterance_hmm(model, make_phone_units(phones, options.use_triphones));
      try {
        forward_backward(hmm, *utt.features, &slots[i]);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kNumeric) throw;
        skipped[i] = 1;
      }
    });

    Accumulators acc;
    long num_skipped = 0;
    for (int i = 0; i < n; ++i) {
      if (skipped[i]) {
        ++num_skipped;
        std::cerr << "warning: utterance " << i << " has no valid path, skipped\n";
        continue;
      }
      acc.merge(slots[i]);
    }
    if (acc.num_utterances == 0)
      throw Error(ErrorKind::kNumeric, "no utterance admitted a valid path");

    report.iteration_log_likelihood.push_back(acc.total_log_likelihood);
    report.iteration_skipped.push_back(num_skipped);
    model = baum_welch_update(acc, model, UpdateOptions{options.min_mixture_occupancy});
  }
  return {std::move(model), std::move(report)};
}

int add_seen_triphones(AcousticModel* model, const std::vector<TrainingUtterance>& corpus,
                       bool add_boundary_silence) {
  int added = 0;
  for (const TrainingUtterance& utt : corpus) {
    std::vector<std::string> phones =
        add_boundary_silence ? with_boundary_silence(utt.phones) : utt.phones;
    for (const PhoneUnit& u : make_phone_units(phones, /*triphones=*/true)) {
      if (u.is_monophone() || model->find_unit(u) >= 0) continue;
      const int mono = model->find_unit(u.monophone());
      if (mono < 0) throw Error(ErrorKind::kData, "no monophone to clone for " + u.key());
      model->add_unit(u, model->unit(mono));
      ++added;
    }
  }
  return added;
}

}  // namespace sawt
