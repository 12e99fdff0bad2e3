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

#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "am/acoustic_model.h"
#include "am/composite_hmm.h"
#include "am/gmm.h"
#include "am/trainer.h"
#include "common/error.h"
#include "common/logmath.h"
#include "oracles/path_enum.h"
#include "test_util.h"
#include "toy_graph.h"

using namespace sawt;
using sawt_test::TempDir;

namespace {

void check_rows_normalized(const AcousticModel& model) {
  for (int id = 0; id < model.num_units(); ++id) {
    const UnitModel& unit = model.unit(id);
    double pi = 0.0;
    for (double lp : unit.log_pi) pi += std::exp(lp);
    CHECK(std::fabs(pi - 1.0) < 1e-10);
    for (int i = 0; i < kStatesPerUnit; ++i) {
      double row = 0.0;
      for (int j = 0; j <= kExit; ++j) {
        row += std::exp(unit.log_trans[i][j]);
        if (!UnitModel::transition_allowed(i, j)) CHECK(unit.log_trans[i][j] == kLogZero);
      }
      CHECK(std::fabs(row - 1.0) < 1e-10);
    }
    for (int s = 0; s < kStatesPerUnit; ++s) {
      const Gmm& gmm = unit.states[s];
      double w = 0.0;
      for (int k = 0; k < gmm.num_components(); ++k) w += gmm.weight(k);
      CHECK(std::fabs(w - 1.0) < 1e-10);
    }
  }
}

FeatureMatrix gaussian_features(int T, int dim, double mean, double stddev, uint32_t seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> noise(mean, stddev);
  FeatureMatrix f(T, dim);
  for (int t = 0; t < T; ++t)
    for (int d = 0; d < dim; ++d) f.at(t, d) = noise(rng);
  return f;
}

using sawt_test::ToyGraph;
using sawt_test::random_toy_graph;

AcousticModel tiny_model(const std::vector<std::string>& phones,
                         const std::vector<const FeatureMatrix*>& corpus, int mixtures = 1) {
  return flat_start_init(PhoneSet::from_phones(phones), corpus, mixtures);
}

}  // namespace

TEST_CASE("gmm log density") {
  // single component evaluated at its mean
  {
    Gmm gmm(3);
    gmm.add_component(1.0, {1.0, -2.0, 0.5}, {0.5, 2.0, 1.0});
    const double expected =
        -0.5 * (std::log(2 * M_PI * 0.5) + std::log(2 * M_PI * 2.0) + std::log(2 * M_PI * 1.0));
    const double frame[3] = {1.0, -2.0, 0.5};
    CHECK(gmm.log_density(frame, 3) == doctest::Approx(expected).epsilon(1e-12));
  }
  // two identical components collapse to one
  {
    Gmm one(2), two(2);
    one.add_component(1.0, {0.3, 0.4}, {1.0, 1.5});
    two.add_component(0.3, {0.3, 0.4}, {1.0, 1.5});
    two.add_component(0.7, {0.3, 0.4}, {1.0, 1.5});
    const double frame[2] = {1.0, -1.0};
    CHECK(one.log_density(frame, 2) == doctest::Approx(two.log_density(frame, 2)).epsilon(1e-12));
  }
  // linear-domain oracle for an arbitrary 2-component mixture
  {
    Gmm gmm(2);
    gmm.add_component(0.4, {0.0, 1.0}, {0.7, 0.3});
    gmm.add_component(0.6, {-1.0, 2.0}, {1.2, 0.9});
    const double frame[2] = {0.5, 0.25};
    double linear = 0.0;
    const std::vector<std::vector<double>> means = {{0.0, 1.0}, {-1.0, 2.0}};
    const std::vector<std::vector<double>> vars = {{0.7, 0.3}, {1.2, 0.9}};
    const std::vector<double> weights = {0.4, 0.6};
    for (int k = 0; k < 2; ++k) {
      double density = 1.0;
      for (int d = 0; d < 2; ++d) {
        const double diff = frame[d] - means[k][d];
        density *= std::exp(-0.5 * diff * diff / vars[k][d]) / std::sqrt(2 * M_PI * vars[k][d]);
      }
      linear += weights[k] * density;
    }
    CHECK(gmm.log_density(frame, 2) ==
          doctest::Approx(std::log(linear)).epsilon(1e-10));
  }
  // dimension mismatch
  {
    Gmm gmm(2);
    gmm.add_component(1.0, {0.0, 0.0}, {1.0, 1.0});
    const double frame[3] = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(gmm.log_density(frame, 3), Error);
  }
}

TEST_CASE("flat start") {
  // all states share the utterance statistics
  {
    std::mt19937 rng(42);
    std::normal_distribution<double> noise(2.0, 1.5);
    FeatureMatrix f(100, 2);
    for (int t = 0; t < 100; ++t)
      for (int d = 0; d < 2; ++d) f.at(t, d) = noise(rng);
    const AcousticModel model = tiny_model({"A", "B"}, {&f});
    CHECK(model.num_units() == 3);  // A, B, SIL
    const Gmm& first = model.unit(0).states[0];
    for (int id = 0; id < model.num_units(); ++id)
      for (int s = 0; s < kStatesPerUnit; ++s) {
        CHECK(model.unit(id).states[s].mean(0) == first.mean(0));
        CHECK(model.unit(id).states[s].var(0) == first.var(0));
      }
    check_rows_normalized(model);
  }
  // constant corpus floors every variance
  {
    FeatureMatrix f(20, 2);
    for (int t = 0; t < 20; ++t)
      for (int d = 0; d < 2; ++d) f.at(t, d) = 4.0;
    const AcousticModel model = tiny_model({"A"}, {&f});
    for (int s = 0; s < kStatesPerUnit; ++s)
      for (int d = 0; d < 2; ++d)
        CHECK(model.unit(0).states[s].var(0)[d] == model.var_floor()[d]);
  }
  CHECK_THROWS_AS(tiny_model({"A"}, {}), Error);
}

TEST_CASE("expand context") {
  CHECK(expand_context({"A"}) == std::vector<PhoneUnit>{PhoneUnit{"A", "*", "*"}});
  const auto units = expand_context({"M", "U", "S"});
  REQUIRE(units.size() == 3);
  CHECK(units[0] == PhoneUnit{"M", "*", "U"});
  CHECK(units[1] == PhoneUnit{"U", "M", "S"});
  CHECK(units[2] == PhoneUnit{"S", "U", "*"});
  // projection recovers the original sequence
  std::vector<std::string> bases;
  for (const PhoneUnit& u : units) bases.push_back(u.base);
  CHECK(bases == std::vector<std::string>{"M", "U", "S"});
  CHECK_THROWS_AS(expand_context({}), Error);
}

TEST_CASE("compose utterance hmm") {
  const FeatureMatrix f = gaussian_features(30, 2, 0.0, 1.0, 1);
  const AcousticModel model = tiny_model({"M", "U", "S", "L", "I"}, {&f});

  CHECK(compose_utterance_hmm(model, make_phone_units({"SIL"}, false)).num_states() == 3);

  const auto muslim = with_boundary_silence({"M", "U", "S", "L", "I", "M"});
  CHECK(muslim.size() == 8);
  CHECK(compose_utterance_hmm(model, make_phone_units(muslim, false)).num_states() == 24);

  CHECK_THROWS_WITH_AS(compose_utterance_hmm(model, make_phone_units({"X"}, false)),
                       doctest::Contains("X"), Error);
}

TEST_CASE("forward matches exhaustive path enumeration") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const ToyGraph toy = random_toy_graph(rng, 4);
    const int dim = toy.hmm.states()[0].gmm->dim();
    const int T = 2 + static_cast<int>(rng() % 7);
    const FeatureMatrix f = gaussian_features(T, dim, 0.0, 1.0, 100 + trial);

    const auto logb = sawt_test::emission_matrix(toy.hmm, f);
    const auto oracle = sawt_test::enumerate_all_paths(toy.hmm, logb);
    if (oracle.num_paths == 0) {
      CHECK_THROWS_AS(forward_backward(toy.hmm, f, nullptr), Error);
      continue;
    }
    const double loglik = forward_backward(toy.hmm, f, nullptr);
    CHECK(std::fabs(loglik - oracle.forward_log) <= 1e-10 * std::fabs(oracle.forward_log));
  }
}

TEST_CASE("single-state closed form") {
  // one state, self-loop a, exit 1-a: log L = sum log b + (T-1) log a + log(1-a)
  Gmm gmm(1);
  gmm.add_component(1.0, {0.5}, {1.2});
  CompositeHmm hmm;
  CompositeHmm::State state;
  state.gmm = &gmm;
  state.unit_seq = 0;
  state.unit_id = 0;
  state.label = "A";
  hmm.add_state(std::move(state));
  const double a = 0.8;
  hmm.add_arc({0, 0, std::log(a), 0, 0, 0});
  hmm.add_final(0, std::log(1 - a), 0, 0);
  hmm.add_entry(0, 0.0);

  const FeatureMatrix f = gaussian_features(6, 1, 0.0, 1.0, 3);
  double expected = 0.0;
  for (int t = 0; t < 6; ++t) expected += gmm.log_density(f.row(t), 1);
  expected += 5 * std::log(a) + std::log(1 - a);
  CHECK(forward_backward(hmm, f, nullptr) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("state posteriors sum to one per frame") {
  const FeatureMatrix f = gaussian_features(25, 2, 0.0, 1.0, 11);
  const AcousticModel model = tiny_model({"A", "B"}, {&f});
  const CompositeHmm hmm =
      compose_utterance_hmm(model, make_phone_units({"A", "B"}, false));
  FeatureMatrix gamma;
  forward_backward(hmm, f, nullptr, &gamma);
  for (int t = 0; t < gamma.rows(); ++t) {
    double total = 0.0;
    for (int s = 0; s < gamma.cols(); ++s) total += gamma.at(t, s);
    CHECK(std::fabs(total - 1.0) < 1e-9);
  }
}

TEST_CASE("no valid path raises") {
  const FeatureMatrix f = gaussian_features(3, 1, 0.0, 1.0, 5);
  std::vector<const FeatureMatrix*> corpus = {&f};
  const AcousticModel model = flat_start_init(PhoneSet::from_phones({"A", "B"}), corpus, 1);
  // 3 units need at least 6 frames (2 per unit)
  const CompositeHmm hmm =
      compose_utterance_hmm(model, make_phone_units({"A", "B", "A"}, false));
  CHECK_THROWS_AS(forward_backward(hmm, f, nullptr), Error);
}

TEST_CASE("accumulator merge is order independent") {
  const FeatureMatrix f1 = gaussian_features(20, 2, 0.0, 1.0, 21);
  const FeatureMatrix f2 = gaussian_features(15, 2, 1.0, 1.0, 22);
  const FeatureMatrix f3 = gaussian_features(18, 2, -1.0, 1.0, 23);
  const AcousticModel model = tiny_model({"A", "B"}, {&f1, &f2, &f3});

  auto accumulate = [&](const FeatureMatrix& f) {
    Accumulators acc;
    forward_backward(compose_utterance_hmm(model, make_phone_units({"A", "B"}, false)), f, &acc);
    return acc;
  };
  const Accumulators a = accumulate(f1);
  const Accumulators b = accumulate(f2);
  const Accumulators c = accumulate(f3);

  Accumulators left = a;
  {
    Accumulators bc = b;
    bc.merge(c);
    left.merge(bc);
  }
  Accumulators right = a;
  right.merge(b);
  right.merge(c);

  const auto close = [](double x, double y) {
    return std::fabs(x - y) <= 1e-9 * std::max({1.0, std::fabs(x), std::fabs(y)});
  };
  CHECK(close(left.total_log_likelihood, right.total_log_likelihood));
  REQUIRE(left.units.size() == right.units.size());
  for (const auto& [id, lstats] : left.units) {
    const UnitStats& rstats = right.units.at(id);
    for (int i = 0; i < kStatesPerUnit; ++i)
      for (int j = 0; j <= kExit; ++j) CHECK(close(lstats.trans[i][j], rstats.trans[i][j]));
    for (int s = 0; s < kStatesPerUnit; ++s) {
      REQUIRE(lstats.states[s].occupancy.size() == rstats.states[s].occupancy.size());
      for (size_t k = 0; k < lstats.states[s].occupancy.size(); ++k) {
        CHECK(close(lstats.states[s].occupancy[k], rstats.states[s].occupancy[k]));
        for (size_t d = 0; d < lstats.states[s].first[k].size(); ++d) {
          CHECK(close(lstats.states[s].first[k][d], rstats.states[s].first[k][d]));
          CHECK(close(lstats.states[s].second[k][d], rstats.states[s].second[k][d]));
        }
      }
    }
  }
}

TEST_CASE("baum-welch update guards") {
  const FeatureMatrix f = gaussian_features(40, 2, 0.5, 1.0, 31);
  const AcousticModel model = tiny_model({"A", "B"}, {&f});

  Accumulators acc;
  forward_backward(compose_utterance_hmm(model, make_phone_units({"A"}, false)), f, &acc);
  const AcousticModel updated = baum_welch_update(acc, model);

  check_rows_normalized(updated);
  // unit B and SIL were never seen: parameters unchanged
  const int b_id = model.find_unit(PhoneUnit{"B"});
  for (int s = 0; s < kStatesPerUnit; ++s) {
    CHECK(updated.unit(b_id).states[s].mean(0) == model.unit(b_id).states[s].mean(0));
    CHECK(updated.unit(b_id).states[s].var(0) == model.unit(b_id).states[s].var(0));
  }
  // unit A was seen: means moved toward the data
  const int a_id = model.find_unit(PhoneUnit{"A"});
  bool moved = false;
  for (int s = 0; s < kStatesPerUnit; ++s)
    if (updated.unit(a_id).states[s].mean(0) != model.unit(a_id).states[s].mean(0)) moved = true;
  CHECK(moved);
  // structural zeros stayed zero
  for (int id = 0; id < updated.num_units(); ++id)
    for (int i = 0; i < kStatesPerUnit; ++i)
      for (int j = 0; j <= kExit; ++j)
        if (!UnitModel::transition_allowed(i, j))
          CHECK(updated.unit(id).log_trans[i][j] == kLogZero);
}

TEST_CASE("training log-likelihood is non-decreasing") {
  std::vector<FeatureMatrix> features;
  std::vector<TrainingUtterance> corpus;
  std::vector<const FeatureMatrix*> ptrs;
  for (int u = 0; u < 6; ++u)
    features.push_back(gaussian_features(25 + 3 * u, 2, u % 2 == 0 ? -1.0 : 1.0, 0.8, 200 + u));
  for (int u = 0; u < 6; ++u) {
    TrainingUtterance utt;
    utt.features = &features[u];
    utt.phones = u % 2 == 0 ? std::vector<std::string>{"A"} : std::vector<std::string>{"B"};
    corpus.push_back(utt);
    ptrs.push_back(&features[u]);
  }
  AcousticModel model = flat_start_init(PhoneSet::from_phones({"A", "B"}), ptrs, 1);

  TrainOptions options;
  options.iterations = 8;
  auto [trained, report] = train(corpus, std::move(model), options);
  REQUIRE(report.iteration_log_likelihood.size() == 8);
  for (size_t i = 1; i < report.iteration_log_likelihood.size(); ++i)
    CHECK(report.iteration_log_likelihood[i] >=
          report.iteration_log_likelihood[i - 1] - 1e-8);
  check_rows_normalized(trained);

  // consistency: trained state means drift toward the generating values
  // (-1 for phone A, +1 for phone B), closer than the flat-start mean 0
  const int a_id = trained.find_unit(PhoneUnit{"A"});
  const int b_id = trained.find_unit(PhoneUnit{"B"});
  double a_mean = 0.0, b_mean = 0.0;
  for (int s = 0; s < kStatesPerUnit; ++s) {
    a_mean += trained.unit(a_id).states[s].mean(0)[0] / kStatesPerUnit;
    b_mean += trained.unit(b_id).states[s].mean(0)[0] / kStatesPerUnit;
  }
  CHECK(std::fabs(a_mean - (-1.0)) < 0.5);
  CHECK(std::fabs(b_mean - 1.0) < 0.5);
}

TEST_CASE("zero iterations return the model unchanged") {
  const FeatureMatrix f = gaussian_features(30, 1, 0.0, 1.0, 77);
  std::vector<const FeatureMatrix*> ptrs = {&f};
  AcousticModel model = flat_start_init(PhoneSet::from_phones({"A"}), ptrs, 1);
  const double mean_before = model.unit(0).states[0].mean(0)[0];

  TrainingUtterance utt;
  utt.features = &f;
  utt.phones = {"A"};
  TrainOptions options;
  options.iterations = 0;
  auto [trained, report] = train({utt}, std::move(model), options);
  CHECK(report.iteration_log_likelihood.empty());
  CHECK(trained.unit(0).states[0].mean(0)[0] == mean_before);
}

TEST_CASE("single-phone training recovers segment statistics") {
  // three well-separated segments; EM should settle near the forced split
  std::mt19937 rng(55);
  std::normal_distribution<double> noise(0.0, 0.3);
  FeatureMatrix f(30, 1);
  const double segment_means[3] = {-5.0, 0.0, 5.0};
  for (int t = 0; t < 30; ++t) f.at(t, 0) = segment_means[t / 10] + noise(rng);

  std::vector<const FeatureMatrix*> ptrs = {&f};
  AcousticModel model = flat_start_init(PhoneSet::from_phones({"A"}), ptrs, 1);
  TrainingUtterance utt;
  utt.features = &f;
  utt.phones = {"A"};
  TrainOptions options;
  options.iterations = 30;
  options.add_boundary_silence = false;
  auto [trained, report] = train({utt}, std::move(model), options);

  // direct segmental estimate of each third
  double oracle[3] = {0, 0, 0};
  for (int t = 0; t < 30; ++t) oracle[t / 10] += f.at(t, 0) / 10.0;
  const int id = trained.find_unit(PhoneUnit{"A"});
  for (int s = 0; s < kStatesPerUnit; ++s)
    CHECK(std::fabs(trained.unit(id).states[s].mean(0)[0] - oracle[s]) < 0.5);
}

TEST_CASE("skipped utterances are counted") {
  const FeatureMatrix good = gaussian_features(30, 1, 0.0, 1.0, 91);
  const FeatureMatrix tiny = gaussian_features(2, 1, 0.0, 1.0, 92);
  std::vector<const FeatureMatrix*> ptrs = {&good};
  AcousticModel model = flat_start_init(PhoneSet::from_phones({"A", "B"}), ptrs, 1);

  TrainingUtterance ok;
  ok.features = &good;
  ok.phones = {"A", "B"};
  TrainingUtterance short_one;
  short_one.features = &tiny;  // 2 frames cannot cover SIL A B SIL
  short_one.phones = {"A", "B"};
  TrainOptions options;
  options.iterations = 1;
  auto [trained, report] = train({ok, short_one}, std::move(model), options);
  CHECK(report.iteration_skipped[0] == 1);
}

TEST_CASE("split mixtures") {
  const FeatureMatrix f = gaussian_features(50, 2, 0.0, 1.0, 61);
  const AcousticModel model = tiny_model({"A"}, {&f});
  const AcousticModel doubled = split_mixtures(model);

  const Gmm& before = model.unit(0).states[1];
  const Gmm& after = doubled.unit(0).states[1];
  CHECK(before.num_components() == 1);
  CHECK(after.num_components() == 2);
  CHECK(after.weight(0) == 0.5);
  CHECK(after.weight(1) == 0.5);
  check_rows_normalized(doubled);

  // density at the original mean stays within a factor of 2
  const double at_mean_before = before.log_density(before.mean(0).data(), 2);
  const double at_mean_after = after.log_density(before.mean(0).data(), 2);
  CHECK(std::fabs(at_mean_before - at_mean_after) <= std::log(2.0));
}

TEST_CASE("triphone cloning and backoff") {
  const FeatureMatrix f = gaussian_features(60, 1, 0.0, 1.0, 71);
  std::vector<const FeatureMatrix*> ptrs = {&f};
  AcousticModel model = flat_start_init(PhoneSet::from_phones({"A", "B"}), ptrs, 1);
  // unseen context falls back to the monophone
  CHECK(model.resolve_unit(PhoneUnit{"A", "B", "B"}) == model.find_unit(PhoneUnit{"A"}));

  TrainingUtterance utt;
  utt.features = &f;
  utt.phones = {"A", "B"};
  const int added = add_seen_triphones(&model, {utt}, /*add_boundary_silence=*/true);
  CHECK(added > 0);
  // now the seen context resolves exactly
  const int exact = model.find_unit(PhoneUnit{"A", "SIL", "B"});
  CHECK(exact >= 0);
  CHECK(model.resolve_unit(PhoneUnit{"A", "SIL", "B"}) == exact);
  // SIL stays context independent
  CHECK(model.find_unit(PhoneUnit{"SIL", "*", "A"}) == -1);

  // a triphone round of training runs
  TrainOptions options;
  options.iterations = 1;
  options.use_triphones = true;
  auto [trained, report] = train({utt}, std::move(model), options);
  CHECK(report.iteration_skipped[0] == 0);
}

TEST_CASE("model file round trip") {
  TempDir tmp("am");
  const FeatureMatrix f = gaussian_features(40, 3, 0.3, 1.1, 81);
  std::vector<const FeatureMatrix*> ptrs = {&f};
  AcousticModel model = flat_start_init(PhoneSet::from_phones({"A", "B"}), ptrs, 2);

  TrainingUtterance utt;
  utt.features = &f;
  utt.phones = {"A", "B"};
  TrainOptions options;
  options.iterations = 2;
  auto [trained, report] = train({utt}, std::move(model), options);

  trained.save(tmp.file("am.txt"));
  const AcousticModel back = AcousticModel::load(tmp.file("am.txt"));

  CHECK(back.dim() == trained.dim());
  CHECK(back.num_units() == trained.num_units());
  CHECK(back.phones() == trained.phones());
  for (int id = 0; id < trained.num_units(); ++id) {
    CHECK(back.unit_key(id).key() == trained.unit_key(id).key());
    for (int i = 0; i < kStatesPerUnit; ++i)
      for (int j = 0; j <= kExit; ++j) {
        const double a = trained.unit(id).log_trans[i][j];
        const double b = back.unit(id).log_trans[i][j];
        if (a == kLogZero)
          CHECK(b == kLogZero);
        else
          CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a)));
      }
    for (int s = 0; s < kStatesPerUnit; ++s) {
      const Gmm& x = trained.unit(id).states[s];
      const Gmm& y = back.unit(id).states[s];
      REQUIRE(x.num_components() == y.num_components());
      for (int k = 0; k < x.num_components(); ++k) {
        CHECK(x.weight(k) == y.weight(k));  // %.17g round-trips doubles exactly
        CHECK(x.mean(k) == y.mean(k));
        CHECK(x.var(k) == y.var(k));
      }
    }
  }
}
