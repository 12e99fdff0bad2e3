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

#include <random>

#include "common/error.h"
#include "lexicon/arabic_g2p.h"
#include "oracles/edit_distance_oracle.h"
#include "scoring/alignment.h"
#include "scoring/report.h"

using namespace sawt;

namespace {

std::vector<std::string> tokens(const std::string& joined) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : joined) {
    if (c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// all sequences over {a, b, c} up to the given length
std::vector<std::vector<std::string>> all_sequences(int max_len) {
  const std::vector<std::string> alphabet = {"a", "b", "c"};
  std::vector<std::vector<std::string>> out = {{}};
  std::vector<std::vector<std::string>> frontier = {{}};
  for (int l = 0; l < max_len; ++l) {
    std::vector<std::vector<std::string>> next;
    for (const auto& seq : frontier) {
      for (const auto& sym : alphabet) {
        auto extended = seq;
        extended.push_back(sym);
        out.push_back(extended);
        next.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("alignment basics") {
  // identity
  {
    const AlignmentResult r = align(tokens("a b c"), tokens("a b c"));
    CHECK(r.matches == 3);
    CHECK(r.substitutions == 0);
    CHECK(r.deletions == 0);
    CHECK(r.insertions == 0);
    CHECK(r.n_ref == 3);
    CHECK(r.perfect());
  }
  // forced single deletion
  {
    const AlignmentResult r = align(tokens("a b c"), tokens("a c"));
    CHECK(r.deletions == 1);
    CHECK(r.substitutions == 0);
    CHECK(r.insertions == 0);
    CHECK(r.matches == 2);
  }
  // empty sequences
  {
    const AlignmentResult r = align({}, tokens("x y"));
    CHECK(r.insertions == 2);
    CHECK(r.n_ref == 0);
  }
  // counts are consistent with the pair list and n_ref
  {
    const AlignmentResult r = align(tokens("a b a c"), tokens("b b c c a"));
    CHECK(r.n_ref == r.matches + r.substitutions + r.deletions);
    long m = 0, s = 0, d = 0, i = 0;
    for (const AlignedPair& p : r.pairs) {
      if (p.op == AlignOp::kMatch) ++m;
      if (p.op == AlignOp::kSub) ++s;
      if (p.op == AlignOp::kDel) ++d;
      if (p.op == AlignOp::kIns) ++i;
    }
    CHECK(m == r.matches);
    CHECK(s == r.substitutions);
    CHECK(d == r.deletions);
    CHECK(i == r.insertions);
  }
  // among equal-cost alignments the one with more matches wins
  {
    const AlignmentResult r = align(tokens("a b"), tokens("b a"));
    CHECK(r.errors() == 2);
    CHECK(r.matches == 1);
  }
}

TEST_CASE("alignment distance matches the oracle on random pairs") {
  std::mt19937 rng(13);
  const std::vector<std::string> alphabet = {"a", "b", "c"};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::string> ref, hyp;
    const int n = static_cast<int>(rng() % 9);
    const int m = static_cast<int>(rng() % 9);
    for (int i = 0; i < n; ++i) ref.push_back(alphabet[rng() % 3]);
    for (int i = 0; i < m; ++i) hyp.push_back(alphabet[rng() % 3]);
    const AlignmentResult r = align(ref, hyp);
    CHECK(r.errors() == sawt_test::edit_distance_oracle(ref, hyp));
  }
}

TEST_CASE("alignment is symmetric and satisfies the triangle inequality") {
  const auto sequences = all_sequences(3);
  for (const auto& a : sequences) {
    for (const auto& b : sequences) {
      const AlignmentResult ab = align(a, b);
      const AlignmentResult ba = align(b, a);
      CHECK(ab.errors() == ba.errors());
      CHECK(ab.deletions == ba.insertions);
      CHECK(ab.insertions == ba.deletions);
      CHECK(ab.substitutions == ba.substitutions);
    }
  }
  // triangle inequality on a subsample (full cube is large)
  std::mt19937 rng(19);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& a = sequences[rng() % sequences.size()];
    const auto& b = sequences[rng() % sequences.size()];
    const auto& c = sequences[rng() % sequences.size()];
    CHECK(align(a, c).errors() <= align(a, b).errors() + align(b, c).errors());
  }
}

TEST_CASE("wer arithmetic on the reference evaluation counts") {
  // n_ref=5354, matches=5167, S=134, I=48 => D = 5354-5167-134 = 53
  AlignmentResult r;
  r.n_ref = 5354;
  r.matches = 5167;
  r.substitutions = 134;
  r.deletions = 53;
  r.insertions = 48;
  const RateSummary totals = wer_totals({r});
  CHECK(format_percent(totals.matches, totals.n_ref) == "96.51");
  CHECK(format_percent(totals.substitutions + totals.deletions + totals.insertions,
                       totals.n_ref) == "4.39");
  // recognition rate + (S+D)/n_ref = 1 exactly, in integers
  CHECK(totals.matches + totals.substitutions + totals.deletions == totals.n_ref);
}

TEST_CASE("wer edge cases") {
  AlignmentResult perfect;
  perfect.n_ref = 10;
  perfect.matches = 10;
  const RateSummary totals = wer_totals({perfect});
  CHECK(totals.wer() == 0.0);
  CHECK(totals.recognition_rate() == 1.0);
  CHECK_THROWS_AS(wer_totals({}), Error);
}

TEST_CASE("wer is invariant under re-partitioning") {
  const std::vector<std::string> ref = {"x", "y", "z", "w", "q"};
  const std::vector<std::string> hyp = {"x", "z", "w", "w", "q"};
  // split after position 2 vs whole-corpus alignment; the words are unique
  // enough that no cross-utterance ambiguity arises
  const AlignmentResult whole = align(ref, hyp);
  const AlignmentResult part1 =
      align({ref.begin(), ref.begin() + 2}, {hyp.begin(), hyp.begin() + 2});
  const AlignmentResult part2 =
      align({ref.begin() + 2, ref.end()}, {hyp.begin() + 2, hyp.end()});
  CHECK(whole.errors() == part1.errors() + part2.errors());
}

TEST_CASE("utterance accuracy, count and duration weighted") {
  AlignmentResult good;
  good.n_ref = 3;
  good.matches = 3;
  AlignmentResult bad = good;
  bad.matches = 2;
  bad.substitutions = 1;

  // 64 minutes of audio, 52 of them fully decoded
  const UtteranceAccuracy acc = utterance_accuracy({good, bad}, {52.0 * 60, 12.0 * 60});
  CHECK(acc.perfect == 1);
  CHECK(format_percent(acc.duration_rate()) == "81.25");

  const UtteranceAccuracy all = utterance_accuracy({good, good}, {1.0, 2.0});
  CHECK(all.count_rate() == 1.0);
  CHECK(all.duration_rate() == 1.0);

  // an imperfect utterance still contributes matched words at word level
  const RateSummary words = wer_totals({good, bad});
  CHECK(words.recognition_rate() > static_cast<double>(acc.perfect) / acc.total);

  CHECK_THROWS_AS(utterance_accuracy({good}, {1.0, 2.0}), Error);
  CHECK_THROWS_AS(utterance_accuracy({good}, {0.0}), Error);
}

TEST_CASE("phone accuracy table") {
  const PhoneSet phones = PhoneSet::from_phones(arabic_phone_inventory());

  // identical sequences containing Z three times
  {
    const std::vector<std::string> seq = {"Z", "A", "Z", "B", "Z"};
    const auto table = phone_accuracy({seq}, {seq}, phones);
    bool found = false;
    for (const PhoneRow& row : table) {
      if (row.phone != "Z") continue;
      found = true;
      CHECK(row.tested == 3);
      CHECK(row.decoded == 3);
      CHECK(format_percent(row.decoded, row.tested) == "100.00");
    }
    CHECK(found);
  }
  // decoded never exceeds tested; table carries the four expected fields
  {
    std::mt19937 rng(31);
    std::vector<std::vector<std::string>> ref, hyp;
    const std::vector<std::string> pool = {"A", "B", "T", "Q"};
    for (int u = 0; u < 20; ++u) {
      std::vector<std::string> r, h;
      for (int i = 0; i < 6; ++i) r.push_back(pool[rng() % 4]);
      for (int i = 0; i < 6; ++i) h.push_back(pool[rng() % 4]);
      ref.push_back(r);
      hyp.push_back(h);
    }
    for (const PhoneRow& row : phone_accuracy(ref, hyp, phones)) {
      CHECK(row.decoded <= row.tested);
      CHECK(!row.phone.empty());
      CHECK(row.tested > 0);
    }
  }
  CHECK_THROWS_WITH_AS(phone_accuracy({{"NOPE"}}, {{"A"}}, phones), doctest::Contains("NOPE"),
                       Error);
}

TEST_CASE("percent formatting rounds half-up to 2 decimals") {
  CHECK(format_percent(1, 3) == "33.33");
  CHECK(format_percent(2, 3) == "66.67");
  CHECK(format_percent(1, 1) == "100.00");
  CHECK(format_percent(0, 7) == "0.00");
  // exact half rounds up: 1/800 = 0.125% -> 0.13
  CHECK(format_percent(1, 800) == "0.13");
  CHECK(format_percent(0.8125) == "81.25");
  CHECK_THROWS_AS(format_percent(1, 0), Error);
}
