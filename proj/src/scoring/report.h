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

#ifndef SAWT_SCORING_REPORT_H_
#define SAWT_SCORING_REPORT_H_

#include <string>
#include <vector>

#include "lexicon/phone_set.h"
#include "scoring/alignment.h"

namespace sawt {

// Percentages are reported with 2 decimals, rounded half-up.
std::string format_percent(long numerator, long denominator);  // exact integer rounding
std::string format_percent(double fraction);

struct RateSummary {
  long n_ref = 0;
  long matches = 0;
  long substitutions = 0;
  long deletions = 0;
  long insertions = 0;

  // Word recognition rate (matches / n_ref) and WER ((S+D+I) / n_ref)
  // differ: insertions only affect WER. Both are always reported.
  double recognition_rate() const { return static_cast<double>(matches) / n_ref; }
  double wer() const { return static_cast<double>(substitutions + deletions + insertions) / n_ref; }
};

// Errors (kData) when the reference corpus is empty.
RateSummary wer_totals(const std::vector<AlignmentResult>& results);

struct UtteranceAccuracy {
  long total = 0;
  long perfect = 0;  // S = D = I = 0
  double total_duration = 0.0;
  double perfect_duration = 0.0;

  double count_rate() const { return static_cast<double>(perfect) / total; }
  double duration_rate() const { return perfect_duration / total_duration; }
};

// durations are seconds per utterance, parallel to results.
UtteranceAccuracy utterance_accuracy(const std::vector<AlignmentResult>& results,
                                     const std::vector<double>& durations);

struct PhoneRow {
  std::string phone;
  long tested = 0;   // occurrences in references
  long decoded = 0;  // occurrences aligned as matches
  double percent() const { return tested == 0 ? 0.0 : 100.0 * decoded / tested; }
};

// Aligns phone sequences per utterance and tabulates per-phone hit rates.
// Rows follow phone-set order; phones never tested are omitted. Unknown
// labels raise Error(kData).
std::vector<PhoneRow> phone_accuracy(
    const std::vector<std::vector<std::string>>& ref_phones,
    const std::vector<std::vector<std::string>>& hyp_phones,
    const PhoneSet& phones);

struct UtteranceScore {
  std::string id;
  AlignmentResult alignment;
  double duration = 0.0;
};

struct CorpusReport {
  std::vector<UtteranceScore> utterances;
  RateSummary words;
  UtteranceAccuracy utterance_rates;
  std::vector<PhoneRow> phone_table;
  bool has_durations = false;
  bool has_phone_table = false;

  std::string to_text() const;
  std::string to_json() const;
};

CorpusReport make_corpus_report(std::vector<UtteranceScore> utterances,
                                std::vector<PhoneRow> phone_table,
                                bool has_durations, bool has_phone_table);

}  // namespace sawt

#endif  // SAWT_SCORING_REPORT_H_
