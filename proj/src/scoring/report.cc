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

#include "scoring/report.h"

#include <cmath>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "common/error.h"

namespace sawt {

std::string format_percent(long numerator, long denominator) {
  if (denominator <= 0) throw Error(ErrorKind::kData, "percentage with non-positive denominator");
  if (numerator < 0) throw Error(ErrorKind::kData, "percentage with negative numerator");
  // value = numerator/denominator * 100, rounded half-up to 2 decimals:
  // round(n * 10000 / d) in exact integer arithmetic.
  const long long scaled = (static_cast<long long>(numerator) * 10000 * 2 + denominator) /
                           (2 * static_cast<long long>(denominator));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld.%02lld", scaled / 100, scaled % 100);
  return buf;
}

std::string format_percent(double fraction) {
  const long long scaled = std::llround(fraction * 10000.0);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%lld.%02lld", scaled / 100, std::llabs(scaled % 100));
  return buf;
}

RateSummary wer_totals(const std::vector<AlignmentResult>& results) {
  RateSummary totals;
  for (const AlignmentResult& r : results) {
    totals.n_ref += r.n_ref;
    totals.matches += r.matches;
    totals.substitutions += r.substitutions;
    totals.deletions += r.deletions;
    totals.insertions += r.insertions;
  }
  if (totals.n_ref <= 0) throw Error(ErrorKind::kData, "empty reference corpus");
  return totals;
}

UtteranceAccuracy utterance_accuracy(const std::vector<AlignmentResult>& results,
                                     const std::vector<double>& durations) {
  if (results.size() != durations.size())
    throw Error(ErrorKind::kData,
                str_cat("got ", results.size(), " alignments but ", durations.size(), " durations"));
  UtteranceAccuracy acc;
  for (size_t i = 0; i < results.size(); ++i) {
    if (!(durations[i] > 0.0))
      throw Error(ErrorKind::kData, str_cat("non-positive duration for utterance ", i));
    ++acc.total;
    acc.total_duration += durations[i];
    if (results[i].perfect()) {
      ++acc.perfect;
      acc.perfect_duration += durations[i];
    }
  }
  if (acc.total == 0) throw Error(ErrorKind::kData, "no utterances to score");
  return acc;
}

std::vector<PhoneRow> phone_accuracy(
    const std::vector<std::vector<std::string>>& ref_phones,
    const std::vector<std::vector<std::string>>& hyp_phones,
    const PhoneSet& phones) {
  if (ref_phones.size() != hyp_phones.size())
    throw Error(ErrorKind::kData, "reference/hypothesis utterance count mismatch");

  std::map<int, PhoneRow> rows;  // phone-set index -> row
  const auto check = [&phones](const std::string& p) {
    if (!phones.contains(p))
      throw Error(ErrorKind::kData, "unknown phone label: " + p);
  };

  for (size_t u = 0; u < ref_phones.size(); ++u) {
    for (const auto& p : ref_phones[u]) check(p);
    for (const auto& p : hyp_phones[u]) check(p);
    const AlignmentResult alignment = align(ref_phones[u], hyp_phones[u]);
    for (const AlignedPair& pair : alignment.pairs) {
      if (pair.ref.empty()) continue;  // insertion, no reference phone
      const int idx = phones.index_of(pair.ref);
      PhoneRow& row = rows[idx];
      row.phone = phones.phones()[idx];
      ++row.tested;
      if (pair.op == AlignOp::kMatch) ++row.decoded;
    }
  }

  std::vector<PhoneRow> table;
  table.reserve(rows.size());
  for (auto& [idx, row] : rows) table.push_back(std::move(row));
  return table;
}

CorpusReport make_corpus_report(std::vector<UtteranceScore> utterances,
                                std::vector<PhoneRow> phone_table,
                                bool has_durations, bool has_phone_table) {
  CorpusReport report;
  report.utterances = std::move(utterances);
  report.phone_table = std::move(phone_table);
  report.has_durations = has_durations;
  report.has_phone_table = has_phone_table;

  std::vector<AlignmentResult> alignments;
  std::vector<double> durations;
  for (const UtteranceScore& u : report.utterances) {
    alignments.push_back(u.alignment);
    durations.push_back(u.duration);
  }
  report.words = wer_totals(alignments);
  if (has_durations)
    report.utterance_rates = utterance_accuracy(alignments, durations);
  else {
    for (const AlignmentResult& a : alignments) {
      ++report.utterance_rates.total;
      if (a.perfect()) ++report.utterance_rates.perfect;
    }
  }
  return report;
}

std::string CorpusReport::to_text() const {
  std::string s;
  s += "== word level ==\n";
  s += str_cat("reference words ", words.n_ref, "  matched ", words.matches, "  sub ",
               words.substitutions, "  del ", words.deletions, "  ins ", words.insertions, "\n");
  s += str_cat("recognition rate ", format_percent(words.matches, words.n_ref), "%  WER ",
               format_percent(words.substitutions + words.deletions + words.insertions, words.n_ref),
               "%\n");
  s += "== utterance level ==\n";
  s += str_cat("utterances ", utterance_rates.total, "  fully decoded ", utterance_rates.perfect,
               " (", format_percent(utterance_rates.perfect, utterance_rates.total), "%)\n");
  if (has_durations) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "total duration %.2f s  fully decoded %.2f s",
                  utterance_rates.total_duration, utterance_rates.perfect_duration);
    s += buf;
    s += str_cat("  duration-weighted accuracy ",
                 format_percent(utterance_rates.duration_rate()), "%\n");
  }
  if (has_phone_table) {
    s += "== phone level ==\n";
    s += "phone\ttested\tdecoded\t%\n";
    for (const PhoneRow& row : phone_table)
      s += str_cat(row.phone, "\t", row.tested, "\t", row.decoded, "\t",
                   format_percent(row.decoded, row.tested), "\n");
  }
  return s;
}

std::string CorpusReport::to_json() const {
  nlohmann::json j;
  j["words"] = {{"n_ref", words.n_ref},
                {"matches", words.matches},
                {"substitutions", words.substitutions},
                {"deletions", words.deletions},
                {"insertions", words.insertions},
                {"recognition_rate_percent", format_percent(words.matches, words.n_ref)},
                {"wer_percent", format_percent(words.substitutions + words.deletions +
                                                   words.insertions,
                                               words.n_ref)}};
  j["utterances"] = {{"total", utterance_rates.total},
                     {"perfect", utterance_rates.perfect},
                     {"count_rate_percent",
                      format_percent(utterance_rates.perfect, utterance_rates.total)}};
  if (has_durations) {
    j["utterances"]["total_duration_s"] = utterance_rates.total_duration;
    j["utterances"]["perfect_duration_s"] = utterance_rates.perfect_duration;
    j["utterances"]["duration_rate_percent"] = format_percent(utterance_rates.duration_rate());
  }
  if (has_phone_table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const PhoneRow& row : phone_table)
      rows.push_back({{"phone", row.phone},
                      {"tested", row.tested},
                      {"decoded", row.decoded},
                      {"percent", format_percent(row.decoded, row.tested)}});
    j["phones"] = rows;
  }
  nlohmann::json per_utt = nlohmann::json::array();
  for (const UtteranceScore& u : utterances) {
    nlohmann::json e = {{"id", u.id},
                        {"n_ref", u.alignment.n_ref},
                        {"matches", u.alignment.matches},
                        {"substitutions", u.alignment.substitutions},
                        {"deletions", u.alignment.deletions},
                        {"insertions", u.alignment.insertions}};
    if (has_durations) e["duration_s"] = u.duration;
    per_utt.push_back(e);
  }
  j["per_utterance"] = per_utt;
  return j.dump(2);
}

}  // namespace sawt
