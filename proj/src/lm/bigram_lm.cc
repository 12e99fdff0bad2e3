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

#include "lm/bigram_lm.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "common/error.h"
#include "common/io.h"
#include "common/text.h"

namespace sawt {

double BigramLm::unigram_logp(const std::string& w) const {
  auto it = unigrams_.find(w);
  if (it == unigrams_.end())
    throw Error(ErrorKind::kData, "word not in language model: " + w);
  return it->second.logp;
}

double BigramLm::backoff_weight(const std::string& h) const {
  auto it = unigrams_.find(h);
  if (it == unigrams_.end())
    throw Error(ErrorKind::kData, "history not in language model: " + h);
  return it->second.backoff;
}

std::optional<double> BigramLm::bigram_logp(const std::string& h, const std::string& w) const {
  auto it = bigrams_.find({h, w});
  if (it == bigrams_.end()) return std::nullopt;
  return it->second;
}

double BigramLm::cond_logp(const std::string& h, const std::string& w) const {
  const auto resolve = [this](const std::string& token) -> const std::string& {
    if (has_word(token)) return token;
    static const std::string unk = kUnknown;
    if (has_unknown()) return unk;
    throw Error(ErrorKind::kData, "out-of-vocabulary word (no <unk> in model): " + token);
  };
  const std::string& hh = resolve(h);
  const std::string& ww = resolve(w);
  if (auto bi = bigram_logp(hh, ww)) return *bi;
  return backoff_weight(hh) + unigram_logp(ww);
}

double BigramLm::sentence_logp(const std::vector<std::string>& words) const {
  std::string prev = kSentStart;
  double total = 0.0;
  for (const std::string& w : words) {
    total += cond_logp(prev, w);
    prev = has_word(w) ? w : std::string(kUnknown);
  }
  total += cond_logp(prev, kSentEnd);
  return total;
}

int BigramLm::word_count() const {
  int n = vocab_size();
  if (has_word(kSentStart)) --n;
  if (has_word(kSentEnd)) --n;
  return n;
}

void BigramLm::set_unigram(const std::string& w, double logp, double backoff) {
  if (!unigrams_.count(w))
    vocab_.insert(std::lower_bound(vocab_.begin(), vocab_.end(), w), w);
  unigrams_[w] = Unigram{logp, backoff};
}

void BigramLm::set_bigram(const std::string& h, const std::string& w, double logp) {
  if (!unigrams_.count(h) || !unigrams_.count(w))
    throw Error(ErrorKind::kData, "bigram over unknown unigram: " + h + " " + w);
  bigrams_[{h, w}] = logp;
}

BigramLm estimate_bigram(const NgramCounts& counts) {
  if (counts.unigrams.empty()) throw Error(ErrorKind::kData, "empty counts");

  BigramLm lm;
  const double total = static_cast<double>(counts.total_tokens);

  // Maximum-likelihood unigrams; backoff weights filled in below.
  for (const auto& [w, c] : counts.unigrams)
    lm.set_unigram(w, std::log10(c / total), 0.0);

  // Group bigrams by history (the map is ordered, so runs are contiguous).
  auto it = counts.bigrams.begin();
  while (it != counts.bigrams.end()) {
    const std::string& h = it->first.first;
    long history_count = 0;
    long distinct = 0;
    auto run_end = it;
    while (run_end != counts.bigrams.end() && run_end->first.first == h) {
      history_count += run_end->second;
      ++distinct;
      ++run_end;
    }

    const double denom = static_cast<double>(history_count + distinct);
    double seen_unigram_mass = 0.0;
    for (auto b = it; b != run_end; ++b) {
      lm.set_bigram(h, b->first.second, std::log10(b->second / denom));
      seen_unigram_mass += counts.unigrams.at(b->first.second) / total;
    }

    // Weight so the unseen tail fills exactly the discounted mass. The
    // denominator cannot vanish: <s> never appears as a successor, so some
    // unigram mass is always left over.
    const double backoff_mass = distinct / denom;
    const double unseen_mass = 1.0 - seen_unigram_mass;
    if (unseen_mass <= 0.0)
      throw Error(ErrorKind::kNumeric, "no unigram mass left for backoff after history " + h);
    lm.set_unigram(h, std::log10(counts.unigrams.at(h) / total),
                   std::log10(backoff_mass / unseen_mass));
    it = run_end;
  }
  return lm;
}

void write_arpa(const BigramLm& lm, const std::string& path) {
  std::ofstream out = open_output(path);
  char buf[64];
  out << "\\data\\\n";
  out << "ngram 1=" << lm.vocab_size() << "\n";
  out << "ngram 2=" << lm.num_bigrams() << "\n\n";

  out << "\\1-grams:\n";
  for (const std::string& w : lm.vocab()) {
    std::snprintf(buf, sizeof(buf), "%.6f", lm.unigram_logp(w));
    out << buf << '\t' << w << '\t';
    std::snprintf(buf, sizeof(buf), "%.6f", lm.backoff_weight(w));
    out << buf << '\n';
  }

  out << "\n\\2-grams:\n";
  for (const std::string& h : lm.vocab()) {
    for (const std::string& w : lm.vocab()) {
      auto bi = lm.bigram_logp(h, w);
      if (!bi) continue;
      std::snprintf(buf, sizeof(buf), "%.6f", *bi);
      out << buf << '\t' << h << '\t' << w << '\n';
    }
  }
  out << "\n\\end\\\n";
  if (!out) throw Error(ErrorKind::kIo, "short write to " + path);
}

BigramLm read_arpa(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  size_t i = 0;
  const auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorKind::kData, str_cat(path, ":", i + 1, ": ", msg));
  };

  while (i < lines.size() && trim(lines[i]) != "\\data\\") ++i;
  if (i == lines.size()) throw fail("missing \\data\\ section");
  ++i;

  long declared1 = -1, declared2 = -1;
  for (; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty()) continue;
    if (line[0] == '\\') break;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2 || tokens[0] != "ngram")
      throw fail("malformed count line: " + line);
    const size_t eq = tokens[1].find('=');
    if (eq == std::string::npos) throw fail("malformed count line: " + line);
    const long order = parse_int(tokens[1].substr(0, eq), "ngram order");
    const long count = parse_int(tokens[1].substr(eq + 1), "ngram count");
    if (order == 1)
      declared1 = count;
    else if (order == 2)
      declared2 = count;
    else
      throw fail(str_cat("unsupported ngram order ", order));
  }
  if (declared1 < 0) throw fail("missing \"ngram 1=\" declaration");
  if (declared2 < 0) throw fail("missing \"ngram 2=\" declaration");

  if (i == lines.size() || trim(lines[i]) != "\\1-grams:")
    throw fail("expected \\1-grams: section");
  ++i;

  BigramLm lm;
  long seen1 = 0;
  for (; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty()) continue;
    if (line[0] == '\\') break;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2 && tokens.size() != 3)
      throw fail("malformed 1-gram line: " + line);
    const double logp = parse_double(tokens[0], "unigram log-probability");
    const double backoff = tokens.size() == 3 ? parse_double(tokens[2], "backoff weight") : 0.0;
    lm.set_unigram(tokens[1], logp, backoff);
    ++seen1;
  }
  if (seen1 != declared1)
    throw fail(str_cat("header declares ngram 1=", declared1, " but body has ", seen1, " lines"));

  if (i == lines.size() || trim(lines[i]) != "\\2-grams:")
    throw fail("expected \\2-grams: section");
  ++i;

  long seen2 = 0;
  for (; i < lines.size(); ++i) {
    const std::string line = trim(lines[i]);
    if (line.empty()) continue;
    if (line[0] == '\\') break;
    const auto tokens = split_ws(line);
    if (tokens.size() != 3) throw fail("malformed 2-gram line: " + line);
    lm.set_bigram(tokens[1], tokens[2], parse_double(tokens[0], "bigram log-probability"));
    ++seen2;
  }
  if (seen2 != declared2)
    throw fail(str_cat("header declares ngram 2=", declared2, " but body has ", seen2, " lines"));

  if (i == lines.size() || trim(lines[i]) != "\\end\\") throw fail("missing \\end\\ marker");
  return lm;
}

}  // namespace sawt
