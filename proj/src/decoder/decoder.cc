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

#include "decoder/decoder.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <unordered_map>

#include "am/composite_hmm.h"
#include "am/trainer.h"
#include "common/error.h"
#include "common/logmath.h"

namespace sawt {

void DecoderConfig::validate() const {
  if (!(beam > 0.0)) throw Error(ErrorKind::kUsage, "beam must be > 0 (linear probability)");
  if (max_active < 1) throw Error(ErrorKind::kUsage, "max_active must be >= 1");
  if (lm_weight < 0.0) throw Error(ErrorKind::kUsage, "lm_weight must be >= 0");
  if (!(word_insertion_penalty > 0.0))
    throw Error(ErrorKind::kUsage, "word_insertion_penalty must be > 0 (linear)");
  if (!(frame_shift_seconds > 0.0))
    throw Error(ErrorKind::kUsage, "frame_shift_seconds must be > 0");
}

std::vector<std::string> DecodeResult::word_labels() const {
  std::vector<std::string> labels;
  labels.reserve(words.size());
  for (const DecodedWord& w : words) labels.push_back(w.word);
  return labels;
}

void Decoder::add_instance_states(const std::vector<PhoneUnit>& units, int instance_id,
                                  int silence_history, std::vector<EntryArc>* entries,
                                  std::vector<FinalArc>* finals) {
  const CompositeHmm hmm = compose_utterance_hmm(model_, units);
  const int offset = static_cast<int>(states_.size());

  std::unordered_map<const Gmm*, int> slot_of;
  for (int i = 0; i < static_cast<int>(gmm_slots_.size()); ++i) slot_of[gmm_slots_[i]] = i;

  for (const auto& s : hmm.states()) {
    NetState state;
    auto it = slot_of.find(s.gmm);
    if (it == slot_of.end()) {
      state.gmm_slot = static_cast<int>(gmm_slots_.size());
      slot_of[s.gmm] = state.gmm_slot;
      gmm_slots_.push_back(s.gmm);
    } else {
      state.gmm_slot = it->second;
    }
    state.owner_instance = instance_id;
    state.silence_history = silence_history;
    states_.push_back(state);
  }
  for (const auto& a : hmm.arcs()) arcs_.push_back({a.from + offset, a.to + offset, a.logp});
  for (const auto& e : hmm.entries()) entries->push_back({e.state + offset, e.logp});
  for (const auto& f : hmm.finals()) finals->push_back({f.state + offset, f.logp});
}

Decoder::Decoder(const AcousticModel& model, const BigramLm& lm, const Lexicon& lexicon,
                 DecoderConfig config)
    : model_(model), config_(config) {
  config_.validate();
  if (lexicon.num_entries() == 0) throw Error(ErrorKind::kData, "empty lexicon");
  log_beam_ = -std::log(config_.beam);
  log_wip_ = std::log(config_.word_insertion_penalty);

  // The decoding vocabulary is the lexicon restricted to the LM (unless
  // the LM has <unk> to cover the rest).
  for (const std::string& word : lexicon.words()) {
    if (lm.has_word(word) || lm.has_unknown()) {
      words_.push_back(word);
    } else {
      std::cerr << "warning: word " << word
                << " is not in the language model, excluded from decoding\n";
    }
  }
  if (words_.empty())
    throw Error(ErrorKind::kData, "no lexicon word is covered by the language model");
  std::unordered_map<std::string, int> word_index;
  for (int i = 0; i < static_cast<int>(words_.size()); ++i) word_index[words_[i]] = i;

  for (const LexiconEntry& entry : lexicon.entries()) {
    auto it = word_index.find(entry.word);
    if (it == word_index.end()) continue;
    WordInstance inst;
    inst.lm_word = it->second;
    inst.variant = entry.variant;
    const int id = static_cast<int>(instances_.size());
    add_instance_states(make_phone_units(entry.phones, config_.use_triphones), id, -1,
                        &inst.entries, &inst.finals);
    instances_.push_back(std::move(inst));
  }

  const int W = static_cast<int>(words_.size());
  if (config_.silence_insertion) {
    silences_.resize(W + 1);
    for (int h = 0; h <= W; ++h)
      add_instance_states({PhoneUnit{PhoneSet::kSilence}}, -1, h, &silences_[h].entries,
                          &silences_[h].finals);
  }

  // Group arcs by source state.
  std::sort(arcs_.begin(), arcs_.end(),
            [](const NetArc& a, const NetArc& b) { return a.from < b.from; });
  arc_begin_.assign(states_.size() + 1, 0);
  for (const NetArc& a : arcs_) ++arc_begin_[a.from + 1];
  for (size_t s = 1; s < arc_begin_.size(); ++s) arc_begin_[s] += arc_begin_[s - 1];

  // LM transition tables; the scale folds in the log10 -> ln conversion.
  const double scale = config_.lm_weight * kLn10;
  lm_trans_.assign(W + 1, std::vector<double>(W, 0.0));
  lm_final_.assign(W + 1, 0.0);
  for (int h = 0; h <= W; ++h) {
    const std::string& history = h < W ? words_[h] : std::string(kSentStart);
    for (int w = 0; w < W; ++w) lm_trans_[h][w] = scale * lm.cond_logp(history, words_[w]);
    lm_final_[h] = scale * lm.cond_logp(history, kSentEnd);
  }
}

namespace {
struct Token {
  double score = kLogZero;
  int link = -1;
};
struct Link {
  int instance;
  int end;
  int prev;
};
}  // namespace

DecodeResult Decoder::decode(const FeatureMatrix& features) const {
  const auto start_time = std::chrono::steady_clock::now();
  const int T = features.rows();
  const int N = static_cast<int>(states_.size());
  const int W = static_cast<int>(words_.size());
  const int start_history = W;
  if (T < 1) throw Error(ErrorKind::kData, "decode on empty features");

  std::vector<Link> links;
  links.reserve(256);
  const auto link_time = [&links](int link) { return link < 0 ? -1 : links[link].end; };

  std::vector<Token> cur(N), next(N);
  const auto relax = [&](std::vector<Token>& tokens, int state, double score, int link) {
    Token& tok = tokens[state];
    if (score > tok.score ||
        (score == tok.score && link_time(link) < link_time(tok.link))) {
      tok.score = score;
      tok.link = link;
    }
  };
  // Word-to-word transition: LM at the boundary plus the insertion penalty.
  const auto enter_words = [&](std::vector<Token>& tokens, int history, double score, int link) {
    for (const WordInstance& inst : instances_) {
      const double base = score + lm_trans_[history][inst.lm_word] + log_wip_;
      for (const EntryArc& e : inst.entries) relax(tokens, e.state, base + e.logp, link);
    }
  };

  std::vector<double> emis(gmm_slots_.size());
  const int dim = features.cols();
  std::vector<Token> wordend(W);
  std::vector<int> wordend_instance(W);

  for (int t = 0; t < T; ++t) {
    for (Token& tok : next) tok = Token{};

    if (t == 0) {
      enter_words(next, start_history, 0.0, -1);
      if (config_.silence_insertion)
        for (const EntryArc& e : silences_[start_history].entries)
          relax(next, e.state, e.logp, -1);
    } else {
      for (int s = 0; s < N; ++s) {
        if (cur[s].score == kLogZero) continue;
        for (int ai = arc_begin_[s]; ai < arc_begin_[s + 1]; ++ai)
          relax(next, arcs_[ai].to, cur[s].score + arcs_[ai].logp, cur[s].link);
      }

      // Word exits at this boundary.
      for (Token& tok : wordend) tok = Token{};
      for (int i = 0; i < static_cast<int>(instances_.size()); ++i) {
        const WordInstance& inst = instances_[i];
        for (const FinalArc& f : inst.finals) {
          if (cur[f.state].score == kLogZero) continue;
          const double cand = cur[f.state].score + f.logp;
          Token& best = wordend[inst.lm_word];
          if (cand > best.score ||
              (cand == best.score && link_time(cur[f.state].link) < link_time(best.link))) {
            best.score = cand;
            best.link = cur[f.state].link;
            wordend_instance[inst.lm_word] = i;
          }
        }
      }
      for (int w = 0; w < W; ++w) {
        if (wordend[w].score == kLogZero) continue;
        const int link_id = static_cast<int>(links.size());
        links.push_back({wordend_instance[w], t, wordend[w].link});
        enter_words(next, w, wordend[w].score, link_id);
        if (config_.silence_insertion)
          for (const EntryArc& e : silences_[w].entries)
            relax(next, e.state, wordend[w].score + e.logp, link_id);
      }

      // Silence exits: history unchanged, LM applied on the following word.
      if (config_.silence_insertion) {
        for (int h = 0; h <= W; ++h) {
          Token silend;
          for (const FinalArc& f : silences_[h].finals) {
            if (cur[f.state].score == kLogZero) continue;
            const double cand = cur[f.state].score + f.logp;
            if (cand > silend.score ||
                (cand == silend.score && link_time(cur[f.state].link) < link_time(silend.link)))
              silend = Token{cand, cur[f.state].link};
          }
          if (silend.score != kLogZero) enter_words(next, h, silend.score, silend.link);
        }
      }
    }

    // Emissions, then beam and token-count pruning.
    for (size_t g = 0; g < gmm_slots_.size(); ++g)
      emis[g] = gmm_slots_[g]->log_density(features.row(t), dim);
    double best = kLogZero;
    for (int s = 0; s < N; ++s) {
      if (next[s].score == kLogZero) continue;
      next[s].score += emis[states_[s].gmm_slot];
      if (next[s].score > best) best = next[s].score;
    }
    if (best == kLogZero) {
      DecodeResult empty;
      empty.found = false;
      return empty;
    }
    const double threshold = best - log_beam_;
    std::vector<int> active;
    for (int s = 0; s < N; ++s) {
      if (next[s].score == kLogZero) continue;
      if (next[s].score < threshold)
        next[s] = Token{};
      else
        active.push_back(s);
    }
    if (static_cast<int>(active.size()) > config_.max_active) {
      // score-descending, ties kept in state-index order
      std::stable_sort(active.begin(), active.end(),
                       [&next](int a, int b) { return next[a].score > next[b].score; });
      for (size_t i = config_.max_active; i < active.size(); ++i) next[active[i]] = Token{};
    }
    std::swap(cur, next);
  }

  // Utterance end: best word exit (optionally through trailing silence)
  // plus the sentence-end LM term.
  double best_total = kLogZero;
  int best_instance = -1;
  int best_prev_link = -1;
  bool via_silence = false;
  const auto consider = [&](double total, int instance, int prev_link, bool through_sil) {
    if (total > best_total ||
        (total == best_total && link_time(prev_link) < link_time(best_prev_link))) {
      best_total = total;
      best_instance = instance;
      best_prev_link = prev_link;
      via_silence = through_sil;
    }
  };
  for (int i = 0; i < static_cast<int>(instances_.size()); ++i) {
    const WordInstance& inst = instances_[i];
    for (const FinalArc& f : inst.finals) {
      if (cur[f.state].score == kLogZero) continue;
      consider(cur[f.state].score + f.logp + lm_final_[inst.lm_word], i, cur[f.state].link, false);
    }
  }
  if (config_.silence_insertion) {
    for (int h = 0; h < W; ++h) {  // h == start means no word was emitted
      for (const FinalArc& f : silences_[h].finals) {
        if (cur[f.state].score == kLogZero) continue;
        consider(cur[f.state].score + f.logp + lm_final_[h], -1, cur[f.state].link, true);
      }
    }
  }

  DecodeResult result;
  if (best_total == kLogZero) {
    result.found = false;
    return result;
  }
  result.found = true;
  result.log_score = best_total;

  std::vector<Link> chain;
  // Through trailing silence the last word's link is already on the chain.
  if (!via_silence) chain.push_back({best_instance, T, best_prev_link});
  for (int link = best_prev_link; link >= 0; link = links[link].prev)
    chain.push_back(links[link]);
  std::reverse(chain.begin(), chain.end());

  int begin = 0;
  for (const Link& l : chain) {
    const WordInstance& inst = instances_[l.instance];
    DecodedWord w;
    w.word = words_[inst.lm_word];
    w.variant = inst.variant;
    w.begin_frame = begin;
    w.end_frame = l.end;
    begin = l.end;
    result.words.push_back(std::move(w));
  }
  if (!result.words.empty()) result.words.back().end_frame = T;  // absorb trailing silence

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
  result.real_time_factor = elapsed / (T * config_.frame_shift_seconds);
  return result;
}

DecodeResult decode(const AcousticModel& model, const BigramLm& lm, const Lexicon& lexicon,
                    const FeatureMatrix& features, const DecoderConfig& config) {
  return Decoder(model, lm, lexicon, config).decode(features);
}

}  // namespace sawt
