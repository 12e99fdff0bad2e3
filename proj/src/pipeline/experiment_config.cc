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

#include "pipeline/experiment_config.h"

#include <functional>
#include <map>

#include "common/error.h"
#include "common/io.h"
#include "common/text.h"

namespace sawt {

namespace {

struct Key {
  std::function<void(ExperimentConfig&, const std::string&)> set;
  std::function<std::string(const ExperimentConfig&)> get;
};

const std::map<std::string, Key>& key_table() {
  auto str = [](std::string ExperimentConfig::* member) {
    return Key{[member](ExperimentConfig& c, const std::string& v) { c.*member = v; },
               [member](const ExperimentConfig& c) { return c.*member; }};
  };
  auto num = [](double ExperimentConfig::* member) {
    return Key{[member](ExperimentConfig& c, const std::string& v) {
                 c.*member = parse_double(v, "config value");
               },
               [member](const ExperimentConfig& c) { return double_repr(c.*member); }};
  };
  auto integer = [](int ExperimentConfig::* member) {
    return Key{[member](ExperimentConfig& c, const std::string& v) {
                 c.*member = static_cast<int>(parse_int(v, "config value"));
               },
               [member](const ExperimentConfig& c) { return str_cat(c.*member); }};
  };
  auto seed = [](uint64_t ExperimentConfig::* member) {
    return Key{[member](ExperimentConfig& c, const std::string& v) {
                 c.*member = static_cast<uint64_t>(parse_int(v, "config value"));
               },
               [member](const ExperimentConfig& c) { return str_cat(c.*member); }};
  };
  auto fnum = [](double FrontendConfig::* member) {
    return Key{[member](ExperimentConfig& c, const std::string& v) {
                 c.frontend.*member = parse_double(v, "config value");
               },
               [member](const ExperimentConfig& c) { return double_repr(c.frontend.*member); }};
  };
  auto fint = [](int FrontendConfig::* member) {
    return Key{[member](ExperimentConfig& c, const std::string& v) {
                 c.frontend.*member = static_cast<int>(parse_int(v, "config value"));
               },
               [member](const ExperimentConfig& c) { return str_cat(c.frontend.*member); }};
  };
  auto dnum = [](double DecoderConfig::* member) {
    return Key{[member](ExperimentConfig& c, const std::string& v) {
                 c.decoder.*member = parse_double(v, "config value");
               },
               [member](const ExperimentConfig& c) { return double_repr(c.decoder.*member); }};
  };

  static const std::map<std::string, Key> table = {
      {"phone_list", str(&ExperimentConfig::phone_list)},
      {"dictionary", str(&ExperimentConfig::dictionary)},
      {"fileids", str(&ExperimentConfig::fileids)},
      {"transcription", str(&ExperimentConfig::transcription)},
      {"audio_dir", str(&ExperimentConfig::audio_dir)},
      {"out_dir", str(&ExperimentConfig::out_dir)},
      {"lm_text", str(&ExperimentConfig::lm_text)},
      {"wordlist", str(&ExperimentConfig::wordlist)},
      {"score_ref", str(&ExperimentConfig::score_ref)},
      {"score_hyp", str(&ExperimentConfig::score_hyp)},
      {"durations", str(&ExperimentConfig::durations)},
      {"pre_emphasis", fnum(&FrontendConfig::pre_emphasis)},
      {"frame_length_ms", fnum(&FrontendConfig::frame_length_ms)},
      {"frame_shift_ms", fnum(&FrontendConfig::frame_shift_ms)},
      {"fft_size", fint(&FrontendConfig::fft_size)},
      {"num_filters", fint(&FrontendConfig::num_filters)},
      {"num_cepstra", fint(&FrontendConfig::num_cepstra)},
      {"low_freq", fnum(&FrontendConfig::low_freq)},
      {"high_freq", fnum(&FrontendConfig::high_freq)},
      {"log_floor", fnum(&FrontendConfig::log_floor)},
      {"test_fraction", num(&ExperimentConfig::test_fraction)},
      {"split_seed", seed(&ExperimentConfig::split_seed)},
      {"split_mode", str(&ExperimentConfig::split_mode)},
      {"test_tag_prefix", str(&ExperimentConfig::test_tag_prefix)},
      {"em_iterations", integer(&ExperimentConfig::em_iterations)},
      {"mixture_target", integer(&ExperimentConfig::mixture_target)},
      {"min_mixture_occupancy", num(&ExperimentConfig::min_mixture_occupancy)},
      {"variance_floor_scale", num(&ExperimentConfig::variance_floor_scale)},
      {"use_triphones",
       Key{[](ExperimentConfig& c, const std::string& v) {
             c.use_triphones = parse_bool(v, "use_triphones");
             c.decoder.use_triphones = c.use_triphones;
           },
           [](const ExperimentConfig& c) { return c.use_triphones ? "true" : "false"; }}},
      {"beam", dnum(&DecoderConfig::beam)},
      {"max_active",
       Key{[](ExperimentConfig& c, const std::string& v) {
             c.decoder.max_active = static_cast<int>(parse_int(v, "max_active"));
           },
           [](const ExperimentConfig& c) { return str_cat(c.decoder.max_active); }}},
      {"lm_weight", dnum(&DecoderConfig::lm_weight)},
      {"word_insertion_penalty", dnum(&DecoderConfig::word_insertion_penalty)},
      {"silence_insertion",
       Key{[](ExperimentConfig& c, const std::string& v) {
             c.decoder.silence_insertion = parse_bool(v, "silence_insertion");
           },
           [](const ExperimentConfig& c) {
             return c.decoder.silence_insertion ? "true" : "false";
           }}},
      {"phone_hyp_mode", str(&ExperimentConfig::phone_hyp_mode)},
      {"threads", integer(&ExperimentConfig::threads)},
      {"synth_utterances", integer(&ExperimentConfig::synth_utterances)},
      {"synth_seed", seed(&ExperimentConfig::synth_seed)},
  };
  return table;
}

}  // namespace

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  ExperimentConfig config;
  int line_no = 0;
  for (const std::string& raw : read_lines(path)) {
    ++line_no;
    std::string line = raw;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::kUsage,
                  str_cat(path, ":", line_no, ": expected key = value, got \"", line, "\""));
    try {
      config.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const Error& e) {
      throw Error(e.kind(), str_cat(path, ":", line_no, ": ", e.what()));
    }
  }
  return config;
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  auto it = key_table().find(key);
  if (it == key_table().end())
    throw Error(ErrorKind::kUsage, "unknown config key: " + key);
  it->second.set(*this, value);
}

std::string ExperimentConfig::to_string() const {
  std::string out;
  for (const auto& [key, accessor] : key_table())
    out += key + " = " + accessor.get(*this) + "\n";
  return out;
}

}  // namespace sawt
