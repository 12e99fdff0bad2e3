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

#include "frontend/mfcc.h"

#include <cmath>
#include <vector>

#include "common/error.h"

namespace sawt {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 FFT on interleaved re/im pairs.
void fft(std::vector<double>& re, std::vector<double>& im) {
  const size_t n = re.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) {
      std::swap(re[i], re[j]);
      std::swap(im[i], im[j]);
    }
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * kPi / static_cast<double>(len);
    const double wr = std::cos(ang), wi = std::sin(ang);
    for (size_t i = 0; i < n; i += len) {
      double cur_r = 1.0, cur_i = 0.0;
      for (size_t k = 0; k < len / 2; ++k) {
        const size_t a = i + k, b = i + k + len / 2;
        const double tr = re[b] * cur_r - im[b] * cur_i;
        const double ti = re[b] * cur_i + im[b] * cur_r;
        re[b] = re[a] - tr;
        im[b] = im[a] - ti;
        re[a] += tr;
        im[a] += ti;
        const double nr = cur_r * wr - cur_i * wi;
        cur_i = cur_r * wi + cur_i * wr;
        cur_r = nr;
      }
    }
  }
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

// Triangular filters with unit peak, evaluated at FFT bin centers.
std::vector<std::vector<double>> mel_filterbank(const FrontendConfig& c, int sample_rate) {
  const int bins = c.fft_size / 2 + 1;
  std::vector<double> edges(c.num_filters + 2);
  const double mel_lo = hz_to_mel(c.low_freq);
  const double mel_hi = hz_to_mel(c.high_freq);
  for (int j = 0; j < c.num_filters + 2; ++j)
    edges[j] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * j / (c.num_filters + 1));

  std::vector<std::vector<double>> filters(c.num_filters, std::vector<double>(bins, 0.0));
  for (int m = 0; m < c.num_filters; ++m) {
    const double left = edges[m], center = edges[m + 1], right = edges[m + 2];
    for (int k = 0; k < bins; ++k) {
      const double f = static_cast<double>(k) * sample_rate / c.fft_size;
      if (f > left && f < center)
        filters[m][k] = (f - left) / (center - left);
      else if (f >= center && f < right)
        filters[m][k] = (right - f) / (right - center);
    }
  }
  return filters;
}

}  // namespace

int FrontendConfig::frame_length(int sample_rate) const {
  return static_cast<int>(std::lrint(frame_length_ms * sample_rate / 1000.0));
}

int FrontendConfig::frame_shift(int sample_rate) const {
  return static_cast<int>(std::lrint(frame_shift_ms * sample_rate / 1000.0));
}

void FrontendConfig::validate(int sample_rate) const {
  if (sample_rate < 8000)
    throw Error(ErrorKind::kUsage, str_cat("sample rate ", sample_rate, " below 8000 Hz"));
  if (pre_emphasis < 0.0 || pre_emphasis >= 1.0)
    throw Error(ErrorKind::kUsage, "pre_emphasis must be in [0, 1)");
  if (frame_shift_ms <= 0.0 || frame_shift_ms > frame_length_ms)
    throw Error(ErrorKind::kUsage, "frame_shift_ms must be in (0, frame_length_ms]");
  if (!is_power_of_two(fft_size) || fft_size < frame_length(sample_rate))
    throw Error(ErrorKind::kUsage,
                str_cat("fft_size must be a power of two >= frame length (",
                        frame_length(sample_rate), " samples)"));
  if (num_cepstra < 1 || num_cepstra >= num_filters)
    throw Error(ErrorKind::kUsage, "num_cepstra must be in [1, num_filters)");
  if (!(low_freq >= 0.0) || !(low_freq < high_freq) || high_freq > sample_rate / 2.0)
    throw Error(ErrorKind::kUsage, "need 0 <= low_freq < high_freq <= sample_rate/2");
}

FeatureMatrix compute_mfcc(const AudioBuffer& audio, const FrontendConfig& config) {
  config.validate(audio.sample_rate);
  const int n = static_cast<int>(audio.samples.size());
  const int flen = config.frame_length(audio.sample_rate);
  const int fshift = config.frame_shift(audio.sample_rate);
  if (n < flen)
    throw Error(ErrorKind::kData,
                str_cat("audio shorter than one frame: ", n, " < ", flen, " samples"));
  const int num_frames = 1 + (n - flen) / fshift;

  // Pre-emphasis over the whole signal, x[-1] taken as x[0].
  std::vector<double> emphasized(n);
  emphasized[0] = audio.samples[0] - config.pre_emphasis * audio.samples[0];
  for (int i = 1; i < n; ++i)
    emphasized[i] = audio.samples[i] - config.pre_emphasis * audio.samples[i - 1];

  std::vector<double> window(flen);
  for (int i = 0; i < flen; ++i)
    window[i] = 0.54 - 0.46 * std::cos(2.0 * kPi * i / (flen - 1));

  const auto filters = mel_filterbank(config, audio.sample_rate);
  const int bins = config.fft_size / 2 + 1;
  const int M = config.num_filters;
  const double dct_scale = std::sqrt(2.0 / M);

  FeatureMatrix out(num_frames, config.num_cepstra + 1);
  std::vector<double> re(config.fft_size), im(config.fft_size);
  std::vector<double> logmel(M);

  for (int t = 0; t < num_frames; ++t) {
    const int start = t * fshift;

    double power = 0.0;
    for (int i = 0; i < flen; ++i) {
      const double s = audio.samples[start + i];
      power += s * s;
    }
    out.at(t, 0) = std::max(std::log(power), config.log_floor);

    std::fill(re.begin(), re.end(), 0.0);
    std::fill(im.begin(), im.end(), 0.0);
    for (int i = 0; i < flen; ++i) re[i] = emphasized[start + i] * window[i];
    fft(re, im);

    for (int m = 0; m < M; ++m) {
      double acc = 0.0;
      const std::vector<double>& w = filters[m];
      for (int k = 0; k < bins; ++k) {
        if (w[k] == 0.0) continue;
        acc += w[k] * std::sqrt(re[k] * re[k] + im[k] * im[k]);
      }
      logmel[m] = std::max(std::log(acc), config.log_floor);
    }

    for (int i = 1; i <= config.num_cepstra; ++i) {
      double acc = 0.0;
      for (int m = 0; m < M; ++m) acc += logmel[m] * std::cos(kPi * i * (m + 0.5) / M);
      out.at(t, i) = dct_scale * acc;
    }
  }
  return out;
}

FeatureMatrix append_deltas(const FeatureMatrix& features) {
  const int T = features.rows();
  const int D = features.cols();
  if (T < 1) throw Error(ErrorKind::kData, "append_deltas: empty feature matrix");
  constexpr int kHalfWidth = 2;
  constexpr double kDenom = 2.0 * (1 * 1 + 2 * 2);  // 2 * sum w^2

  FeatureMatrix out(T, 3 * D);
  auto clamp_t = [T](int t) { return t < 0 ? 0 : (t >= T ? T - 1 : t); };

  for (int t = 0; t < T; ++t)
    for (int d = 0; d < D; ++d) out.at(t, d) = features.at(t, d);
  for (int t = 0; t < T; ++t) {
    for (int d = 0; d < D; ++d) {
      double num = 0.0;
      for (int w = 1; w <= kHalfWidth; ++w)
        num += w * (features.at(clamp_t(t + w), d) - features.at(clamp_t(t - w), d));
      out.at(t, D + d) = num / kDenom;
    }
  }
  for (int t = 0; t < T; ++t) {
    for (int d = 0; d < D; ++d) {
      double num = 0.0;
      for (int w = 1; w <= kHalfWidth; ++w)
        num += w * (out.at(clamp_t(t + w), D + d) - out.at(clamp_t(t - w), D + d));
      out.at(t, 2 * D + d) = num / kDenom;
    }
  }
  return out;
}

FeatureMatrix cmvn(const FeatureMatrix& features) {
  const int T = features.rows();
  const int D = features.cols();
  if (T < 2) throw Error(ErrorKind::kData, "cmvn needs at least 2 frames");

  FeatureMatrix out(T, D);
  for (int d = 0; d < D; ++d) {
    double mean = 0.0;
    for (int t = 0; t < T; ++t) mean += features.at(t, d);
    mean /= T;
    double var = 0.0;
    for (int t = 0; t < T; ++t) {
      const double c = features.at(t, d) - mean;
      var += c * c;
    }
    var /= T;
    if (var < 1e-12) {
      for (int t = 0; t < T; ++t) out.at(t, d) = features.at(t, d) - mean;
    } else {
      const double inv_std = 1.0 / std::sqrt(var);
      for (int t = 0; t < T; ++t) out.at(t, d) = (features.at(t, d) - mean) * inv_std;
    }
  }
  return out;
}

FeatureMatrix extract_features(const AudioBuffer& audio, const FrontendConfig& config) {
  return cmvn(append_deltas(compute_mfcc(audio, config)));
}

}  // namespace sawt
