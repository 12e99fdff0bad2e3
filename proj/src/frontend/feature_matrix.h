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

#ifndef SAWT_FRONTEND_FEATURE_MATRIX_H_
#define SAWT_FRONTEND_FEATURE_MATRIX_H_

#include <string>
#include <vector>

namespace sawt {

// Row-major T x D matrix of acoustic features.
//
// FILE FORMAT (binary, little-endian):
//   8 bytes   magic "SAWTFEAT"
//   uint32    format version (1)
//   uint32    T (frames)
//   uint32    D (dimensions)
//   T*D       float64 values, row-major
// The round trip is bit-exact.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0.0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& at(int t, int d) { return data_[static_cast<size_t>(t) * cols_ + d]; }
  double at(int t, int d) const { return data_[static_cast<size_t>(t) * cols_ + d]; }
  double* row(int t) { return data_.data() + static_cast<size_t>(t) * cols_; }
  const double* row(int t) const { return data_.data() + static_cast<size_t>(t) * cols_; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  void save(const std::string& path) const;
  static FeatureMatrix load(const std::string& path);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

}  // namespace sawt

#endif  // SAWT_FRONTEND_FEATURE_MATRIX_H_
