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

#ifndef SAWT_AM_GMM_H_
#define SAWT_AM_GMM_H_

#include <vector>

namespace sawt {

// Diagonal-covariance Gaussian mixture. Weights sum to 1; variances are
// kept strictly positive by the training-side floor.
class Gmm {
 public:
  Gmm() = default;
  explicit Gmm(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int num_components() const { return static_cast<int>(weights_.size()); }

  void add_component(double weight, std::vector<double> mean, std::vector<double> var);
  void set_component(int k, double weight, std::vector<double> mean, std::vector<double> var);
  void set_weight(int k, double weight);

  double weight(int k) const { return weights_[k]; }
  const std::vector<double>& mean(int k) const { return means_[k]; }
  const std::vector<double>& var(int k) const { return vars_[k]; }

  // log sum_k w_k N(frame; mu_k, diag sigma2_k), stable log-sum-exp.
  // Throws Error(kUsage) on dimension mismatch.
  double log_density(const double* frame, int dim) const;
  // log of one weighted component, w_k N_k(frame).
  double component_log_density(int k, const double* frame) const;

 private:
  void refresh(int k);  // recompute cached terms

  int dim_ = 0;
  std::vector<double> weights_;
  std::vector<double> log_weights_;
  std::vector<std::vector<double>> means_;
  std::vector<std::vector<double>> vars_;
  std::vector<std::vector<double>> inv_vars_;
  std::vector<double> gconsts_;  // -0.5 * sum log(2 pi sigma2_d)
};

}  // namespace sawt

#endif  // SAWT_AM_GMM_H_
