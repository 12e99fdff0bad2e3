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

#include "am/gmm.h"

#include <cmath>

#include "common/error.h"
#include "common/logmath.h"

namespace sawt {

namespace {
constexpr double kLog2Pi = 1.83787706640934548356;
}

void Gmm::add_component(double weight, std::vector<double> mean, std::vector<double> var) {
  if (static_cast<int>(mean.size()) != dim_ || static_cast<int>(var.size()) != dim_)
    throw Error(ErrorKind::kUsage, "Gmm::add_component: dimension mismatch");
  weights_.push_back(weight);
  log_weights_.push_back(0.0);
  means_.push_back(std::move(mean));
  vars_.push_back(std::move(var));
  inv_vars_.emplace_back(dim_, 0.0);
  gconsts_.push_back(0.0);
  refresh(num_components() - 1);
}

void Gmm::set_component(int k, double weight, std::vector<double> mean, std::vector<double> var) {
  if (static_cast<int>(mean.size()) != dim_ || static_cast<int>(var.size()) != dim_)
    throw Error(ErrorKind::kUsage, "Gmm::set_component: dimension mismatch");
  weights_[k] = weight;
  means_[k] = std::move(mean);
  vars_[k] = std::move(var);
  refresh(k);
}

void Gmm::set_weight(int k, double weight) {
  weights_[k] = weight;
  log_weights_[k] = weight > 0.0 ? std::log(weight) : kLogZero;
}

void Gmm::refresh(int k) {
  log_weights_[k] = weights_[k] > 0.0 ? std::log(weights_[k]) : kLogZero;
  double gconst = 0.0;
  for (int d = 0; d < dim_; ++d) {
    if (!(vars_[k][d] > 0.0))
      throw Error(ErrorKind::kNumeric, "non-positive variance in Gaussian component");
    inv_vars_[k][d] = 1.0 / vars_[k][d];
    gconst += kLog2Pi + std::log(vars_[k][d]);
  }
  gconsts_[k] = -0.5 * gconst;
}

double Gmm::component_log_density(int k, const double* frame) const {
  double acc = 0.0;
  const std::vector<double>& mean = means_[k];
  const std::vector<double>& inv_var = inv_vars_[k];
  for (int d = 0; d < dim_; ++d) {
    const double diff = frame[d] - mean[d];
    acc += diff * diff * inv_var[d];
  }
  return log_weights_[k] + gconsts_[k] - 0.5 * acc;
}

double Gmm::log_density(const double* frame, int dim) const {
  if (dim != dim_)
    throw Error(ErrorKind::kUsage,
                str_cat("Gmm::log_density: frame has ", dim, " dims, model has ", dim_));
  if (num_components() == 0) throw Error(ErrorKind::kUsage, "empty Gmm");
  double total = kLogZero;
  for (int k = 0; k < num_components(); ++k)
    total = log_add(total, component_log_density(k, frame));
  return total;
}

}  // namespace sawt
