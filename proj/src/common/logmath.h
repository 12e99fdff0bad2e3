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

#ifndef SAWT_COMMON_LOGMATH_H_
#define SAWT_COMMON_LOGMATH_H_

#include <cmath>
#include <limits>
#include <utility>

namespace sawt {

inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();
inline constexpr double kLn10 = 2.30258509299404568402;

// log(exp(a) + exp(b)) without underflow.
inline double log_add(double a, double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

}  // namespace sawt

#endif  // SAWT_COMMON_LOGMATH_H_
