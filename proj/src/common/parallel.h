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

#ifndef SAWT_COMMON_PARALLEL_H_
#define SAWT_COMMON_PARALLEL_H_

#include <functional>

namespace sawt {

// Runs fn(0) .. fn(n-1) on up to num_threads workers. Callers write results
// into per-index slots and reduce in index order afterwards, so the outcome
// does not depend on scheduling. The first exception thrown by any worker is
// rethrown after all workers have stopped.
void parallel_for(int n, int num_threads, const std::function<void(int)>& fn);

}  // namespace sawt

#endif  // SAWT_COMMON_PARALLEL_H_
