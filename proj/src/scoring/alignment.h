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

#ifndef SAWT_SCORING_ALIGNMENT_H_
#define SAWT_SCORING_ALIGNMENT_H_

#include <string>
#include <vector>

namespace sawt {

enum class AlignOp { kMatch, kSub, kDel, kIns };

struct AlignedPair {
  AlignOp op;
  std::string ref;  // empty for insertions
  std::string hyp;  // empty for deletions
};

struct AlignmentResult {
  long n_ref = 0;
  long matches = 0;
  long substitutions = 0;
  long deletions = 0;
  long insertions = 0;
  std::vector<AlignedPair> pairs;

  long errors() const { return substitutions + deletions + insertions; }
  bool perfect() const { return errors() == 0; }
};

// Minimum-edit-distance alignment with unit costs. Among minimal
// alignments the one with the most matches wins; remaining ties are broken
// match > substitution > deletion > insertion during traceback, so the
// result is deterministic.
AlignmentResult align(const std::vector<std::string>& ref,
                      const std::vector<std::string>& hyp);

}  // namespace sawt

#endif  // SAWT_SCORING_ALIGNMENT_H_
