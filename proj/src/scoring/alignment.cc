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

#include "scoring/alignment.h"

#include <algorithm>

namespace sawt {

namespace {
// Cell cost: (edits, -matches), compared lexicographically.
struct Cell {
  int edits;
  int neg_matches;
  unsigned char op;  // 0 match, 1 sub, 2 del, 3 ins; 255 unset

  bool better_than(const Cell& other) const {
    if (edits != other.edits) return edits < other.edits;
    return neg_matches < other.neg_matches;
  }
};
}  // namespace

AlignmentResult align(const std::vector<std::string>& ref,
                      const std::vector<std::string>& hyp) {
  const int n = static_cast<int>(ref.size());
  const int m = static_cast<int>(hyp.size());
  std::vector<Cell> dp(static_cast<size_t>(n + 1) * (m + 1));
  auto cell = [&](int i, int j) -> Cell& { return dp[static_cast<size_t>(i) * (m + 1) + j]; };

  cell(0, 0) = {0, 0, 255};
  for (int i = 1; i <= n; ++i) cell(i, 0) = {i, 0, 2};
  for (int j = 1; j <= m; ++j) cell(0, j) = {j, 0, 3};

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      const bool eq = ref[i - 1] == hyp[j - 1];
      const Cell& diag = cell(i - 1, j - 1);
      Cell best{diag.edits + (eq ? 0 : 1), diag.neg_matches - (eq ? 1 : 0),
                static_cast<unsigned char>(eq ? 0 : 1)};
      const Cell& up = cell(i - 1, j);
      Cell del{up.edits + 1, up.neg_matches, 2};
      if (del.better_than(best)) best = del;
      const Cell& left = cell(i, j - 1);
      Cell ins{left.edits + 1, left.neg_matches, 3};
      if (ins.better_than(best)) best = ins;
      cell(i, j) = best;
    }
  }

  AlignmentResult result;
  result.n_ref = n;
  int i = n, j = m;
  while (i > 0 || j > 0) {
    switch (cell(i, j).op) {
      case 0:
        result.pairs.push_back({AlignOp::kMatch, ref[i - 1], hyp[j - 1]});
        ++result.matches;
        --i;
        --j;
        break;
      case 1:
        result.pairs.push_back({AlignOp::kSub, ref[i - 1], hyp[j - 1]});
        ++result.substitutions;
        --i;
        --j;
        break;
      case 2:
        result.pairs.push_back({AlignOp::kDel, ref[i - 1], ""});
        ++result.deletions;
        --i;
        break;
      default:
        result.pairs.push_back({AlignOp::kIns, "", hyp[j - 1]});
        ++result.insertions;
        --j;
        break;
    }
  }
  std::reverse(result.pairs.begin(), result.pairs.end());
  return result;
}

}  // namespace sawt
