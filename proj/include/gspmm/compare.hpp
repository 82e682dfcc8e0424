/*
 * Copyright (c) gspmm contributors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "gspmm/feature_matrix.hpp"
#include "gspmm/ops.hpp"

namespace gspmm {

// Max per-element relative error with a unit floor: |a-b| / max(|b|, 1).
// The floor keeps near-cancelled sums from blowing up the ratio; feature
// values are O(1), so below 1 this is simply an absolute error.
inline double max_rel_error(const FeatureMatrix& got,
                            const FeatureMatrix& want) {
  if (got.rows != want.rows || got.dim != want.dim)
    return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < got.data.size(); ++i) {
    const double g = got.data[i];
    const double w = want.data[i];
    if (std::isnan(g) != std::isnan(w))
      return std::numeric_limits<double>::infinity();
    if (std::isnan(g)) continue;
    const double err = std::abs(g - w) / std::max(std::abs(w), 1.0);
    worst = std::max(worst, err);
  }
  return worst;
}

inline bool bit_equal(const FeatureMatrix& a, const FeatureMatrix& b) {
  if (a.rows != b.rows || a.dim != b.dim) return false;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    if (std::isnan(a.data[i]) && std::isnan(b.data[i])) continue;
    if (a.data[i] != b.data[i]) return false;
  }
  return true;
}

// Reduce ops whose results must match the reference exactly (no
// reassociation can change them).
inline bool is_exact_reduce(ReduceOp op) {
  return op == ReduceOp::Max || op == ReduceOp::Min ||
         op == ReduceOp::CopyLast;
}

}  // namespace gspmm
