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

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "gspmm/error.hpp"

namespace gspmm {

// Dense row-major float32 matrix of feature vectors, one row per node or
// edge. Concurrent reads are safe; writers need exclusive access to their
// row range.
struct FeatureMatrix {
  std::int64_t rows = 0;
  std::int64_t dim = 0;
  std::vector<float> data;  // rows * dim, row i at data[i*dim .. (i+1)*dim)

  FeatureMatrix() = default;
  FeatureMatrix(std::int64_t r, std::int64_t d)
      : rows(r), dim(d), data(static_cast<std::size_t>(r * d), 0.0f) {}

  float* row(std::int64_t i) { return data.data() + i * dim; }
  const float* row(std::int64_t i) const { return data.data() + i * dim; }

  float& at(std::int64_t i, std::int64_t j) { return data[i * dim + j]; }
  float at(std::int64_t i, std::int64_t j) const { return data[i * dim + j]; }

  // Builds a matrix from nested braces, e.g. {{1,2},{3,4}}.
  static FeatureMatrix from_rows(
      std::initializer_list<std::initializer_list<float>> rows_init) {
    FeatureMatrix f;
    f.rows = static_cast<std::int64_t>(rows_init.size());
    f.dim = f.rows == 0
                ? 0
                : static_cast<std::int64_t>(rows_init.begin()->size());
    f.data.reserve(static_cast<std::size_t>(f.rows * f.dim));
    for (const auto& r : rows_init) {
      if (static_cast<std::int64_t>(r.size()) != f.dim)
        throw ShapeError("from_rows: ragged rows");
      f.data.insert(f.data.end(), r.begin(), r.end());
    }
    return f;
  }

  static FeatureMatrix constant(std::int64_t r, std::int64_t d, float value) {
    FeatureMatrix f(r, d);
    for (float& x : f.data) x = value;
    return f;
  }
};

}  // namespace gspmm
