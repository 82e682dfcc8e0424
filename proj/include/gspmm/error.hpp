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

#include <stdexcept>

namespace gspmm {

// Malformed graph input (out-of-range ids, broken CSR arrays).
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible matrix shapes or operand/row-count mismatches.
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid aggregation descriptor (bad name, violated operand rules).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text input that does not parse.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File I/O failure or corrupt binary container.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gspmm
