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
#include <span>
#include <string_view>
#include <vector>

namespace gspmm {

// Element-wise binary operator applied to a pair of operand feature
// vectors. Dot collapses to a single element; CopyLhs ignores the rhs
// entirely (the unary copy case).
enum class BinaryOp : std::uint8_t { Add, Sub, Mul, Div, Dot, CopyLhs };

// Element-wise reduction combining messages into an output row.
// CopyLast overwrites; ties are settled by the canonical row order of the
// destination (see kernels).
enum class ReduceOp : std::uint8_t { Sum, Max, Min, Prod, CopyLast };

const char* to_string(BinaryOp op);
const char* to_string(ReduceOp op);

// Identity element: Sum 0, Prod 1, Max -inf, Min +inf, CopyLast 0.
float reduce_identity(ReduceOp op);

// True when two operand widths are element-wise compatible: equal, or one
// of them is 1 (the width-1 operand broadcasts).
bool dims_broadcastable(std::int64_t dl, std::int64_t dr);

// Width of the binary result: 1 for Dot, max(dl, dr) otherwise.
std::int64_t binary_out_dim(BinaryOp op, std::int64_t dl, std::int64_t dr);

// Element-wise binary op with broadcasting. Throws ShapeError on
// incompatible widths. Division follows IEEE semantics (inf/NaN propagate).
std::vector<float> apply_binary(BinaryOp op, std::span<const float> lhs,
                                std::span<const float> rhs);

// Unary form; op must be CopyLhs.
std::vector<float> apply_binary(BinaryOp op, std::span<const float> lhs);

// Element-wise reduce of val into acc (equal widths required).
std::vector<float> reduce_into(ReduceOp op, std::span<const float> acc,
                               std::span<const float> val);

std::vector<float> identity_row(ReduceOp op, std::int64_t dim);

}  // namespace gspmm
