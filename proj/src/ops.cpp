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
#include "gspmm/ops.hpp"

#include <algorithm>
#include <limits>

#include "gspmm/error.hpp"

namespace gspmm {

const char* to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "add";
    case BinaryOp::Sub: return "sub";
    case BinaryOp::Mul: return "mul";
    case BinaryOp::Div: return "div";
    case BinaryOp::Dot: return "dot";
    case BinaryOp::CopyLhs: return "copy";
  }
  return "?";
}

const char* to_string(ReduceOp op) {
  switch (op) {
    case ReduceOp::Sum: return "add";
    case ReduceOp::Max: return "max";
    case ReduceOp::Min: return "min";
    case ReduceOp::Prod: return "mul";
    case ReduceOp::CopyLast: return "copy";
  }
  return "?";
}

float reduce_identity(ReduceOp op) {
  switch (op) {
    case ReduceOp::Sum: return 0.0f;
    case ReduceOp::Max: return -std::numeric_limits<float>::infinity();
    case ReduceOp::Min: return std::numeric_limits<float>::infinity();
    case ReduceOp::Prod: return 1.0f;
    case ReduceOp::CopyLast: return 0.0f;
  }
  return 0.0f;
}

bool dims_broadcastable(std::int64_t dl, std::int64_t dr) {
  return dl == dr || dl == 1 || dr == 1;
}

std::int64_t binary_out_dim(BinaryOp op, std::int64_t dl, std::int64_t dr) {
  if (op == BinaryOp::Dot) return 1;
  if (op == BinaryOp::CopyLhs) return dl;
  return std::max(dl, dr);
}

std::vector<float> apply_binary(BinaryOp op, std::span<const float> lhs,
                                std::span<const float> rhs) {
  if (op == BinaryOp::CopyLhs) return {lhs.begin(), lhs.end()};
  const std::int64_t dl = static_cast<std::int64_t>(lhs.size());
  const std::int64_t dr = static_cast<std::int64_t>(rhs.size());
  if (!dims_broadcastable(dl, dr))
    throw ShapeError("apply_binary: incompatible operand widths");
  const std::int64_t w = std::max(dl, dr);
  const std::int64_t ls = dl == 1 ? 0 : 1;
  const std::int64_t rs = dr == 1 ? 0 : 1;
  if (op == BinaryOp::Dot) {
    float acc = 0.0f;
    for (std::int64_t i = 0; i < w; ++i) acc += lhs[i * ls] * rhs[i * rs];
    return {acc};
  }
  std::vector<float> out(static_cast<std::size_t>(w));
  for (std::int64_t i = 0; i < w; ++i) {
    const float l = lhs[i * ls];
    const float r = rhs[i * rs];
    switch (op) {
      case BinaryOp::Add: out[i] = l + r; break;
      case BinaryOp::Sub: out[i] = l - r; break;
      case BinaryOp::Mul: out[i] = l * r; break;
      case BinaryOp::Div: out[i] = l / r; break;
      default: break;
    }
  }
  return out;
}

std::vector<float> apply_binary(BinaryOp op, std::span<const float> lhs) {
  if (op != BinaryOp::CopyLhs)
    throw ShapeError("apply_binary: rhs required for binary operators");
  return {lhs.begin(), lhs.end()};
}

std::vector<float> reduce_into(ReduceOp op, std::span<const float> acc,
                               std::span<const float> val) {
  if (acc.size() != val.size())
    throw ShapeError("reduce_into: width mismatch");
  std::vector<float> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const float a = acc[i];
    const float m = val[i];
    switch (op) {
      case ReduceOp::Sum: out[i] = a + m; break;
      case ReduceOp::Max: out[i] = a < m ? m : a; break;
      case ReduceOp::Min: out[i] = m < a ? m : a; break;
      case ReduceOp::Prod: out[i] = a * m; break;
      case ReduceOp::CopyLast: out[i] = m; break;
    }
  }
  return out;
}

std::vector<float> identity_row(ReduceOp op, std::int64_t dim) {
  return std::vector<float>(static_cast<std::size_t>(dim),
                            reduce_identity(op));
}

}  // namespace gspmm
