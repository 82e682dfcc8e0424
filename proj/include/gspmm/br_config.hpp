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

#include <string>
#include <string_view>
#include <vector>

#include "gspmm/ops.hpp"

namespace gspmm {

// Graph entity an operand or output binds to. U is the edge source node,
// V the destination node, E the edge itself.
enum class Operand : std::uint8_t { U, V, E, None };

const char* to_string(Operand o);

// Aggregation descriptor: out <- reduce over edges of binary(lhs, rhs).
//
// Rules enforced by validate_config:
//   - lhs != rhs when rhs is present
//   - rhs == None exactly when binary == CopyLhs (the copy-reduce case)
//   - out == E implies reduce == CopyLast: each edge receives exactly one
//     message, so any reduction degenerates to storing it
struct BrConfig {
  Operand lhs = Operand::U;
  Operand rhs = Operand::None;
  BinaryOp binary = BinaryOp::CopyLhs;
  ReduceOp reduce = ReduceOp::Sum;
  Operand out = Operand::V;

  friend bool operator==(const BrConfig&, const BrConfig&) = default;
};

// Throws ConfigError if the descriptor violates the rules above.
void validate_config(const BrConfig& cfg);

// Parses names of the form {u,v,e}_<binop>_{u,v,e}_<redop>_{u,v,e} or the
// copy form {u,e}_copy_<redop>_v, e.g. "u_mul_e_add_v", "u_copy_add_v".
// Edge-destined names with an arbitrary reducer ("u_dot_v_add_e") are
// accepted and normalized to CopyLast. Throws ConfigError otherwise.
BrConfig named_config(std::string_view name);

// Canonical name for a descriptor (inverse of named_config up to the
// edge-destined reducer normalization).
std::string config_name(const BrConfig& cfg);

// The aggregation configurations used by the common GNN applications
// (GCN, GraphSAGE, GC-MC, MoNet, GAT, ...). These drive verification and
// the benchmark presets.
const std::vector<std::string>& application_configs();

}  // namespace gspmm
