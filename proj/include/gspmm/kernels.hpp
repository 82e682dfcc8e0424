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

#include <string_view>

#include "gspmm/block_plan.hpp"
#include "gspmm/br_config.hpp"
#include "gspmm/csr.hpp"
#include "gspmm/feature_matrix.hpp"

namespace gspmm {

// How an aggregation is executed.
//
//   Push            parallel over the scattering side; every write to an
//                   output row is serialized through a striped per-row
//                   lock table (the baseline whose contention the other
//                   strategies remove)
//   Pull            parallel over output rows, owner-computes; each
//                   message is copied to a scratch buffer, then reduced
//   BlockedPull     pull executed through a BlockPlan: common K-block
//                   sweep, source-sorted gathers, nb-wide output panels
//   RowParallelSpmm plain row-parallel loop with the binary op and
//                   reduction fused, no blocking or sorting — the
//                   full-graph SpMM path
enum class Strategy : std::uint8_t { Push, Pull, BlockedPull, RowParallelSpmm };

const char* to_string(Strategy s);
Strategy parse_strategy(std::string_view name);  // push|pull|blocked|spmm

// The CSR orientation a strategy needs for a given output target. The
// owner-computes strategies traverse output rows; Push traverses the
// opposite side and scatters.
Orientation required_orientation(Strategy s, Operand out);

// General binary-reduce. For each edge (u -> v, e) computes
// binary(feat(lhs), feat(rhs)) and reduces it into the output entity.
// Operand matrices may be null when the config does not reference them.
// Requirements:
//   - g.orientation == required_orientation(strategy, cfg.out)
//   - strategy == BlockedPull implies plan built from this g
//   - operand row counts match their entity counts; widths broadcastable
// threads <= 0 selects the OpenMP default. Internally parallel,
// externally synchronous. Zero-degree output rows read as zero for
// Max/Min, as the reduce identity otherwise.
FeatureMatrix binary_reduce(Strategy strategy, const CsrGraph& g,
                            const BrConfig& cfg, const FeatureMatrix* u_feats,
                            const FeatureMatrix* v_feats,
                            const FeatureMatrix* e_feats,
                            const BlockPlan* plan = nullptr, int threads = 0);

// Copy-reduce: reduce copies of the source-entity features into
// destination nodes. The source entity is node features when
// src_feats.rows matches the source-node count, edge features when it
// matches the edge count (node wins the ambiguous square case; use
// binary_reduce with an explicit config to force it).
FeatureMatrix copy_reduce(Strategy strategy, const CsrGraph& g,
                          const FeatureMatrix& src_feats, ReduceOp reduce,
                          const BlockPlan* plan = nullptr, int threads = 0);

}  // namespace gspmm
