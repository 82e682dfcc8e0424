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

#include "gspmm/br_config.hpp"
#include "gspmm/edge_list.hpp"
#include "gspmm/feature_matrix.hpp"

namespace gspmm {

// Serial, unoptimized reference aggregation evaluated straight off the
// edge list, in edge-id order, with no CSR machinery shared with the
// kernels. Ground truth for the property and acceptance suites.
//
// Sum accumulates in float64 (rounded to float32 at the end) so it is a
// strictly more precise reference; messages themselves are computed in
// float32 so exact-match operators compare bitwise. CopyLast into a node
// keeps the canonically latest edge (highest (neighbor, edge-id) key in
// the destination row order), matching the kernels' tie-break.
//
// Single-threaded; refuses graphs with more than 10^6 edges.
FeatureMatrix oracle_aggregate(const EdgeList& edges, const BrConfig& cfg,
                               const FeatureMatrix* u_feats,
                               const FeatureMatrix* v_feats,
                               const FeatureMatrix* e_feats);

}  // namespace gspmm
