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

#include <optional>
#include <string>
#include <vector>

#include "gspmm/edge_list.hpp"
#include "gspmm/types.hpp"

namespace gspmm {

// Directed graph in CSR form with an edge id stored per nonzero. The edge
// ids tie each adjacency entry back to its EdgeList position, which is how
// edge features are gathered without materializing incidence matrices.
//
// Canonical form, relied on by every kernel:
//   - indptr[0] == 0, monotone, indptr[num_rows] == num_edges
//   - within each row, indices ascending, ties broken by ascending edge id
//   - edge_ids is a permutation of 0..num_edges-1
//
// Immutable after construction; safe to share across threads.
struct CsrGraph {
  Orientation orientation = Orientation::DstMajor;
  NodeId num_rows = 0;
  NodeId num_cols = 0;
  std::vector<EdgeId> indptr;   // length num_rows + 1
  std::vector<NodeId> indices;  // length num_edges
  std::vector<EdgeId> edge_ids; // length num_edges

  EdgeId num_edges() const { return indptr.empty() ? 0 : indptr.back(); }

  // Node counts by role, independent of orientation.
  NodeId num_src_nodes() const {
    return orientation == Orientation::SrcMajor ? num_rows : num_cols;
  }
  NodeId num_dst_nodes() const {
    return orientation == Orientation::SrcMajor ? num_cols : num_rows;
  }
};

struct DegreeStats {
  EdgeId min_in = 0, max_in = 0;
  EdgeId min_out = 0, max_out = 0;
  double mean_in = 0.0, mean_out = 0.0;
  NodeId isolated = 0;  // nodes with neither in- nor out-edges
};

// Builds the canonical CSR for the requested orientation. Edge ids are the
// EdgeList positions. Throws StructureError on out-of-range node ids.
CsrGraph build_csr(const EdgeList& edges, Orientation orientation);

// Flips the orientation. Edge ids are preserved; transpose(transpose(g))
// is structurally identical to g.
CsrGraph transpose(const CsrGraph& g);

// Checks every CsrGraph invariant. Returns std::nullopt when well formed,
// otherwise a message naming the first violated invariant and the
// offending index.
std::optional<std::string> validate(const CsrGraph& g);

// Reconstructs the EdgeList (edges at their original id positions).
EdgeList to_edge_list(const CsrGraph& g);

// Per-direction degree statistics. Requires a square graph.
DegreeStats degree_stats(const CsrGraph& g);

}  // namespace gspmm
