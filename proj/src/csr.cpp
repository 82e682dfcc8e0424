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
#include "gspmm/csr.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>

#include "gspmm/error.hpp"

namespace gspmm {

namespace {

// Assembles canonical CSR from per-edge (row, col) keys via two stable
// counting sorts: first by column, then by row. Within a row this leaves
// columns ascending with ties in original (edge id) order.
CsrGraph from_keys(Orientation orientation, NodeId num_rows, NodeId num_cols,
                   const std::vector<NodeId>& row_of,
                   const std::vector<NodeId>& col_of,
                   const std::vector<EdgeId>& eid_of) {
  const std::size_t m = row_of.size();

  std::vector<std::size_t> by_col(m);
  {
    std::vector<std::size_t> cnt(static_cast<std::size_t>(num_cols) + 1, 0);
    for (std::size_t i = 0; i < m; ++i) cnt[col_of[i]]++;
    std::size_t run = 0;
    for (std::size_t c = 0; c <= num_cols; ++c) {
      const std::size_t n = cnt[c];
      cnt[c] = run;
      run += n;
    }
    for (std::size_t i = 0; i < m; ++i) by_col[cnt[col_of[i]]++] = i;
  }

  CsrGraph g;
  g.orientation = orientation;
  g.num_rows = num_rows;
  g.num_cols = num_cols;
  g.indptr.assign(static_cast<std::size_t>(num_rows) + 1, 0);
  g.indices.resize(m);
  g.edge_ids.resize(m);

  std::vector<std::size_t> row_start(static_cast<std::size_t>(num_rows), 0);
  for (std::size_t i = 0; i < m; ++i) g.indptr[row_of[i] + 1]++;
  for (std::size_t r = 0; r < num_rows; ++r) {
    g.indptr[r + 1] += g.indptr[r];
    row_start[r] = g.indptr[r];
  }
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t i = by_col[k];
    const std::size_t pos = row_start[row_of[i]]++;
    g.indices[pos] = col_of[i];
    g.edge_ids[pos] = eid_of[i];
  }
  return g;
}

}  // namespace

CsrGraph build_csr(const EdgeList& edges, Orientation orientation) {
  const std::size_t m = edges.edges.size();
  std::vector<NodeId> row_of(m), col_of(m);
  std::vector<EdgeId> eid_of(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = edges.edges[i];
    if (e.src >= edges.num_nodes || e.dst >= edges.num_nodes) {
      std::ostringstream os;
      os << "edge " << i << " references node id " << std::max(e.src, e.dst)
         << " >= num_nodes " << edges.num_nodes;
      throw StructureError(os.str());
    }
    row_of[i] = orientation == Orientation::DstMajor ? e.dst : e.src;
    col_of[i] = orientation == Orientation::DstMajor ? e.src : e.dst;
    eid_of[i] = static_cast<EdgeId>(i);
  }
  return from_keys(orientation, edges.num_nodes, edges.num_nodes, row_of,
                   col_of, eid_of);
}

CsrGraph transpose(const CsrGraph& g) {
  const std::size_t m = g.indices.size();
  std::vector<NodeId> row_of(m), col_of(m);
  std::vector<EdgeId> eid_of(m);
  std::size_t k = 0;
  for (NodeId r = 0; r < g.num_rows; ++r) {
    for (EdgeId j = g.indptr[r]; j < g.indptr[r + 1]; ++j, ++k) {
      row_of[k] = g.indices[j];
      col_of[k] = r;
      eid_of[k] = g.edge_ids[j];
    }
  }
  return from_keys(flipped(g.orientation), g.num_cols, g.num_rows, row_of,
                   col_of, eid_of);
}

std::optional<std::string> validate(const CsrGraph& g) {
  std::ostringstream os;
  if (g.indptr.size() != static_cast<std::size_t>(g.num_rows) + 1) {
    os << "indptr length " << g.indptr.size() << " != num_rows+1";
    return os.str();
  }
  if (g.indptr[0] != 0) return std::string("indptr[0] != 0");
  for (NodeId r = 0; r < g.num_rows; ++r) {
    if (g.indptr[r] > g.indptr[r + 1]) {
      os << "indptr not monotone at row " << (r + 1);
      return os.str();
    }
  }
  const std::size_t m = g.indptr[g.num_rows];
  if (g.indices.size() != m || g.edge_ids.size() != m) {
    os << "indices/edge_ids length != indptr[num_rows] = " << m;
    return os.str();
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (g.indices[j] >= g.num_cols) {
      os << "index out of range at nonzero " << j;
      return os.str();
    }
  }
  std::vector<bool> seen(m, false);
  for (std::size_t j = 0; j < m; ++j) {
    if (g.edge_ids[j] >= m || seen[g.edge_ids[j]]) {
      os << "edge_ids not a permutation (at nonzero " << j << ")";
      return os.str();
    }
    seen[g.edge_ids[j]] = true;
  }
  for (NodeId r = 0; r < g.num_rows; ++r) {
    for (EdgeId j = g.indptr[r]; j + 1 < g.indptr[r + 1]; ++j) {
      const bool ordered =
          g.indices[j] < g.indices[j + 1] ||
          (g.indices[j] == g.indices[j + 1] &&
           g.edge_ids[j] < g.edge_ids[j + 1]);
      if (!ordered) {
        os << "row " << r << " not sorted at nonzero " << (j + 1);
        return os.str();
      }
    }
  }
  return std::nullopt;
}

EdgeList to_edge_list(const CsrGraph& g) {
  EdgeList el;
  el.num_nodes = std::max(g.num_rows, g.num_cols);
  el.edges.resize(g.indices.size());
  for (NodeId r = 0; r < g.num_rows; ++r) {
    for (EdgeId j = g.indptr[r]; j < g.indptr[r + 1]; ++j) {
      const NodeId other = g.indices[j];
      Edge e;
      if (g.orientation == Orientation::DstMajor) {
        e.src = other;
        e.dst = r;
      } else {
        e.src = r;
        e.dst = other;
      }
      el.edges[g.edge_ids[j]] = e;
    }
  }
  return el;
}

DegreeStats degree_stats(const CsrGraph& g) {
  if (g.num_rows != g.num_cols) {
    throw ShapeError("degree_stats requires a square graph");
  }
  const NodeId n = g.num_rows;
  std::vector<EdgeId> col_deg(n, 0);
  for (NodeId c : g.indices) col_deg[c]++;

  DegreeStats s;
  if (n == 0) return s;

  EdgeId min_row = g.indptr[1] - g.indptr[0], max_row = min_row;
  EdgeId min_col = col_deg[0], max_col = col_deg[0];
  for (NodeId r = 0; r < n; ++r) {
    const EdgeId dr = g.indptr[r + 1] - g.indptr[r];
    min_row = std::min(min_row, dr);
    max_row = std::max(max_row, dr);
    min_col = std::min(min_col, col_deg[r]);
    max_col = std::max(max_col, col_deg[r]);
    if (dr == 0 && col_deg[r] == 0) s.isolated++;
  }
  const double mean =
      static_cast<double>(g.num_edges()) / static_cast<double>(n);
  const bool rows_in = g.orientation == Orientation::DstMajor;
  s.min_in = rows_in ? min_row : min_col;
  s.max_in = rows_in ? max_row : max_col;
  s.min_out = rows_in ? min_col : min_row;
  s.max_out = rows_in ? max_col : max_row;
  s.mean_in = mean;
  s.mean_out = mean;
  return s;
}

}  // namespace gspmm
