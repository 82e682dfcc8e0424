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
#include <memory>
#include <mutex>
#include <vector>

#include "gspmm/csr.hpp"

namespace gspmm {

// Precomputed blocked, source-sorted edge traversal schedule.
//
// The gathered (column) dimension is cut into windows of kb nodes. Each
// block covers exactly the edges whose gathered endpoint lies in its
// window, stored as (src, dst, eid) triples sorted by src ascending with
// (dst, eid) tie-break — i.e. a stable radix sort by source of the
// row-major nonzero order. Built once per graph and shared read-only; nb
// is the output column panel width used when executing the plan.
//
// Built from a DstMajor graph, src is the edge's source node and dst the
// owning destination row (the standard pull schedule). Built from a
// SrcMajor graph the roles mirror, which serves source-destined outputs.
struct BlockPlan {
  NodeId kb = 0;
  std::int64_t nb = 0;
  Orientation built_for = Orientation::DstMajor;
  NodeId num_rows = 0;  // owner rows (matches the source graph's rows)
  NodeId num_cols = 0;
  NodeId num_blocks = 0;

  std::vector<NodeId> src;   // gathered endpoint, sorted within block
  std::vector<NodeId> dst;   // owner row
  std::vector<EdgeId> eid;
  std::vector<std::uint64_t> block_off;  // num_blocks + 1

  EdgeId num_edges() const { return static_cast<EdgeId>(src.size()); }

  // Execution layout for a given worker count: triples regrouped
  // thread-major so worker t sweeps its owned rows block by block with no
  // scan-and-skip. Row ownership is contiguous ranges balanced by edge
  // count. Cached per thread count; cheap to rebuild, free to reuse.
  struct ThreadView {
    int threads = 1;
    std::vector<NodeId> src, dst;
    std::vector<EdgeId> eid;
    // offset of (thread t, block b) at t*num_blocks + b; length
    // threads*num_blocks + 1
    std::vector<std::uint64_t> off;
  };

  std::shared_ptr<const ThreadView> view(int threads) const;

 private:
  struct ViewCache {
    std::mutex mu;
    std::vector<std::shared_ptr<const ThreadView>> entries;
  };
  std::shared_ptr<ViewCache> cache_ = std::make_shared<ViewCache>();
};

// Builds the schedule for g (either orientation; DstMajor is the pull
// schedule). kb and nb must be >= 1; see default_kb/default_nb for the
// cache-derived defaults.
BlockPlan build_block_plan(const CsrGraph& g, NodeId kb, std::int64_t nb);

// kb sized so one block of feature rows is about 256 KiB (half a typical
// per-core L2).
NodeId default_kb(std::int64_t dim, NodeId num_gathered_nodes);

// nb sized so the output panel fits in half the last-level cache,
// floor 8, capped at dim.
std::int64_t default_nb(NodeId num_out_rows, std::int64_t dim);

}  // namespace gspmm
