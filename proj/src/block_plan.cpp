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
#include "gspmm/block_plan.hpp"

#include <algorithm>
#include <unistd.h>

#include "gspmm/error.hpp"

namespace gspmm {

BlockPlan build_block_plan(const CsrGraph& g, NodeId kb, std::int64_t nb) {
  if (kb < 1 || nb < 1) throw ConfigError("block plan requires kb, nb >= 1");

  BlockPlan plan;
  plan.kb = kb;
  plan.nb = nb;
  plan.built_for = g.orientation;
  plan.num_rows = g.num_rows;
  plan.num_cols = g.num_cols;
  plan.num_blocks =
      g.num_cols == 0 ? 0 : static_cast<NodeId>((g.num_cols + kb - 1) / kb);

  const std::size_t m = g.indices.size();
  plan.src.resize(m);
  plan.dst.resize(m);
  plan.eid.resize(m);

  // Stable counting sort of the row-major nonzeros by source. Blocks are
  // contiguous source ranges, so block boundaries fall out of the source
  // offsets directly.
  std::vector<std::uint64_t> src_off(static_cast<std::size_t>(g.num_cols) + 1,
                                     0);
  for (NodeId c : g.indices) src_off[c + 1]++;
  for (std::size_t c = 0; c < g.num_cols; ++c) src_off[c + 1] += src_off[c];

  std::vector<std::uint64_t> cursor(src_off.begin(), src_off.end() - 1);
  for (NodeId r = 0; r < g.num_rows; ++r) {
    for (EdgeId j = g.indptr[r]; j < g.indptr[r + 1]; ++j) {
      const NodeId s = g.indices[j];
      const std::uint64_t pos = cursor[s]++;
      plan.src[pos] = s;
      plan.dst[pos] = r;
      plan.eid[pos] = g.edge_ids[j];
    }
  }

  plan.block_off.assign(static_cast<std::size_t>(plan.num_blocks) + 1, 0);
  for (NodeId b = 0; b <= plan.num_blocks && plan.num_blocks > 0; ++b) {
    const std::uint64_t first_src =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(b) * kb,
                                g.num_cols);
    plan.block_off[b] = src_off[first_src];
  }
  return plan;
}

std::shared_ptr<const BlockPlan::ThreadView> BlockPlan::view(
    int threads) const {
  if (threads < 1) threads = 1;
  std::lock_guard<std::mutex> lock(cache_->mu);
  for (const auto& v : cache_->entries)
    if (v->threads == threads) return v;

  auto tv = std::make_shared<ThreadView>();
  tv->threads = threads;
  const std::size_t m = src.size();
  const std::size_t nblocks = num_blocks;

  // Contiguous owner-row ranges balanced by edge count.
  std::vector<std::uint64_t> row_edges(static_cast<std::size_t>(num_rows) + 1,
                                       0);
  for (NodeId d : dst) row_edges[d + 1]++;
  for (std::size_t r = 0; r < num_rows; ++r) row_edges[r + 1] += row_edges[r];

  std::vector<NodeId> range(static_cast<std::size_t>(threads) + 1, num_rows);
  range[0] = 0;
  for (int t = 1; t < threads; ++t) {
    const std::uint64_t target =
        (static_cast<std::uint64_t>(m) * t) / threads;
    const auto it = std::lower_bound(row_edges.begin(), row_edges.end(),
                                     target);
    NodeId r = static_cast<NodeId>(it - row_edges.begin());
    r = std::max(range[t - 1], std::min<NodeId>(r, num_rows));
    range[t] = r;
  }

  std::vector<int> owner(num_rows, 0);
  for (int t = 0; t < threads; ++t)
    for (NodeId r = range[t]; r < range[t + 1]; ++r) owner[r] = t;

  tv->src.resize(m);
  tv->dst.resize(m);
  tv->eid.resize(m);
  tv->off.assign(static_cast<std::size_t>(threads) * nblocks + 1, 0);

  for (std::size_t b = 0; b < nblocks; ++b) {
    for (std::uint64_t k = block_off[b]; k < block_off[b + 1]; ++k)
      tv->off[static_cast<std::size_t>(owner[dst[k]]) * nblocks + b + 1]++;
  }
  for (std::size_t i = 1; i < tv->off.size(); ++i) tv->off[i] += tv->off[i - 1];

  std::vector<std::uint64_t> put(tv->off.begin(), tv->off.end() - 1);
  for (std::size_t b = 0; b < nblocks; ++b) {
    for (std::uint64_t k = block_off[b]; k < block_off[b + 1]; ++k) {
      const std::size_t slot =
          static_cast<std::size_t>(owner[dst[k]]) * nblocks + b;
      const std::uint64_t pos = put[slot]++;
      tv->src[pos] = src[k];
      tv->dst[pos] = dst[k];
      tv->eid[pos] = eid[k];
    }
  }

  cache_->entries.push_back(tv);
  return tv;
}

NodeId default_kb(std::int64_t dim, NodeId num_gathered_nodes) {
  const std::int64_t bytes_per_row = std::max<std::int64_t>(dim, 1) * 4;
  const std::int64_t kb = (256 * 1024) / bytes_per_row;
  const NodeId hi = std::max<NodeId>(num_gathered_nodes, 1);
  return static_cast<NodeId>(std::clamp<std::int64_t>(kb, 1, hi));
}

std::int64_t default_nb(NodeId num_out_rows, std::int64_t dim) {
  std::int64_t llc = 0;
#ifdef _SC_LEVEL3_CACHE_SIZE
  llc = sysconf(_SC_LEVEL3_CACHE_SIZE);
#endif
  if (llc <= 0) llc = 32ll * 1024 * 1024;
  const std::int64_t rows = std::max<std::int64_t>(num_out_rows, 1);
  const std::int64_t nb = (llc / 2) / (rows * 4);
  return std::clamp<std::int64_t>(nb, std::min<std::int64_t>(8, dim),
                                  std::max<std::int64_t>(dim, 1));
}

}  // namespace gspmm
