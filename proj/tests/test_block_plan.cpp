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
#include <algorithm>
#include <doctest.h>
#include <set>

#include "gspmm/block_plan.hpp"
#include "gspmm/error.hpp"
#include "test_util.hpp"

using namespace gspmm;
using test::make_edge_list;
using test::random_small_graph;

TEST_CASE("block plan triples are radix-sorted by source") {
  const EdgeList el = make_edge_list(3, {{0, 2}, {1, 2}, {0, 1}});
  const CsrGraph g = build_csr(el, Orientation::DstMajor);
  const BlockPlan plan = build_block_plan(g, /*kb=*/2, /*nb=*/8);

  CHECK(plan.num_blocks == 2);  // src windows [0,2) and [2,3)
  // block 0 holds all three edges in (src, dst, eid) order
  CHECK(plan.block_off == std::vector<std::uint64_t>{0, 3, 3});
  CHECK(plan.src == std::vector<NodeId>{0, 0, 1});
  CHECK(plan.dst == std::vector<NodeId>{1, 2, 2});
  CHECK(plan.eid == std::vector<EdgeId>{2, 0, 1});
}

TEST_CASE("kb >= num_nodes degenerates to one block") {
  const EdgeList el = make_edge_list(3, {{0, 2}, {1, 2}, {0, 1}});
  const CsrGraph g = build_csr(el, Orientation::DstMajor);
  const BlockPlan plan = build_block_plan(g, 3, 8);
  CHECK(plan.num_blocks == 1);
  CHECK(plan.block_off == std::vector<std::uint64_t>{0, 3});
  for (std::size_t i = 1; i < plan.src.size(); ++i)
    CHECK(plan.src[i - 1] <= plan.src[i]);
}

TEST_CASE("empty graph gives an empty plan") {
  const CsrGraph g = build_csr(make_edge_list(2, {}), Orientation::DstMajor);
  const BlockPlan plan = build_block_plan(g, 1, 1);
  CHECK(plan.num_edges() == 0);
  CHECK(plan.num_blocks == 2);
  CHECK(plan.block_off == std::vector<std::uint64_t>{0, 0, 0});
}

TEST_CASE("kb and nb below 1 are rejected") {
  const CsrGraph g = build_csr(make_edge_list(2, {}), Orientation::DstMajor);
  CHECK_THROWS_AS(build_block_plan(g, 0, 8), ConfigError);
  CHECK_THROWS_AS(build_block_plan(g, 8, 0), ConfigError);
}

TEST_CASE("property: plan covers every edge once, in-window, sorted") {
  for (std::uint64_t seed = 50; seed <= 62; ++seed) {
    const EdgeList el = random_small_graph(seed);
    const CsrGraph g = build_csr(el, Orientation::DstMajor);
    for (const NodeId kb : {NodeId{1}, NodeId{7}, NodeId{64},
                            std::max<NodeId>(el.num_nodes, 1)}) {
      const BlockPlan plan = build_block_plan(g, kb, 8);
      REQUIRE(plan.num_edges() == el.num_edges());

      std::set<EdgeId> seen;
      for (NodeId b = 0; b < plan.num_blocks; ++b) {
        for (std::uint64_t k = plan.block_off[b]; k < plan.block_off[b + 1];
             ++k) {
          // window containment
          CHECK(plan.src[k] / kb == b);
          // src non-decreasing within the block
          if (k > plan.block_off[b]) CHECK(plan.src[k - 1] <= plan.src[k]);
          // triple matches the original edge
          const Edge& e = el.edges[plan.eid[k]];
          CHECK(e.src == plan.src[k]);
          CHECK(e.dst == plan.dst[k]);
          CHECK(seen.insert(plan.eid[k]).second);
        }
      }
      CHECK(seen.size() == el.edges.size());
    }
  }
}

TEST_CASE("thread views repartition without losing triples") {
  const EdgeList el = random_small_graph(77);
  const CsrGraph g = build_csr(el, Orientation::DstMajor);
  const BlockPlan plan = build_block_plan(g, 16, 8);
  for (const int threads : {1, 2, 3, 8}) {
    const auto view = plan.view(threads);
    REQUIRE(view->threads == threads);
    REQUIRE(view->off.size() ==
            static_cast<std::size_t>(threads) * plan.num_blocks + 1);
    std::set<EdgeId> seen;
    for (std::size_t i = 0; i < view->eid.size(); ++i)
      CHECK(seen.insert(view->eid[i]).second);
    CHECK(seen.size() == el.edges.size());

    // within a (thread, block) slice the src order is preserved
    for (int t = 0; t < threads; ++t) {
      for (NodeId b = 0; b < plan.num_blocks; ++b) {
        const std::size_t slot =
            static_cast<std::size_t>(t) * plan.num_blocks + b;
        for (std::uint64_t k = view->off[slot] + 1; k < view->off[slot + 1];
             ++k)
          CHECK(view->src[k - 1] <= view->src[k]);
      }
    }
    // caching returns the same object
    CHECK(plan.view(threads).get() == view.get());
  }
}

TEST_CASE("default block sizes stay in range") {
  CHECK(default_kb(64, 100000) == 1024);
  CHECK(default_kb(1, 10) == 10);
  CHECK(default_kb(100000, 100000) >= 1);
  const auto nb = default_nb(10000, 64);
  CHECK(nb >= 8);
  CHECK(nb <= 64);
  CHECK(default_nb(1, 4) == 4);
}
