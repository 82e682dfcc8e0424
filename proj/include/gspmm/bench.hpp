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
#include <vector>

#include "gspmm/kernels.hpp"

namespace gspmm {

// One timed combination. kb/nb are the resolved block sizes (the blocked
// strategy is the only consumer, but the columns are always filled in).
struct BenchReport {
  std::string config;
  Strategy strategy = Strategy::Pull;
  NodeId nodes = 0;
  EdgeId edges = 0;
  std::int64_t dim = 0;
  int threads = 1;
  NodeId kb = 0;
  std::int64_t nb = 0;
  int iters = 1;
  double mean_s = 0.0;
  double min_s = 0.0;
  double gbps = 0.0;
};

struct BenchOptions {
  int warmup = 2;
  int iters = 10;
  bool include_plan = false;  // rebuild the BlockPlan inside each timing
};

// Both graph orientations of the same edge set; every strategy/output
// combination picks the one it needs.
struct GraphViews {
  CsrGraph dst_major;
  CsrGraph src_major;

  const CsrGraph& oriented(Orientation o) const {
    return o == Orientation::DstMajor ? dst_major : src_major;
  }
};

GraphViews make_views(const EdgeList& edges);

// Runs warmup + timed iterations of one (config, strategy, threads,
// kb, nb) cell. kb == 0 or nb == 0 resolve to the cache-derived defaults.
BenchReport bench_case(const GraphViews& views, const std::string& config_name,
                       const BrConfig& cfg, const FeatureMatrix* u_feats,
                       const FeatureMatrix* v_feats,
                       const FeatureMatrix* e_feats, Strategy strategy,
                       int threads, NodeId kb, std::int64_t nb,
                       const BenchOptions& opts);

// The stable CSV schema.
const char* bench_csv_header();
std::string bench_csv_row(const BenchReport& r);

}  // namespace gspmm
