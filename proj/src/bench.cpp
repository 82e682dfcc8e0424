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
#include "gspmm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "gspmm/error.hpp"

namespace gspmm {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Traffic model: every operand referenced by the config is gathered once
// per edge; the output is written once per row.
double bytes_moved(const BrConfig& cfg, EdgeId edges, std::int64_t dl,
                   std::int64_t dr, std::int64_t out_rows,
                   std::int64_t out_dim) {
  double bytes = static_cast<double>(edges) * dl * 4.0;
  if (cfg.rhs != Operand::None)
    bytes += static_cast<double>(edges) * dr * 4.0;
  bytes += static_cast<double>(out_rows) * out_dim * 4.0;
  return bytes;
}

}  // namespace

GraphViews make_views(const EdgeList& edges) {
  GraphViews v;
  v.dst_major = build_csr(edges, Orientation::DstMajor);
  v.src_major = transpose(v.dst_major);
  return v;
}

BenchReport bench_case(const GraphViews& views, const std::string& config_name,
                       const BrConfig& cfg, const FeatureMatrix* u_feats,
                       const FeatureMatrix* v_feats,
                       const FeatureMatrix* e_feats, Strategy strategy,
                       int threads, NodeId kb, std::int64_t nb,
                       const BenchOptions& opts) {
  if (opts.iters < 1) throw ConfigError("bench needs at least one iteration");

  const Orientation need = required_orientation(strategy, cfg.out);
  const CsrGraph& g = views.oriented(need);

  const FeatureMatrix* lhs = cfg.lhs == Operand::U   ? u_feats
                             : cfg.lhs == Operand::V ? v_feats
                                                     : e_feats;
  const FeatureMatrix* rhs = cfg.rhs == Operand::U   ? u_feats
                             : cfg.rhs == Operand::V ? v_feats
                             : cfg.rhs == Operand::E ? e_feats
                                                     : nullptr;
  if (!lhs) throw ShapeError("bench: missing lhs feature matrix");
  const std::int64_t dl = lhs->dim;
  const std::int64_t dr = rhs ? rhs->dim : dl;
  const std::int64_t out_dim = binary_out_dim(cfg.binary, dl, dr);
  const std::int64_t out_rows =
      cfg.out == Operand::E
          ? static_cast<std::int64_t>(g.num_edges())
          : static_cast<std::int64_t>(cfg.out == Operand::U
                                          ? g.num_src_nodes()
                                          : g.num_dst_nodes());

  BenchReport r;
  r.config = config_name;
  r.strategy = strategy;
  r.nodes = std::max(g.num_rows, g.num_cols);
  r.edges = g.num_edges();
  r.dim = std::max(dl, dr);
  r.threads = threads;
  r.kb = kb ? kb : default_kb(std::max(dl, dr), g.num_cols);
  r.nb = nb ? nb : default_nb(g.num_rows, out_dim);
  r.iters = opts.iters;

  const bool blocked = strategy == Strategy::BlockedPull;
  BlockPlan plan;
  if (blocked && !opts.include_plan) plan = build_block_plan(g, r.kb, r.nb);

  auto run_once = [&]() {
    if (blocked && opts.include_plan) {
      BlockPlan fresh = build_block_plan(g, r.kb, r.nb);
      binary_reduce(strategy, g, cfg, u_feats, v_feats, e_feats, &fresh,
                    threads);
    } else {
      binary_reduce(strategy, g, cfg, u_feats, v_feats, e_feats,
                    blocked ? &plan : nullptr, threads);
    }
  };

  for (int i = 0; i < opts.warmup; ++i) run_once();

  double total = 0.0;
  double best = 0.0;
  for (int i = 0; i < opts.iters; ++i) {
    const auto t0 = Clock::now();
    run_once();
    const double dt = seconds_since(t0);
    total += dt;
    best = i == 0 ? dt : std::min(best, dt);
  }
  r.mean_s = total / opts.iters;
  r.min_s = best;
  const double bytes = bytes_moved(cfg, r.edges, dl, dr, out_rows, out_dim);
  r.gbps = r.mean_s > 0.0 ? bytes / r.mean_s / 1e9 : 0.0;
  return r;
}

const char* bench_csv_header() {
  return "config,strategy,nodes,edges,dim,threads,kb,nb,iters,mean_s,min_s,"
         "gbps";
}

std::string bench_csv_row(const BenchReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "%s,%s,%llu,%llu,%lld,%d,%llu,%lld,%d,%.6e,%.6e,%.3f",
                r.config.c_str(), to_string(r.strategy),
                static_cast<unsigned long long>(r.nodes),
                static_cast<unsigned long long>(r.edges),
                static_cast<long long>(r.dim), r.threads,
                static_cast<unsigned long long>(r.kb),
                static_cast<long long>(r.nb), r.iters, r.mean_s, r.min_s,
                r.gbps);
  return buf;
}

}  // namespace gspmm
