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
#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gspmm/bench.hpp"
#include "gspmm/compare.hpp"
#include "gspmm/csr.hpp"
#include "gspmm/error.hpp"
#include "gspmm/generate.hpp"
#include "gspmm/io.hpp"
#include "gspmm/kernels.hpp"
#include "gspmm/oracle.hpp"

namespace {

using namespace gspmm;

int default_threads() {
  if (const char* env = std::getenv("GRAPH_AGGR_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return omp_get_max_threads();
}

struct GraphSource {
  std::string label;
  EdgeList edges;
  std::int64_t dim = 8;
};

// CLI presets: the dataset-shaped generators plus two fixed test graphs.
GraphSource preset_source(const std::string& name, std::uint64_t seed) {
  GraphSource s;
  s.label = name;
  if (name == "smoke") {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::ErdosRenyi;
    spec.num_nodes = 200;
    spec.prob = 0.025;
    spec.seed = seed;
    s.edges = generate(spec);
    s.dim = 8;
    return s;
  }
  if (name == "reddit-small") {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::RMat;
    spec.num_nodes = 100000;
    spec.num_edges = 5000000;
    spec.seed = seed;
    s.edges = generate(spec);
    s.dim = 64;
    return s;
  }
  DatasetPreset p = dataset_preset(name);
  p.spec.seed = seed;
  s.edges = generate(p.spec);
  s.dim = p.feature_dim;
  return s;
}

GraphSource load_source(const std::string& path) {
  GraphSource s;
  s.label = path;
  std::ifstream probe(path, std::ios::binary);
  char magic[4] = {0, 0, 0, 0};
  probe.read(magic, 4);
  probe.close();
  if (std::string_view(magic, 4) == "CSR1") {
    s.edges = to_edge_list(load_csr(path));
  } else {
    s.edges = load_edge_list(path);
  }
  return s;
}

GraphSource resolve_source(const std::string& graph_path,
                           const std::string& preset, std::uint64_t seed,
                           std::int64_t dim_override) {
  if (graph_path.empty() && preset.empty())
    throw ConfigError("provide --graph or --preset");
  GraphSource s = graph_path.empty() ? preset_source(preset, seed)
                                     : load_source(graph_path);
  if (dim_override > 0) s.dim = dim_override;
  return s;
}

void print_stats(const GraphSource& s) {
  const CsrGraph g = build_csr(s.edges, Orientation::DstMajor);
  const DegreeStats d = degree_stats(g);
  std::printf("graph %s: nodes %llu edges %llu\n", s.label.c_str(),
              static_cast<unsigned long long>(s.edges.num_nodes),
              static_cast<unsigned long long>(s.edges.num_edges()));
  std::printf("  in-degree  min %llu mean %.2f max %llu\n",
              static_cast<unsigned long long>(d.min_in), d.mean_in,
              static_cast<unsigned long long>(d.max_in));
  std::printf("  out-degree min %llu mean %.2f max %llu\n",
              static_cast<unsigned long long>(d.min_out), d.mean_out,
              static_cast<unsigned long long>(d.max_out));
  std::printf("  isolated nodes %llu\n",
              static_cast<unsigned long long>(d.isolated));
}

struct OperandSet {
  FeatureMatrix u, v, e;
};

OperandSet make_operands(const EdgeList& el, std::int64_t dim,
                         std::uint64_t seed) {
  OperandSet ops;
  ops.u = random_features(el.num_nodes, dim, seed);
  ops.v = random_features(el.num_nodes, dim, seed + 1);
  ops.e = random_features(el.num_edges(), dim, seed + 2);
  return ops;
}

// ------------------------------------------------------------------ gen

int run_gen(const GeneratorSpec& spec_in, const std::string& preset,
            const std::string& format, const std::string& out_path,
            std::uint64_t seed) {
  GeneratorSpec spec = spec_in;
  if (!preset.empty()) {
    DatasetPreset p = dataset_preset(preset);
    spec = p.spec;
  }
  spec.seed = seed;
  validate_spec(spec);

  GraphSource s;
  s.label = out_path;
  s.edges = generate(spec);
  print_stats(s);

  if (format == "edgelist") {
    save_edge_list(out_path, s.edges);
  } else if (format == "csr") {
    save_csr(out_path, build_csr(s.edges, Orientation::DstMajor));
  } else {
    throw ConfigError("unknown --format '" + format + "'");
  }
  std::printf("wrote %s (%s)\n", out_path.c_str(), format.c_str());
  return 0;
}

// --------------------------------------------------------------- verify

int run_verify(const GraphSource& src, std::vector<std::string> config_names,
               std::vector<std::string> strategy_names, std::uint64_t seed,
               bool inject_fault) {
  if (config_names.empty()) config_names = application_configs();
  if (strategy_names.empty())
    strategy_names = {"push", "pull", "blocked", "spmm"};

  const GraphViews views = make_views(src.edges);
  const OperandSet ops = make_operands(src.edges, src.dim, seed);
  const int threads = default_threads();

  std::size_t passed_configs = 0;
  bool all_ok = true;
  bool fault_pending = inject_fault;

  for (const std::string& name : config_names) {
    const BrConfig cfg = named_config(name);
    const FeatureMatrix oracle =
        oracle_aggregate(src.edges, cfg, &ops.u, &ops.v, &ops.e);
    bool config_ok = true;
    for (const std::string& sname : strategy_names) {
      const Strategy strat = parse_strategy(sname);
      const CsrGraph& g = views.oriented(required_orientation(strat, cfg.out));
      BlockPlan plan;
      if (strat == Strategy::BlockedPull)
        plan = build_block_plan(g, default_kb(src.dim, g.num_cols),
                                default_nb(g.num_rows, src.dim));
      FeatureMatrix out = binary_reduce(
          strat, g, cfg, &ops.u, &ops.v, &ops.e,
          strat == Strategy::BlockedPull ? &plan : nullptr, threads);
      if (fault_pending && !out.data.empty()) {
        out.data[0] += 1.0f;  // test hook: corrupt one element
        fault_pending = false;
      }
      const double err = max_rel_error(out, oracle);
      const bool ok = is_exact_reduce(cfg.reduce) ? bit_equal(out, oracle)
                                                  : err <= 1e-5;
      std::printf("%-18s %-8s max_rel=%.3e %s\n", name.c_str(),
                  sname.c_str(), err, ok ? "ok" : "MISMATCH");
      config_ok = config_ok && ok;
    }
    if (config_ok) ++passed_configs;
    all_ok = all_ok && config_ok;
  }

  std::printf("%s %zu/%zu configs x %zu strategies\n",
              all_ok ? "PASS" : "FAIL", passed_configs, config_names.size(),
              strategy_names.size());
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------- bench

int run_bench(const GraphSource& src, const std::string& config_name,
              const std::vector<std::string>& strategy_names,
              std::vector<int> threads_list, std::vector<NodeId> kb_list,
              std::vector<std::int64_t> nb_list, const BenchOptions& opts,
              std::uint64_t seed, const std::string& out_path) {
  const BrConfig cfg = named_config(config_name);
  const GraphViews views = make_views(src.edges);
  const OperandSet ops = make_operands(src.edges, src.dim, seed);

  if (threads_list.empty()) threads_list = {default_threads()};
  if (kb_list.empty()) kb_list = {0};
  if (nb_list.empty()) nb_list = {0};

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw IoError("cannot open " + out_path + " for writing");
    out = &file;
  }

  *out << bench_csv_header() << "\n";
  for (const std::string& sname : strategy_names) {
    const Strategy strat = parse_strategy(sname);
    for (const int t : threads_list) {
      for (const NodeId kb : kb_list) {
        for (const std::int64_t nb : nb_list) {
          const BenchReport r =
              bench_case(views, config_name, cfg, &ops.u, &ops.v, &ops.e,
                         strat, t, kb, nb, opts);
          *out << bench_csv_row(r) << "\n";
          out->flush();
        }
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CPU kernels for graph feature aggregation"};
  app.require_subcommand(1);

  std::string graph_path, preset, out_path, format = "edgelist";
  std::uint64_t seed = 42;
  std::int64_t dim = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a synthetic graph");
  GeneratorSpec spec;
  std::string kind = "er";
  std::string abcd;
  gen->add_option("--kind", kind, "generator: er|rmat|sbm");
  gen->add_option("--preset", preset, "dataset-shaped generator preset");
  gen->add_option("--nodes", spec.num_nodes, "node count");
  gen->add_option("--edges", spec.num_edges, "edge count target");
  gen->add_option("--prob", spec.prob, "er edge probability");
  gen->add_option("--blocks", spec.blocks, "sbm block count");
  gen->add_option("--pin", spec.p_in, "sbm intra-block probability");
  gen->add_option("--pout", spec.p_out, "sbm inter-block probability");
  gen->add_option("--abcd", abcd, "rmat quadrant weights a,b,c,d");
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("--format", format, "output format: edgelist|csr");
  gen->add_option("--out", out_path, "output path")->required();

  // verify
  auto* verify = app.add_subcommand(
      "verify", "check every strategy against the serial reference");
  std::vector<std::string> configs, strategies;
  bool inject_fault = false;
  verify->add_option("--graph", graph_path, "edge-list or CSR1 file");
  verify->add_option("--preset", preset, "graph preset (default smoke)");
  verify->add_option("--seed", seed, "rng seed");
  verify->add_option("--dim", dim, "feature width override");
  verify->add_option("--configs", configs, "config names")->delimiter(',');
  verify->add_option("--strategies", strategies, "strategies to check")
      ->delimiter(',');
  verify->add_flag("--inject-fault", inject_fault,
                   "test hook: corrupt one output element");

  // bench
  auto* bench = app.add_subcommand("bench", "time strategies, emit CSV");
  std::string config_name = "u_copy_add_v";
  std::vector<std::string> bench_strategies = {"push", "pull", "blocked",
                                               "spmm"};
  std::vector<int> threads_list;
  std::vector<NodeId> kb_list;
  std::vector<std::int64_t> nb_list;
  BenchOptions opts;
  bench->add_option("--graph", graph_path, "edge-list or CSR1 file");
  bench->add_option("--preset", preset, "graph preset");
  bench->add_option("--seed", seed, "rng seed");
  bench->add_option("--dim", dim, "feature width override");
  bench->add_option("--config", config_name, "aggregation config name");
  bench->add_option("--strategies", bench_strategies, "strategies to time")
      ->delimiter(',');
  bench->add_option("--threads", threads_list, "thread counts")
      ->delimiter(',');
  bench->add_option("--kb", kb_list, "K block sizes (0 = auto)")
      ->delimiter(',');
  bench->add_option("--nb", nb_list, "N panel widths (0 = auto)")
      ->delimiter(',');
  bench->add_option("--iters", opts.iters, "timed iterations");
  bench->add_option("--warmup", opts.warmup, "warmup iterations");
  bench->add_flag("--include-plan", opts.include_plan,
                  "rebuild the block plan inside each timed iteration");
  bench->add_option("--out", out_path, "CSV output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      if (!abcd.empty()) {
        if (std::sscanf(abcd.c_str(), "%lf,%lf,%lf,%lf", &spec.a, &spec.b,
                        &spec.c, &spec.d) != 4)
          throw ConfigError("--abcd expects four comma-separated weights");
      }
      spec.kind = parse_generator_kind(kind);
      return run_gen(spec, preset, format, out_path, seed);
    }
    if (*verify) {
      if (graph_path.empty() && preset.empty()) preset = "smoke";
      const GraphSource src = resolve_source(graph_path, preset, seed, dim);
      if (src.edges.num_edges() > 1000000)
        throw ConfigError("verify graph exceeds the reference guard "
                          "(10^6 edges)");
      return run_verify(src, configs, strategies, seed, inject_fault);
    }
    if (*bench) {
      const GraphSource src = resolve_source(graph_path, preset, seed, dim);
      return run_bench(src, config_name, bench_strategies, threads_list,
                       kb_list, nb_list, opts, seed, out_path);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
