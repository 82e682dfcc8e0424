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
#include "gspmm/generate.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "gspmm/error.hpp"
#include "gspmm/rng.hpp"

namespace gspmm {

namespace {

// Geometric gap sampler driven by a precomputed table of (1-p)^k. The
// table is built with plain IEEE multiplies and searched with exact
// comparisons, so gaps are bit-reproducible (no libm involved).
class GeometricSkipper {
 public:
  explicit GeometricSkipper(double p) {
    const double q = 1.0 - p;
    pow_q_.push_back(1.0);
    double x = q;
    while (x > 0x1.0p-64 && pow_q_.size() < kMaxTable) {
      pow_q_.push_back(x);
      x *= q;
    }
    pow_q_.push_back(x);  // final entry <= 2^-64 (or deep tail)
  }

  // Number of misses before the next hit, given u in [0, 1).
  std::uint64_t gap(double u) const {
    double t = 1.0 - u;  // in (0, 1]
    const std::size_t last = pow_q_.size() - 1;
    std::uint64_t base = 0;
    while (t <= pow_q_[last]) {
      base += last;
      t /= pow_q_[last];
    }
    // smallest j >= 1 with pow_q_[j] < t
    std::size_t lo = 1, hi = last;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (pow_q_[mid] < t)
        hi = mid;
      else
        lo = mid + 1;
    }
    return base + lo - 1;
  }

 private:
  static constexpr std::size_t kMaxTable = 4096;
  std::vector<double> pow_q_;
};

// Bernoulli(p) sweep over the cells of a row-major rectangle, emitting
// hits through `emit(cell_index)`.
template <class Emit>
void sample_rect(std::uint64_t cells, double p, CounterRng& rng, Emit emit) {
  if (p <= 0.0 || cells == 0) return;
  if (p >= 1.0) {
    for (std::uint64_t c = 0; c < cells; ++c) emit(c);
    return;
  }
  GeometricSkipper skip(p);
  std::uint64_t pos = skip.gap(rng.next_u01());
  while (pos < cells) {
    emit(pos);
    pos += 1 + skip.gap(rng.next_u01());
  }
}

EdgeList gen_erdos_renyi(const GeneratorSpec& spec) {
  const NodeId n = spec.num_nodes;
  double p = spec.prob;
  if (p < 0.0) {
    const double pairs =
        static_cast<double>(n) * (static_cast<double>(n) - 1.0);
    p = pairs > 0.0 ? static_cast<double>(spec.num_edges) / pairs : 0.0;
  }
  EdgeList el;
  el.num_nodes = n;
  CounterRng rng(spec.seed);
  sample_rect(static_cast<std::uint64_t>(n) * n, p, rng,
              [&](std::uint64_t cell) {
                const NodeId i = static_cast<NodeId>(cell / n);
                const NodeId j = static_cast<NodeId>(cell % n);
                if (i != j) el.edges.push_back({i, j});
              });
  return el;
}

EdgeList gen_sbm(const GeneratorSpec& spec) {
  const NodeId n = spec.num_nodes;
  const int k = spec.blocks;
  EdgeList el;
  el.num_nodes = n;
  CounterRng rng(spec.seed);

  // Equal blocks; the first n % k blocks absorb the remainder.
  std::vector<NodeId> start(static_cast<std::size_t>(k) + 1, 0);
  for (int b = 0; b < k; ++b) {
    const NodeId size = n / k + (static_cast<NodeId>(b) < n % k ? 1 : 0);
    start[b + 1] = start[b] + size;
  }

  for (int bi = 0; bi < k; ++bi) {
    for (int bj = 0; bj < k; ++bj) {
      const double p = bi == bj ? spec.p_in : spec.p_out;
      const NodeId rows = start[bi + 1] - start[bi];
      const NodeId cols = start[bj + 1] - start[bj];
      sample_rect(static_cast<std::uint64_t>(rows) * cols, p, rng,
                  [&](std::uint64_t cell) {
                    const NodeId i = start[bi] + static_cast<NodeId>(cell / cols);
                    const NodeId j = start[bj] + static_cast<NodeId>(cell % cols);
                    if (i != j) el.edges.push_back({i, j});
                  });
    }
  }
  return el;
}

EdgeList gen_rmat(const GeneratorSpec& spec) {
  const NodeId n = spec.num_nodes;
  int levels = 0;
  while ((std::uint64_t{1} << levels) < static_cast<std::uint64_t>(n))
    ++levels;

  const double t_ab = spec.a + spec.b;
  const double t_abc = t_ab + spec.c;

  EdgeList el;
  el.num_nodes = n;
  el.edges.reserve(spec.num_edges);
  CounterRng rng(spec.seed);
  for (std::uint64_t t = 0; t < spec.num_edges; ++t) {
    NodeId u = 0, v = 0;
    for (int tries = 0;; ++tries) {
      if (tries > 10000)
        throw ConfigError("rmat: could not place an edge inside the node "
                          "range; is num_nodes sane?");
      u = 0;
      v = 0;
      for (int l = 0; l < levels; ++l) {
        const double r = rng.next_u01();
        const int quad = r < spec.a ? 0 : r < t_ab ? 1 : r < t_abc ? 2 : 3;
        u = (u << 1) | static_cast<NodeId>(quad >> 1);
        v = (v << 1) | static_cast<NodeId>(quad & 1);
      }
      if (u < n && v < n) break;
    }
    el.edges.push_back({u, v});
  }
  return el;
}

}  // namespace

const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::ErdosRenyi: return "er";
    case GeneratorKind::RMat: return "rmat";
    case GeneratorKind::Sbm: return "sbm";
  }
  return "?";
}

GeneratorKind parse_generator_kind(std::string_view name) {
  if (name == "er") return GeneratorKind::ErdosRenyi;
  if (name == "rmat") return GeneratorKind::RMat;
  if (name == "sbm") return GeneratorKind::Sbm;
  throw ConfigError("unknown generator kind '" + std::string(name) +
                    "' (expected er|rmat|sbm)");
}

void validate_spec(const GeneratorSpec& spec) {
  auto check_p = [](double p, const char* what) {
    if (p < 0.0 || p > 1.0)
      throw ConfigError(std::string(what) + " must be in [0, 1]");
  };
  switch (spec.kind) {
    case GeneratorKind::ErdosRenyi:
      if (spec.prob >= 0.0) check_p(spec.prob, "er probability");
      break;
    case GeneratorKind::Sbm:
      if (spec.blocks < 1) throw ConfigError("sbm needs blocks >= 1");
      check_p(spec.p_in, "sbm p_in");
      check_p(spec.p_out, "sbm p_out");
      break;
    case GeneratorKind::RMat: {
      check_p(spec.a, "rmat a");
      check_p(spec.b, "rmat b");
      check_p(spec.c, "rmat c");
      check_p(spec.d, "rmat d");
      const double sum = spec.a + spec.b + spec.c + spec.d;
      if (std::abs(sum - 1.0) > 1e-9)
        throw ConfigError("rmat quadrant weights must sum to 1");
      break;
    }
  }
}

EdgeList generate(const GeneratorSpec& spec) {
  validate_spec(spec);
  switch (spec.kind) {
    case GeneratorKind::ErdosRenyi: return gen_erdos_renyi(spec);
    case GeneratorKind::Sbm: return gen_sbm(spec);
    case GeneratorKind::RMat: return gen_rmat(spec);
  }
  throw ConfigError("unreachable generator kind");
}

DatasetPreset dataset_preset(std::string_view name) {
  DatasetPreset p;
  p.name = std::string(name);
  p.spec.kind = GeneratorKind::RMat;
  if (name == "pubmed-like") {
    p.spec.num_nodes = 19717;
    p.spec.num_edges = 44338;
    p.feature_dim = 500;
  } else if (name == "reddit-like") {
    p.spec.num_nodes = 232965;
    p.spec.num_edges = 11606919;
    p.feature_dim = 602;
  } else if (name == "ogbprod-like") {
    p.spec.num_nodes = 2449029;
    p.spec.num_edges = 123718280;
    p.feature_dim = 100;
  } else if (name == "bgs-like") {
    p.spec.num_nodes = 44333;
    p.spec.num_edges = 227916;
    p.feature_dim = 103;
  } else {
    throw ConfigError("unknown dataset preset '" + std::string(name) + "'");
  }
  return p;
}

FeatureMatrix random_features(std::int64_t rows, std::int64_t dim,
                              std::uint64_t seed) {
  if (rows < 0 || dim < 1)
    throw ShapeError("random_features: rows >= 0 and dim >= 1 required");
  FeatureMatrix f(rows, dim);
  const std::int64_t total = rows * dim;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i)
    f.data[i] = unit_float_at(seed, static_cast<std::uint64_t>(i));
  return f;
}

}  // namespace gspmm
