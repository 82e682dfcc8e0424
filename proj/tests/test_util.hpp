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

#include <vector>

#include "gspmm/compare.hpp"
#include "gspmm/edge_list.hpp"
#include "gspmm/generate.hpp"
#include "gspmm/rng.hpp"

namespace gspmm::test {

// Small random graph for property tests: mixes generator kinds by seed,
// n <= 200, m <= 2000, average degree <= 11 with mild skew (keeps float32
// sum rows comfortably inside the 1e-5 band around the float64 reference).
inline EdgeList random_small_graph(std::uint64_t seed) {
  GeneratorSpec spec;
  spec.seed = seed;
  const std::uint64_t pick = splitmix64_at(seed, 9000);
  spec.num_nodes = 8 + static_cast<NodeId>(splitmix64_at(seed, 9001) % 193);
  const double degree =
      1.0 + static_cast<double>(splitmix64_at(seed, 9002) % 10);
  switch (pick % 3) {
    case 0:
      spec.kind = GeneratorKind::ErdosRenyi;
      spec.prob = std::min(
          1.0, degree / (static_cast<double>(spec.num_nodes) - 1.0));
      break;
    case 1:
      spec.kind = GeneratorKind::RMat;
      spec.num_edges = std::min<std::uint64_t>(
          2000, static_cast<std::uint64_t>(degree * spec.num_nodes));
      spec.a = 0.40;
      spec.b = 0.25;
      spec.c = 0.25;
      spec.d = 0.10;
      break;
    default:
      spec.kind = GeneratorKind::Sbm;
      spec.blocks = 1 + static_cast<int>(splitmix64_at(seed, 9004) % 4);
      spec.p_in = std::min(
          1.0, degree * spec.blocks / static_cast<double>(spec.num_nodes));
      spec.p_out = spec.p_in / 20.0;
      break;
  }
  return generate(spec);
}

inline EdgeList make_edge_list(NodeId n,
                               std::initializer_list<Edge> edges) {
  EdgeList el;
  el.num_nodes = n;
  el.edges = edges;
  return el;
}

}  // namespace gspmm::test
