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
#include <string>
#include <string_view>

#include "gspmm/edge_list.hpp"
#include "gspmm/feature_matrix.hpp"

namespace gspmm {

enum class GeneratorKind : std::uint8_t { ErdosRenyi, RMat, Sbm };

const char* to_string(GeneratorKind k);
GeneratorKind parse_generator_kind(std::string_view name);  // er|rmat|sbm

// Synthetic-graph recipe. All outputs are a pure function of the spec
// (counter-based SplitMix64 streams), so a spec generates the same edge
// list on every platform.
//
//   ErdosRenyi  each ordered pair (i, j), i != j, kept with probability
//               prob (or num_edges / n(n-1) when prob is unset)
//   RMat        num_edges draws from the recursive quadrant distribution
//               (a, b, c, d); duplicates and self-loops allowed
//   Sbm         nodes split into `blocks` equal groups; ordered pair kept
//               with p_in inside a group, p_out across groups, no
//               self-loops
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::ErdosRenyi;
  NodeId num_nodes = 0;
  std::uint64_t num_edges = 0;  // RMat count; ER fallback when prob unset
  double prob = -1.0;           // ER edge probability, unset if negative
  int blocks = 2;
  double p_in = 0.0, p_out = 0.0;
  double a = 0.57, b = 0.19, c = 0.19, d = 0.05;
  std::uint64_t seed = 0;
};

// Throws ConfigError on invalid parameters (probabilities outside [0,1],
// RMAT weights not summing to 1 within 1e-9, ...).
void validate_spec(const GeneratorSpec& spec);

EdgeList generate(const GeneratorSpec& spec);

// Generator recipe shaped after a well-known dataset, with its feature
// width as companion metadata.
struct DatasetPreset {
  std::string name;
  GeneratorSpec spec;
  std::int64_t feature_dim = 0;
};

// Known names: pubmed-like, reddit-like, ogbprod-like, bgs-like.
DatasetPreset dataset_preset(std::string_view name);

// Uniform values in [-1, 1), deterministic per seed.
FeatureMatrix random_features(std::int64_t rows, std::int64_t dim,
                              std::uint64_t seed);

}  // namespace gspmm
