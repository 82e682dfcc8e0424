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
#include <cmath>
#include <doctest.h>
#include <set>

#include "gspmm/error.hpp"
#include "gspmm/generate.hpp"

using namespace gspmm;

namespace {

std::uint64_t edge_hash(const EdgeList& el) {
  std::uint64_t h = 1469598103934665603ull;
  for (const Edge& e : el.edges) {
    h = (h ^ e.src) * 1099511628211ull;
    h = (h ^ e.dst) * 1099511628211ull;
  }
  return h;
}

}  // namespace

TEST_CASE("er with p=1 is the complete digraph without self-loops") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::ErdosRenyi;
  spec.num_nodes = 4;
  spec.prob = 1.0;
  const EdgeList el = generate(spec);
  CHECK(el.num_edges() == 12);
  for (const Edge& e : el.edges) CHECK(e.src != e.dst);
}

TEST_CASE("sbm with p_out=0 keeps blocks disjoint") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Sbm;
  spec.num_nodes = 100;
  spec.blocks = 2;
  spec.p_in = 1.0;
  spec.p_out = 0.0;
  const EdgeList el = generate(spec);
  CHECK(el.num_edges() == 2 * 50 * 49);
  for (const Edge& e : el.edges) CHECK((e.src < 50) == (e.dst < 50));
}

TEST_CASE("generators are deterministic per seed and differ across seeds") {
  for (const GeneratorKind kind :
       {GeneratorKind::ErdosRenyi, GeneratorKind::RMat, GeneratorKind::Sbm}) {
    GeneratorSpec spec;
    spec.kind = kind;
    spec.num_nodes = 60;
    spec.num_edges = 300;
    spec.prob = 0.08;
    spec.p_in = 0.3;
    spec.p_out = 0.02;
    std::set<std::uint64_t> hashes;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      spec.seed = seed;
      const EdgeList a = generate(spec);
      const EdgeList b = generate(spec);
      CHECK(a.edges == b.edges);
      hashes.insert(edge_hash(a));
    }
    CHECK(hashes.size() == 5);  // distinct seeds, distinct graphs
  }
}

TEST_CASE("rmat draws exactly the requested edge count") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::RMat;
  spec.num_nodes = 1000;
  spec.num_edges = 5000;
  spec.seed = 3;
  const EdgeList el = generate(spec);
  CHECK(el.num_edges() == 5000);
  for (const Edge& e : el.edges) {
    CHECK(e.src < 1000);
    CHECK(e.dst < 1000);
  }
}

TEST_CASE("sbm realized edge count lands within 1% of expectation") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::Sbm;
  spec.num_nodes = 4000;
  spec.blocks = 4;
  spec.p_in = 0.25;
  spec.p_out = 0.0;
  spec.seed = 11;
  const EdgeList el = generate(spec);
  const double expected = 4.0 * 1000.0 * 999.0 * 0.25;
  CHECK(std::abs(el.num_edges() - expected) <= 0.01 * expected);
}

TEST_CASE("invalid generator parameters are rejected") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::RMat;
  spec.a = 0.5;
  spec.b = 0.2;
  spec.c = 0.2;
  spec.d = 0.2;  // sums to 1.1
  CHECK_THROWS_AS(validate_spec(spec), ConfigError);

  GeneratorSpec sbm;
  sbm.kind = GeneratorKind::Sbm;
  sbm.p_in = 1.5;
  CHECK_THROWS_AS(validate_spec(sbm), ConfigError);

  GeneratorSpec er;
  er.kind = GeneratorKind::ErdosRenyi;
  er.prob = -0.5;  // negative means "unset", so this validates
  CHECK_NOTHROW(validate_spec(er));
  er.prob = 1.5;
  CHECK_THROWS_AS(validate_spec(er), ConfigError);
}

TEST_CASE("dataset presets reproduce the published shapes") {
  const DatasetPreset pubmed = dataset_preset("pubmed-like");
  CHECK(pubmed.spec.num_nodes == 19717);
  CHECK(pubmed.spec.num_edges == 44338);
  CHECK(pubmed.feature_dim == 500);

  const DatasetPreset reddit = dataset_preset("reddit-like");
  CHECK(reddit.spec.num_nodes == 232965);
  CHECK(reddit.spec.num_edges == 11606919);
  CHECK(reddit.feature_dim == 602);

  const DatasetPreset ogb = dataset_preset("ogbprod-like");
  CHECK(ogb.spec.num_nodes == 2449029);
  CHECK(ogb.spec.num_edges == 123718280);
  CHECK(ogb.feature_dim == 100);

  const DatasetPreset bgs = dataset_preset("bgs-like");
  CHECK(bgs.spec.num_nodes == 44333);
  CHECK(bgs.spec.num_edges == 227916);
  CHECK(bgs.feature_dim == 103);

  CHECK_THROWS_AS(dataset_preset("imaginary"), ConfigError);
}

TEST_CASE("random features are deterministic and in range") {
  const FeatureMatrix a = random_features(3, 2, 99);
  const FeatureMatrix b = random_features(3, 2, 99);
  CHECK(a.data == b.data);
  const FeatureMatrix c = random_features(200, 5, 7);
  for (const float x : c.data) {
    CHECK(x >= -1.0f);
    CHECK(x < 1.0f);
  }
  const FeatureMatrix single = random_features(1, 1, 0);
  CHECK(single.data.size() == 1);
}
