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
#include <cstdio>
#include <doctest.h>
#include <fstream>
#include <string>

#include "gspmm/error.hpp"
#include "gspmm/generate.hpp"
#include "gspmm/io.hpp"
#include "test_util.hpp"

using namespace gspmm;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const char* name)
      : path(std::string("/tmp/gspmm_test_") + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

void write_text(const std::string& path, const char* text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("edge list text parsing") {
  TempFile f("edges.txt");
  write_text(f.path, "0 2\n1 2\n");
  const EdgeList el = load_edge_list(f.path);
  CHECK(el.num_nodes == 3);
  REQUIRE(el.num_edges() == 2);
  CHECK(el.edges[0] == Edge{0, 2});
  CHECK(el.edges[1] == Edge{1, 2});
}

TEST_CASE("edge list header override and comments") {
  TempFile f("edges_hdr.txt");
  write_text(f.path, "# a comment\n%nodes 10\n0 1   # trailing\n\n");
  const EdgeList el = load_edge_list(f.path);
  CHECK(el.num_nodes == 10);
  REQUIRE(el.num_edges() == 1);
}

TEST_CASE("edge list parse errors carry the line number") {
  TempFile f("edges_bad.txt");
  write_text(f.path, "0 x\n");
  try {
    load_edge_list(f.path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":1:") != std::string::npos);
  }

  TempFile g("edges_bad2.txt");
  write_text(g.path, "0 1\n%nodes 2\n5 1\n");
  try {
    load_edge_list(g.path);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
}

TEST_CASE("edge list save/load round-trip keeps isolated nodes") {
  TempFile f("edges_rt.txt");
  EdgeList el;
  el.num_nodes = 9;
  el.edges = {{0, 5}, {5, 0}, {3, 3}};
  save_edge_list(f.path, el);
  const EdgeList back = load_edge_list(f.path);
  CHECK(back.num_nodes == el.num_nodes);
  CHECK(back.edges == el.edges);
}

TEST_CASE("feature matrix binary round-trip") {
  TempFile f("feats.bin");
  const FeatureMatrix a = random_features(37, 5, 123);
  save_feature_matrix(f.path, a);
  const FeatureMatrix b = load_feature_matrix(f.path);
  CHECK(b.rows == a.rows);
  CHECK(b.dim == a.dim);
  CHECK(b.data == a.data);
}

TEST_CASE("csr binary round-trip preserves structure exactly") {
  for (std::uint64_t seed : {1ull, 8ull}) {
    const EdgeList el = test::random_small_graph(seed);
    for (const auto orient :
         {Orientation::SrcMajor, Orientation::DstMajor}) {
      TempFile f("graph.csr");
      const CsrGraph g = build_csr(el, orient);
      save_csr(f.path, g);
      const CsrGraph back = load_csr(f.path);
      CHECK(back.orientation == g.orientation);
      CHECK(back.num_rows == g.num_rows);
      CHECK(back.num_cols == g.num_cols);
      CHECK(back.indptr == g.indptr);
      CHECK(back.indices == g.indices);
      CHECK(back.edge_ids == g.edge_ids);
    }
  }
}

TEST_CASE("corrupt binary containers are rejected") {
  TempFile f("bogus.bin");
  write_text(f.path, "definitely not a matrix");
  CHECK_THROWS_AS(load_feature_matrix(f.path), IoError);
  CHECK_THROWS_AS(load_csr(f.path), IoError);
  CHECK_THROWS_AS(load_feature_matrix("/nonexistent/path"), IoError);
}
