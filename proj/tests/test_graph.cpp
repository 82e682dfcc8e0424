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

#include "gspmm/csr.hpp"
#include "gspmm/error.hpp"
#include "test_util.hpp"

using namespace gspmm;
using test::make_edge_list;
using test::random_small_graph;

namespace {

std::vector<Edge> sorted_edges(const EdgeList& el) {
  std::vector<Edge> v = el.edges;
  std::sort(v.begin(), v.end(), [](const Edge& a, const Edge& b) {
    return a.src < b.src || (a.src == b.src && a.dst < b.dst);
  });
  return v;
}

}  // namespace

TEST_CASE("build_csr dst-major matches hand enumeration") {
  const EdgeList el = make_edge_list(3, {{0, 2}, {1, 2}, {0, 1}});
  const CsrGraph g = build_csr(el, Orientation::DstMajor);
  CHECK(g.indptr == std::vector<EdgeId>{0, 0, 1, 3});
  CHECK(g.indices == std::vector<NodeId>{0, 0, 1});
  CHECK(g.edge_ids == std::vector<EdgeId>{2, 0, 1});
  CHECK(!validate(g));
}

TEST_CASE("build_csr empty graph") {
  const EdgeList el = make_edge_list(2, {});
  const CsrGraph g = build_csr(el, Orientation::DstMajor);
  CHECK(g.indptr == std::vector<EdgeId>{0, 0, 0});
  CHECK(g.indices.empty());
  CHECK(g.edge_ids.empty());
}

TEST_CASE("build_csr single self-loop") {
  const EdgeList el = make_edge_list(1, {{0, 0}});
  for (const auto orient : {Orientation::SrcMajor, Orientation::DstMajor}) {
    const CsrGraph g = build_csr(el, orient);
    CHECK(g.indptr == std::vector<EdgeId>{0, 1});
    CHECK(g.indices == std::vector<NodeId>{0});
    CHECK(g.edge_ids == std::vector<EdgeId>{0});
  }
}

TEST_CASE("build_csr rejects out-of-range node ids") {
  const EdgeList el = make_edge_list(2, {{0, 2}});
  CHECK_THROWS_AS(build_csr(el, Orientation::DstMajor), StructureError);
}

TEST_CASE("transpose flips to src-major with hand-checked offsets") {
  const EdgeList el = make_edge_list(3, {{0, 2}, {1, 2}, {0, 1}});
  const CsrGraph g = build_csr(el, Orientation::DstMajor);
  const CsrGraph t = transpose(g);
  CHECK(t.orientation == Orientation::SrcMajor);
  CHECK(t.indptr == std::vector<EdgeId>{0, 2, 3, 3});
  CHECK(t.indices == std::vector<NodeId>{1, 2, 2});
  CHECK(t.edge_ids == std::vector<EdgeId>{2, 0, 1});
  CHECK(!validate(t));
}

TEST_CASE("transpose of empty and self-loop graphs") {
  const CsrGraph e = build_csr(make_edge_list(2, {}), Orientation::DstMajor);
  const CsrGraph et = transpose(e);
  CHECK(et.indptr == std::vector<EdgeId>{0, 0, 0});

  const CsrGraph s =
      build_csr(make_edge_list(1, {{0, 0}}), Orientation::DstMajor);
  const CsrGraph st = transpose(s);
  CHECK(st.indptr == s.indptr);
  CHECK(st.indices == s.indices);
  CHECK(st.edge_ids == s.edge_ids);
}

TEST_CASE("validate reports the first violated invariant") {
  CsrGraph g;
  g.num_rows = 2;
  g.num_cols = 2;
  g.indptr = {0, 2, 1};
  g.indices = {0};
  g.edge_ids = {0};
  const auto v = validate(g);
  REQUIRE(v.has_value());
  CHECK(*v == "indptr not monotone at row 2");

  CsrGraph dup;
  dup.num_rows = 1;
  dup.num_cols = 2;
  dup.indptr = {0, 2};
  dup.indices = {0, 1};
  dup.edge_ids = {0, 0};
  const auto v2 = validate(dup);
  REQUIRE(v2.has_value());
  CHECK(v2->find("edge_ids not a permutation") != std::string::npos);

  const CsrGraph ok =
      build_csr(make_edge_list(3, {{0, 2}, {1, 2}}), Orientation::DstMajor);
  CHECK(!validate(ok));
}

TEST_CASE("degree stats") {
  const EdgeList el = make_edge_list(3, {{0, 2}, {1, 2}, {0, 1}});
  const DegreeStats d = degree_stats(build_csr(el, Orientation::DstMajor));
  CHECK(d.max_in == 2);
  CHECK(d.mean_in == doctest::Approx(1.0));
  CHECK(d.max_out == 2);
  CHECK(d.isolated == 0);

  const DegreeStats empty =
      degree_stats(build_csr(make_edge_list(3, {}), Orientation::DstMajor));
  CHECK(empty.max_in == 0);
  CHECK(empty.max_out == 0);
  CHECK(empty.isolated == 3);

  // complete digraph on 3 nodes, no self-loops
  const EdgeList k3 = make_edge_list(
      3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
  const DegreeStats dk = degree_stats(build_csr(k3, Orientation::SrcMajor));
  CHECK(dk.min_in == 2);
  CHECK(dk.max_in == 2);
  CHECK(dk.min_out == 2);
  CHECK(dk.max_out == 2);
}

TEST_CASE("property: csr round-trips the edge multiset") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const EdgeList el = random_small_graph(seed);
    for (const auto orient :
         {Orientation::SrcMajor, Orientation::DstMajor}) {
      const CsrGraph g = build_csr(el, orient);
      REQUIRE(!validate(g));
      const EdgeList back = to_edge_list(g);
      // edge ids are preserved, so the round-trip is exact, not just
      // multiset-equal
      CHECK(back.edges == el.edges);
      CHECK(sorted_edges(back) == sorted_edges(el));
    }
  }
}

TEST_CASE("property: transpose twice is the identity") {
  for (std::uint64_t seed = 30; seed <= 45; ++seed) {
    const EdgeList el = random_small_graph(seed);
    const CsrGraph g = build_csr(el, Orientation::DstMajor);
    const CsrGraph tt = transpose(transpose(g));
    CHECK(tt.indptr == g.indptr);
    CHECK(tt.indices == g.indices);
    CHECK(tt.edge_ids == g.edge_ids);
    CHECK(tt.orientation == g.orientation);

    // both orientations see every edge exactly once
    const CsrGraph t = transpose(g);
    CHECK(g.num_edges() == el.num_edges());
    CHECK(t.num_edges() == el.num_edges());
  }
}
