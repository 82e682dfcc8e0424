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

#include "gspmm/types.hpp"

namespace gspmm {

struct Edge {
  NodeId src;
  NodeId dst;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.src == b.src && a.dst == b.dst;
  }
};

// Ordered multiset of directed edges. The edge id of edges[i] is i; every
// other representation in the library preserves these ids. Self-loops and
// duplicate pairs are allowed.
struct EdgeList {
  NodeId num_nodes = 0;
  std::vector<Edge> edges;

  EdgeId num_edges() const { return static_cast<EdgeId>(edges.size()); }
};

}  // namespace gspmm
