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

#include "gspmm/csr.hpp"
#include "gspmm/edge_list.hpp"
#include "gspmm/feature_matrix.hpp"

namespace gspmm {

// Text edge list: one "src dst" pair per line (ASCII decimal), '#' starts
// a comment, an optional "%nodes N" line overrides the node count
// (default: 1 + max id). Parse failures report the line number.
EdgeList load_edge_list(const std::string& path);
void save_edge_list(const std::string& path, const EdgeList& edges);

// Binary feature matrix ("FMAT1"): magic, rows and dim as 64-bit
// little-endian, then raw little-endian float32 data.
void save_feature_matrix(const std::string& path, const FeatureMatrix& f);
FeatureMatrix load_feature_matrix(const std::string& path);

// Binary CSR ("CSR1"): magic, orientation byte (0 src-major, 1 dst-major),
// num_rows/num_cols/num_edges as 64-bit little-endian, then the indptr,
// indices and edge_ids arrays as 64-bit little-endian elements.
void save_csr(const std::string& path, const CsrGraph& g);
CsrGraph load_csr(const std::string& path);

}  // namespace gspmm
