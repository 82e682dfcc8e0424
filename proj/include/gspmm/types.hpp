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

namespace gspmm {

// Node and edge identifiers. 32-bit by default; the largest supported
// graphs (a few hundred million edges) still fit. Configure with
// -DGSPMM_64BIT_IDS for anything bigger.
#ifdef GSPMM_64BIT_IDS
using NodeId = std::uint64_t;
using EdgeId = std::uint64_t;
#else
using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
#endif

// Which endpoint the CSR rows enumerate. SrcMajor rows are source nodes
// (push view), DstMajor rows are destination nodes (pull view).
enum class Orientation : std::uint8_t { SrcMajor = 0, DstMajor = 1 };

inline Orientation flipped(Orientation o) {
  return o == Orientation::SrcMajor ? Orientation::DstMajor
                                    : Orientation::SrcMajor;
}

inline const char* to_string(Orientation o) {
  return o == Orientation::SrcMajor ? "src-major" : "dst-major";
}

}  // namespace gspmm
