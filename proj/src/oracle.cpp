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
#include "gspmm/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <utility>
#include <vector>

#include "gspmm/error.hpp"

namespace gspmm {

namespace {

constexpr EdgeId kMaxOracleEdges = 1000000;

const FeatureMatrix* pick(Operand o, const FeatureMatrix* u,
                          const FeatureMatrix* v, const FeatureMatrix* e) {
  switch (o) {
    case Operand::U: return u;
    case Operand::V: return v;
    case Operand::E: return e;
    case Operand::None: return nullptr;
  }
  return nullptr;
}

// Literal per-element message evaluation with broadcasting, float32.
void message(BinaryOp op, const float* l, std::int64_t dl, const float* r,
             std::int64_t dr, float* msg, std::int64_t w) {
  if (op == BinaryOp::CopyLhs) {
    for (std::int64_t i = 0; i < w; ++i) msg[i] = l[i];
    return;
  }
  if (op == BinaryOp::Dot) {
    float acc = 0.0f;
    const std::int64_t d = std::max(dl, dr);
    for (std::int64_t i = 0; i < d; ++i)
      acc += l[dl == 1 ? 0 : i] * r[dr == 1 ? 0 : i];
    msg[0] = acc;
    return;
  }
  for (std::int64_t i = 0; i < w; ++i) {
    const float lv = l[dl == 1 ? 0 : i];
    const float rv = r[dr == 1 ? 0 : i];
    switch (op) {
      case BinaryOp::Add: msg[i] = lv + rv; break;
      case BinaryOp::Sub: msg[i] = lv - rv; break;
      case BinaryOp::Mul: msg[i] = lv * rv; break;
      case BinaryOp::Div: msg[i] = lv / rv; break;
      default: break;
    }
  }
}

}  // namespace

FeatureMatrix oracle_aggregate(const EdgeList& el, const BrConfig& cfg,
                               const FeatureMatrix* u_feats,
                               const FeatureMatrix* v_feats,
                               const FeatureMatrix* e_feats) {
  validate_config(cfg);
  const EdgeId m = el.num_edges();
  if (m > kMaxOracleEdges)
    throw ShapeError("oracle refuses graphs with more than 10^6 edges");

  const std::int64_t n = el.num_nodes;
  auto entity_rows = [&](Operand o) -> std::int64_t {
    return o == Operand::E ? static_cast<std::int64_t>(m) : n;
  };

  const FeatureMatrix* lf = pick(cfg.lhs, u_feats, v_feats, e_feats);
  const FeatureMatrix* rf = pick(cfg.rhs, u_feats, v_feats, e_feats);
  if (!lf || (cfg.rhs != Operand::None && !rf))
    throw ShapeError("oracle: missing operand matrix");
  if (lf->rows != entity_rows(cfg.lhs) ||
      (rf && rf->rows != entity_rows(cfg.rhs)))
    throw ShapeError("oracle: operand row count mismatch");
  const std::int64_t dl = lf->dim;
  const std::int64_t dr = rf ? rf->dim : dl;
  if (rf && !dims_broadcastable(dl, dr))
    throw ShapeError("oracle: operand widths not broadcastable");
  const std::int64_t w = binary_out_dim(cfg.binary, dl, dr);

  FeatureMatrix out(entity_rows(cfg.out), w);
  const float ident = reduce_identity(cfg.reduce);
  if (ident != 0.0f) std::fill(out.data.begin(), out.data.end(), ident);

  std::vector<double> sum_acc;
  if (cfg.reduce == ReduceOp::Sum && cfg.out != Operand::E)
    sum_acc.assign(out.data.size(), 0.0);
  std::vector<std::uint8_t> touched(
      cfg.out == Operand::E ? 0 : out.rows, 0);
  std::vector<std::pair<NodeId, EdgeId>> winner;
  if (cfg.reduce == ReduceOp::CopyLast && cfg.out != Operand::E)
    winner.assign(out.rows, {0, 0});

  std::vector<float> msg(static_cast<std::size_t>(w));
  for (EdgeId id = 0; id < m; ++id) {
    const NodeId u = el.edges[id].src;
    const NodeId v = el.edges[id].dst;
    auto row_of = [&](Operand o) -> std::int64_t {
      return o == Operand::U   ? static_cast<std::int64_t>(u)
             : o == Operand::V ? static_cast<std::int64_t>(v)
                               : static_cast<std::int64_t>(id);
    };
    message(cfg.binary, lf->row(row_of(cfg.lhs)), dl,
            rf ? rf->row(row_of(cfg.rhs)) : nullptr, dr, msg.data(), w);

    if (cfg.out == Operand::E) {
      std::memcpy(out.row(id), msg.data(), sizeof(float) * w);
      continue;
    }
    const std::int64_t o = row_of(cfg.out);
    // In the output row's canonical order the key is (other endpoint,
    // edge id); CopyLast keeps the largest seen.
    const NodeId other = cfg.out == Operand::V ? u : v;
    switch (cfg.reduce) {
      case ReduceOp::Sum:
        for (std::int64_t i = 0; i < w; ++i)
          sum_acc[o * w + i] += static_cast<double>(msg[i]);
        break;
      case ReduceOp::Max:
        for (std::int64_t i = 0; i < w; ++i)
          out.at(o, i) = out.at(o, i) < msg[i] ? msg[i] : out.at(o, i);
        break;
      case ReduceOp::Min:
        for (std::int64_t i = 0; i < w; ++i)
          out.at(o, i) = msg[i] < out.at(o, i) ? msg[i] : out.at(o, i);
        break;
      case ReduceOp::Prod:
        for (std::int64_t i = 0; i < w; ++i) out.at(o, i) *= msg[i];
        break;
      case ReduceOp::CopyLast: {
        const std::pair<NodeId, EdgeId> key{other, id};
        if (!touched[o] || winner[o] < key) {
          winner[o] = key;
          std::memcpy(out.row(o), msg.data(), sizeof(float) * w);
        }
        break;
      }
    }
    touched[o] = 1;
  }

  if (!sum_acc.empty()) {
    for (std::size_t i = 0; i < out.data.size(); ++i)
      out.data[i] = static_cast<float>(sum_acc[i]);
  }
  if (cfg.out != Operand::E &&
      (cfg.reduce == ReduceOp::Max || cfg.reduce == ReduceOp::Min)) {
    for (std::int64_t r = 0; r < out.rows; ++r)
      if (!touched[r]) std::memset(out.row(r), 0, sizeof(float) * w);
  }
  return out;
}

}  // namespace gspmm
