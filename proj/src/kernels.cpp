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
#include "gspmm/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <limits>
#include <mutex>
#include <utility>
#include <vector>

#include "gspmm/error.hpp"

namespace gspmm {

namespace {

// ---------------------------------------------------------------------
// Operator functors. Kept as plain static functions so the traversal
// templates inline them into stride-1 loops.

struct SumR {
  static float combine(float a, float m) { return a + m; }
};
struct MaxR {
  static float combine(float a, float m) { return a < m ? m : a; }
};
struct MinR {
  static float combine(float a, float m) { return m < a ? m : a; }
};
struct ProdR {
  static float combine(float a, float m) { return a * m; }
};
struct LastR {
  static float combine(float, float m) { return m; }
};

struct AddB {
  static float apply(float l, float r) { return l + r; }
};
struct SubB {
  static float apply(float l, float r) { return l - r; }
};
struct MulB {
  static float apply(float l, float r) { return l * r; }
};
struct DivB {
  static float apply(float l, float r) { return l / r; }
};
struct CopyB {
  static float apply(float l, float) { return l; }
};
struct DotB {};  // tag; handled by apply_dot

// out[i] = R(out[i], B(l, r)) over a w-wide span. Strides are 0 (scalar
// broadcast) or 1; the branches keep the hot loops stride-1 so they
// vectorize.
template <class B, class R>
inline void apply_span(float* out, const float* l, std::size_t ls,
                       const float* r, std::size_t rs, std::int64_t w) {
  if (ls && rs) {
    for (std::int64_t i = 0; i < w; ++i)
      out[i] = R::combine(out[i], B::apply(l[i], r[i]));
  } else if (ls) {
    const float rv = r ? *r : 0.0f;
    for (std::int64_t i = 0; i < w; ++i)
      out[i] = R::combine(out[i], B::apply(l[i], rv));
  } else {
    const float lv = *l;
    for (std::int64_t i = 0; i < w; ++i)
      out[i] = R::combine(out[i], B::apply(lv, r[i]));
  }
}

template <class R>
inline void apply_dot(float* out, const float* l, std::size_t ls,
                      const float* r, std::size_t rs, std::int64_t d) {
  float acc = 0.0f;
  for (std::int64_t i = 0; i < d; ++i) acc += l[i * ls] * r[i * rs];
  out[0] = R::combine(out[0], acc);
}

// ---------------------------------------------------------------------
// Operand plumbing.

enum Entity : int { kU = 0, kV = 1, kE = 2, kNone = -1 };

inline int entity_of(Operand o) {
  switch (o) {
    case Operand::U: return kU;
    case Operand::V: return kV;
    case Operand::E: return kE;
    case Operand::None: return kNone;
  }
  return kNone;
}

struct OperandRef {
  const float* base = nullptr;
  std::int64_t dim = 0;
  std::size_t stride = 0;  // 0 broadcasts a width-1 operand
  int entity = kNone;

  const float* row(NodeId u, NodeId v, EdgeId e) const {
    const std::int64_t r = entity == kU   ? static_cast<std::int64_t>(u)
                           : entity == kV ? static_cast<std::int64_t>(v)
                                          : static_cast<std::int64_t>(e);
    return base + r * dim;
  }
};

struct KernelCtx {
  const CsrGraph* g = nullptr;
  OperandRef lhs, rhs;
  int out_entity = kV;
  std::int64_t w = 0;  // output width
  std::int64_t gather_dim = 0;  // dot input width
  FeatureMatrix* out = nullptr;
  int threads = 1;
};

inline void split_endpoints(const CsrGraph& g, NodeId row, NodeId other,
                            NodeId& u, NodeId& v) {
  if (g.orientation == Orientation::DstMajor) {
    u = other;
    v = row;
  } else {
    u = row;
    v = other;
  }
}

// Striped lock table guarding output rows in the push strategy.
constexpr std::size_t kLockStripes = 4096;
std::array<std::mutex, kLockStripes>& lock_table() {
  static std::array<std::mutex, kLockStripes> locks;
  return locks;
}
inline std::mutex& lock_for(NodeId row) {
  return lock_table()[row & (kLockStripes - 1)];
}

// ---------------------------------------------------------------------
// Traversals.

// Owner-computes row traversal shared by Pull and RowParallelSpmm. Rows
// of g are the output entity (or enumerate edges uniquely for edge
// outputs), so no synchronization is needed. Pull materializes each
// message in a scratch buffer before reducing, Spmm fuses.
template <class B, class R, bool kMaterialize>
void run_rowmajor(const KernelCtx& c) {
  const CsrGraph& g = *c.g;
  const std::int64_t n = g.num_rows;
#pragma omp parallel num_threads(c.threads)
  {
    std::vector<float> scratch(kMaterialize ? c.w : 0);
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t r = 0; r < n; ++r) {
      for (EdgeId j = g.indptr[r]; j < g.indptr[r + 1]; ++j) {
        const NodeId other = g.indices[j];
        const EdgeId e = g.edge_ids[j];
        NodeId u, v;
        split_endpoints(g, static_cast<NodeId>(r), other, u, v);
        const float* lp = c.lhs.row(u, v, e);
        const float* rp = c.rhs.entity >= 0 ? c.rhs.row(u, v, e) : nullptr;
        float* op = c.out_entity == kE ? c.out->row(e) : c.out->row(r);
        if constexpr (std::is_same_v<B, DotB>) {
          apply_dot<R>(op, lp, c.lhs.stride, rp, c.rhs.stride, c.gather_dim);
        } else if constexpr (kMaterialize) {
          apply_span<B, LastR>(scratch.data(), lp, c.lhs.stride, rp,
                               c.rhs.stride, c.w);
          apply_span<CopyB, R>(op, scratch.data(), 1, nullptr, 0, c.w);
        } else {
          apply_span<B, R>(op, lp, c.lhs.stride, rp, c.rhs.stride, c.w);
        }
      }
    }
  }
}

// Push traversal: rows of g are the scattering side, output rows belong
// to the opposite endpoint and are guarded by the lock table. Keeps the
// copy-to-buffer step of the baseline. For CopyLast outputs the canonical
// winner (highest (row, eid) key) is tracked explicitly, since arrival
// order here depends on thread timing.
template <class B, class R>
void run_push(const KernelCtx& c) {
  const CsrGraph& g = *c.g;
  const std::int64_t n = g.num_rows;
  constexpr bool kMinMax =
      std::is_same_v<R, MaxR> || std::is_same_v<R, MinR>;
  constexpr bool kLast = std::is_same_v<R, LastR>;
  const bool node_out = c.out_entity != kE;

  std::vector<std::uint8_t> touched;
  std::vector<std::pair<NodeId, EdgeId>> winner;
  if (node_out && (kMinMax || kLast)) touched.assign(c.out->rows, 0);
  if (node_out && kLast) winner.assign(c.out->rows, {0, 0});

  // The Alg-1 shape: when the copied operand lives on the traversal row,
  // hoist the buffer copy out of the inner loop.
  const int row_entity = g.orientation == Orientation::SrcMajor ? kU : kV;
  const bool hoist_copy =
      std::is_same_v<B, CopyB> && c.lhs.entity == row_entity;

#pragma omp parallel num_threads(c.threads)
  {
    std::vector<float> scratch(c.w);
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t r = 0; r < n; ++r) {
      if (hoist_copy && g.indptr[r] < g.indptr[r + 1])
        std::memcpy(scratch.data(), c.lhs.base + r * c.lhs.dim,
                    sizeof(float) * c.w);
      for (EdgeId j = g.indptr[r]; j < g.indptr[r + 1]; ++j) {
        const NodeId other = g.indices[j];
        const EdgeId e = g.edge_ids[j];
        NodeId u, v;
        split_endpoints(g, static_cast<NodeId>(r), other, u, v);
        if (!hoist_copy) {
          const float* lp = c.lhs.row(u, v, e);
          const float* rp = c.rhs.entity >= 0 ? c.rhs.row(u, v, e) : nullptr;
          if constexpr (std::is_same_v<B, DotB>) {
            float acc = 0.0f;
            for (std::int64_t i = 0; i < c.gather_dim; ++i)
              acc += lp[i * c.lhs.stride] * rp[i * c.rhs.stride];
            scratch[0] = acc;
          } else {
            apply_span<B, LastR>(scratch.data(), lp, c.lhs.stride, rp,
                                 c.rhs.stride, c.w);
          }
        }
        if (!node_out) {
          std::memcpy(c.out->row(e), scratch.data(), sizeof(float) * c.w);
          continue;
        }
        float* op = c.out->row(other);
        std::lock_guard<std::mutex> lk(lock_for(other));
        if constexpr (kLast) {
          const std::pair<NodeId, EdgeId> key{static_cast<NodeId>(r), e};
          if (!touched[other] || winner[other] < key) {
            winner[other] = key;
            touched[other] = 1;
            std::memcpy(op, scratch.data(), sizeof(float) * c.w);
          }
        } else {
          apply_span<CopyB, R>(op, scratch.data(), 1, nullptr, 0, c.w);
          if constexpr (kMinMax) touched[other] = 1;
        }
      }
    }
  }

  if (node_out && kMinMax) {
    const std::int64_t rows = c.out->rows;
#pragma omp parallel for num_threads(c.threads) schedule(static)
    for (std::int64_t r = 0; r < rows; ++r)
      if (!touched[r])
        std::memset(c.out->row(r), 0, sizeof(float) * c.w);
  }
}

// Blocked pull traversal. Threads own disjoint output-row ranges and
// sweep the K-blocks in the same order, so concurrently gathered source
// rows share a kb-window; the output is processed nb columns per panel.
template <class B, class R>
void run_blocked(const KernelCtx& c, const BlockPlan& plan) {
  const auto tv = plan.view(c.threads);
  const std::size_t nblocks = plan.num_blocks;
  const bool rows_dst = plan.built_for == Orientation::DstMajor;
  const std::int64_t nb =
      std::is_same_v<B, DotB> ? 1 : std::min<std::int64_t>(plan.nb, c.w);

#pragma omp parallel num_threads(c.threads)
  {
    const int tid = omp_get_thread_num();
    const int active = omp_get_num_threads();
    // If OpenMP grants fewer threads than the view was cut for, pick up
    // the orphaned slices round-robin.
    for (int slice = tid; slice < tv->threads; slice += active) {
      const std::uint64_t* off = tv->off.data() +
                                 static_cast<std::size_t>(slice) * nblocks;
      for (std::int64_t n0 = 0; n0 < c.w; n0 += nb) {
        const std::int64_t wn = std::min<std::int64_t>(nb, c.w - n0);
        for (std::size_t b = 0; b < nblocks; ++b) {
          for (std::uint64_t k = off[b]; k < off[b + 1]; ++k) {
            const NodeId gathered = tv->src[k];
            const NodeId owner = tv->dst[k];
            const EdgeId e = tv->eid[k];
            const NodeId u = rows_dst ? gathered : owner;
            const NodeId v = rows_dst ? owner : gathered;
            const float* lp = c.lhs.row(u, v, e);
            const float* rp =
                c.rhs.entity >= 0 ? c.rhs.row(u, v, e) : nullptr;
            float* op =
                c.out_entity == kE ? c.out->row(e) : c.out->row(owner);
            if constexpr (std::is_same_v<B, DotB>) {
              apply_dot<R>(op, lp, c.lhs.stride, rp, c.rhs.stride,
                           c.gather_dim);
            } else {
              apply_span<B, R>(op + n0,
                               lp + (c.lhs.stride ? n0 : 0), c.lhs.stride,
                               rp ? rp + (c.rhs.stride ? n0 : 0) : nullptr,
                               c.rhs.stride, wn);
            }
          }
        }
      }
    }
  }
}

// ---------------------------------------------------------------------
// Dispatch.

template <class F>
void with_reduce(ReduceOp op, F&& f) {
  switch (op) {
    case ReduceOp::Sum: f(SumR{}); return;
    case ReduceOp::Max: f(MaxR{}); return;
    case ReduceOp::Min: f(MinR{}); return;
    case ReduceOp::Prod: f(ProdR{}); return;
    case ReduceOp::CopyLast: f(LastR{}); return;
  }
}

template <class F>
void with_binary(BinaryOp op, F&& f) {
  switch (op) {
    case BinaryOp::Add: f(AddB{}); return;
    case BinaryOp::Sub: f(SubB{}); return;
    case BinaryOp::Mul: f(MulB{}); return;
    case BinaryOp::Div: f(DivB{}); return;
    case BinaryOp::Dot: f(DotB{}); return;
    case BinaryOp::CopyLhs: f(CopyB{}); return;
  }
}

struct EntityCounts {
  std::int64_t nu, nv, ne;
  std::int64_t of(int entity) const {
    return entity == kU ? nu : entity == kV ? nv : ne;
  }
};

OperandRef bind_operand(Operand o, const FeatureMatrix* f,
                        const EntityCounts& counts) {
  OperandRef ref;
  if (o == Operand::None) return ref;
  if (!f) {
    throw ShapeError(std::string("missing feature matrix for operand ") +
                     to_string(o));
  }
  ref.entity = entity_of(o);
  if (f->rows != counts.of(ref.entity))
    throw ShapeError(std::string("operand ") + to_string(o) + " has " +
                     std::to_string(f->rows) + " rows, entity has " +
                     std::to_string(counts.of(ref.entity)));
  ref.base = f->data.data();
  ref.dim = f->dim;
  return ref;
}

}  // namespace

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Push: return "push";
    case Strategy::Pull: return "pull";
    case Strategy::BlockedPull: return "blocked";
    case Strategy::RowParallelSpmm: return "spmm";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "push") return Strategy::Push;
  if (name == "pull") return Strategy::Pull;
  if (name == "blocked") return Strategy::BlockedPull;
  if (name == "spmm") return Strategy::RowParallelSpmm;
  throw ConfigError("unknown strategy '" + std::string(name) +
                    "' (expected push|pull|blocked|spmm)");
}

Orientation required_orientation(Strategy s, Operand out) {
  const bool owner_rows = s != Strategy::Push;
  switch (out) {
    case Operand::V:
    case Operand::E:
      return owner_rows ? Orientation::DstMajor : Orientation::SrcMajor;
    case Operand::U:
      return owner_rows ? Orientation::SrcMajor : Orientation::DstMajor;
    default:
      throw ConfigError("output target must be u, v or e");
  }
}

FeatureMatrix binary_reduce(Strategy strategy, const CsrGraph& g,
                            const BrConfig& cfg, const FeatureMatrix* u_feats,
                            const FeatureMatrix* v_feats,
                            const FeatureMatrix* e_feats,
                            const BlockPlan* plan, int threads) {
  validate_config(cfg);
  const Orientation need = required_orientation(strategy, cfg.out);
  if (g.orientation != need)
    throw ShapeError(std::string("strategy ") + to_string(strategy) +
                     " with output " + to_string(cfg.out) + " needs a " +
                     to_string(need) + " graph, got " +
                     to_string(g.orientation));

  EntityCounts counts{static_cast<std::int64_t>(g.num_src_nodes()),
                      static_cast<std::int64_t>(g.num_dst_nodes()),
                      static_cast<std::int64_t>(g.num_edges())};

  KernelCtx ctx;
  ctx.g = &g;
  ctx.lhs = bind_operand(cfg.lhs, cfg.lhs == Operand::U   ? u_feats
                                  : cfg.lhs == Operand::V ? v_feats
                                                          : e_feats,
                         counts);
  if (cfg.rhs != Operand::None) {
    ctx.rhs = bind_operand(cfg.rhs, cfg.rhs == Operand::U   ? u_feats
                                    : cfg.rhs == Operand::V ? v_feats
                                                            : e_feats,
                           counts);
    if (!dims_broadcastable(ctx.lhs.dim, ctx.rhs.dim))
      throw ShapeError("operand widths are not broadcast-compatible");
  }
  ctx.out_entity = entity_of(cfg.out);
  ctx.w = binary_out_dim(cfg.binary, ctx.lhs.dim,
                         cfg.rhs == Operand::None ? ctx.lhs.dim
                                                  : ctx.rhs.dim);
  ctx.gather_dim = cfg.rhs == Operand::None
                       ? ctx.lhs.dim
                       : std::max(ctx.lhs.dim, ctx.rhs.dim);
  ctx.lhs.stride = (ctx.lhs.dim == 1 && ctx.gather_dim > 1) ? 0 : 1;
  if (cfg.rhs != Operand::None)
    ctx.rhs.stride = (ctx.rhs.dim == 1 && ctx.gather_dim > 1) ? 0 : 1;
  ctx.threads = threads > 0 ? threads : omp_get_max_threads();

  FeatureMatrix out(counts.of(ctx.out_entity), ctx.w);
  ctx.out = &out;

  const float ident = reduce_identity(cfg.reduce);
  if (ident != 0.0f) std::fill(out.data.begin(), out.data.end(), ident);

  if (strategy == Strategy::BlockedPull) {
    if (!plan) throw ShapeError("BlockedPull requires a BlockPlan");
    if (plan->built_for != g.orientation || plan->num_rows != g.num_rows ||
        plan->num_cols != g.num_cols || plan->num_edges() != g.num_edges())
      throw ShapeError("BlockPlan was not built for this graph");
  }

  with_binary(cfg.binary, [&](auto bt) {
    using B = decltype(bt);
    with_reduce(cfg.reduce, [&](auto rt) {
      using R = decltype(rt);
      switch (strategy) {
        case Strategy::Push:
          run_push<B, R>(ctx);
          break;
        case Strategy::Pull:
          run_rowmajor<B, R, true>(ctx);
          break;
        case Strategy::BlockedPull:
          run_blocked<B, R>(ctx, *plan);
          break;
        case Strategy::RowParallelSpmm:
          run_rowmajor<B, R, false>(ctx);
          break;
      }
    });
  });

  // Zero-degree rows read as zero under Max/Min (push handles its own via
  // touch flags; here the traversal rows are the output rows).
  if (strategy != Strategy::Push && cfg.out != Operand::E &&
      (cfg.reduce == ReduceOp::Max || cfg.reduce == ReduceOp::Min)) {
    const std::int64_t rows = out.rows;
#pragma omp parallel for num_threads(ctx.threads) schedule(static)
    for (std::int64_t r = 0; r < rows; ++r)
      if (g.indptr[r] == g.indptr[r + 1])
        std::memset(out.row(r), 0, sizeof(float) * ctx.w);
  }
  return out;
}

FeatureMatrix copy_reduce(Strategy strategy, const CsrGraph& g,
                          const FeatureMatrix& src_feats, ReduceOp reduce,
                          const BlockPlan* plan, int threads) {
  BrConfig cfg;
  cfg.binary = BinaryOp::CopyLhs;
  cfg.rhs = Operand::None;
  cfg.reduce = reduce;
  cfg.out = Operand::V;
  const std::int64_t nu = g.num_src_nodes();
  const std::int64_t ne = g.num_edges();
  if (src_feats.rows == nu) {
    cfg.lhs = Operand::U;
  } else if (src_feats.rows == ne) {
    cfg.lhs = Operand::E;
  } else {
    throw ShapeError("copy_reduce: source rows match neither the node nor "
                     "the edge count");
  }
  const FeatureMatrix* u = cfg.lhs == Operand::U ? &src_feats : nullptr;
  const FeatureMatrix* e = cfg.lhs == Operand::E ? &src_feats : nullptr;
  return binary_reduce(strategy, g, cfg, u, nullptr, e, plan, threads);
}

}  // namespace gspmm
