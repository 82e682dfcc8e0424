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
#include "gspmm/br_config.hpp"

#include <array>
#include <optional>

#include "gspmm/error.hpp"

namespace gspmm {

namespace {

std::optional<Operand> parse_operand(std::string_view t) {
  if (t == "u") return Operand::U;
  if (t == "v") return Operand::V;
  if (t == "e") return Operand::E;
  return std::nullopt;
}

std::optional<BinaryOp> parse_binary(std::string_view t) {
  if (t == "add") return BinaryOp::Add;
  if (t == "sub") return BinaryOp::Sub;
  if (t == "mul") return BinaryOp::Mul;
  if (t == "div") return BinaryOp::Div;
  if (t == "dot") return BinaryOp::Dot;
  return std::nullopt;
}

std::optional<ReduceOp> parse_reduce(std::string_view t) {
  if (t == "add") return ReduceOp::Sum;
  if (t == "max") return ReduceOp::Max;
  if (t == "min") return ReduceOp::Min;
  if (t == "mul") return ReduceOp::Prod;
  if (t == "copy") return ReduceOp::CopyLast;
  return std::nullopt;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

[[noreturn]] void bad_name(std::string_view name, const char* why) {
  throw ConfigError("invalid config name '" + std::string(name) + "': " +
                    why);
}

}  // namespace

const char* to_string(Operand o) {
  switch (o) {
    case Operand::U: return "u";
    case Operand::V: return "v";
    case Operand::E: return "e";
    case Operand::None: return "none";
  }
  return "?";
}

void validate_config(const BrConfig& cfg) {
  if (cfg.lhs == Operand::None)
    throw ConfigError("lhs operand must be u, v or e");
  if (cfg.out == Operand::None)
    throw ConfigError("output target must be u, v or e");
  if ((cfg.rhs == Operand::None) != (cfg.binary == BinaryOp::CopyLhs))
    throw ConfigError("rhs is absent exactly for the copy operator");
  if (cfg.rhs != Operand::None && cfg.rhs == cfg.lhs)
    throw ConfigError("lhs and rhs must bind to different entities");
  if (cfg.out == Operand::E && cfg.reduce != ReduceOp::CopyLast)
    throw ConfigError("edge-destined configs store, reduce must be copy");
}

BrConfig named_config(std::string_view name) {
  const auto tokens = split(name, '_');
  BrConfig cfg;
  if (tokens.size() == 4) {
    // {u,e}_copy_<redop>_v
    const auto lhs = parse_operand(tokens[0]);
    const auto red = parse_reduce(tokens[2]);
    if (!lhs || tokens[1] != "copy" || !red || tokens[3] != "v")
      bad_name(name, "expected {u,e}_copy_{add,max,min,mul,copy}_v");
    if (*lhs == Operand::V) bad_name(name, "copy source must be u or e");
    cfg.lhs = *lhs;
    cfg.rhs = Operand::None;
    cfg.binary = BinaryOp::CopyLhs;
    cfg.reduce = *red;
    cfg.out = Operand::V;
  } else if (tokens.size() == 5) {
    const auto lhs = parse_operand(tokens[0]);
    const auto bin = parse_binary(tokens[1]);
    const auto rhs = parse_operand(tokens[2]);
    const auto red = parse_reduce(tokens[3]);
    const auto out = parse_operand(tokens[4]);
    if (!lhs || !bin || !rhs || !red || !out)
      bad_name(name, "expected {u,v,e}_<binop>_{u,v,e}_<redop>_{u,v,e}");
    cfg.lhs = *lhs;
    cfg.binary = *bin;
    cfg.rhs = *rhs;
    cfg.reduce = *red;
    cfg.out = *out;
    // One message per edge: an edge-destined reduce is a plain store.
    if (cfg.out == Operand::E) cfg.reduce = ReduceOp::CopyLast;
  } else {
    bad_name(name, "expected 4 or 5 '_'-separated tokens");
  }
  validate_config(cfg);
  return cfg;
}

std::string config_name(const BrConfig& cfg) {
  std::string s(to_string(cfg.lhs));
  s += '_';
  s += to_string(cfg.binary);
  s += '_';
  if (cfg.rhs != Operand::None) {
    s += to_string(cfg.rhs);
    s += '_';
  }
  s += to_string(cfg.reduce);
  s += '_';
  s += to_string(cfg.out);
  return s;
}

const std::vector<std::string>& application_configs() {
  static const std::vector<std::string> names = {
      "u_copy_add_v",    // GCN / GraphSAGE / GC-MC / LineGraph / RGCN
      "u_dot_v_add_e",   // GC-MC attention scores
      "u_mul_e_add_v",   // MoNet, GAT weighted aggregation
      "e_copy_add_v",    // GAT
      "e_copy_max_v",    // GAT
      "u_add_v_copy_e",  // GAT
      "e_sub_v_copy_e",  // GAT
      "e_div_v_copy_e",  // GAT
      "v_mul_e_copy_e",  // GAT
  };
  return names;
}

}  // namespace gspmm
