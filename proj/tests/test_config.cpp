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
#include <doctest.h>

#include "gspmm/br_config.hpp"
#include "gspmm/error.hpp"

using namespace gspmm;

TEST_CASE("named_config parses the copy form") {
  const BrConfig c = named_config("u_copy_add_v");
  CHECK(c.lhs == Operand::U);
  CHECK(c.rhs == Operand::None);
  CHECK(c.binary == BinaryOp::CopyLhs);
  CHECK(c.reduce == ReduceOp::Sum);
  CHECK(c.out == Operand::V);

  const BrConfig e = named_config("e_copy_max_v");
  CHECK(e.lhs == Operand::E);
  CHECK(e.reduce == ReduceOp::Max);
}

TEST_CASE("named_config parses the binary form") {
  const BrConfig c = named_config("e_sub_v_copy_e");
  CHECK(c.lhs == Operand::E);
  CHECK(c.rhs == Operand::V);
  CHECK(c.binary == BinaryOp::Sub);
  CHECK(c.reduce == ReduceOp::CopyLast);
  CHECK(c.out == Operand::E);

  const BrConfig m = named_config("u_mul_e_add_v");
  CHECK(m.lhs == Operand::U);
  CHECK(m.rhs == Operand::E);
  CHECK(m.binary == BinaryOp::Mul);
  CHECK(m.reduce == ReduceOp::Sum);
  CHECK(m.out == Operand::V);
}

TEST_CASE("edge-destined reducers normalize to copy") {
  // one message per edge, so the reducer is a store no matter its name
  const BrConfig c = named_config("u_dot_v_add_e");
  CHECK(c.binary == BinaryOp::Dot);
  CHECK(c.reduce == ReduceOp::CopyLast);
  CHECK(c.out == Operand::E);
}

TEST_CASE("named_config rejects invalid names") {
  CHECK_THROWS_AS(named_config("u_mul_u_add_v"), ConfigError);  // lhs == rhs
  CHECK_THROWS_AS(named_config("nonsense"), ConfigError);
  CHECK_THROWS_AS(named_config("u_copy_add_e"), ConfigError);
  CHECK_THROWS_AS(named_config("v_copy_add_v"), ConfigError);
  CHECK_THROWS_AS(named_config("u_copy_div_v"), ConfigError);
  CHECK_THROWS_AS(named_config("u_frob_v_add_v"), ConfigError);
  CHECK_THROWS_AS(named_config("u_add_v_add_v_extra"), ConfigError);
  CHECK_THROWS_AS(named_config(""), ConfigError);
}

TEST_CASE("every built-in family name parses and round-trips") {
  // the full configuration families, instantiated with every operator
  const char* binops[] = {"add", "sub", "mul", "div", "dot"};
  const char* redops[] = {"add", "max", "min", "mul", "copy"};
  const char* pairs[][2] = {{"u", "v"}, {"v", "u"}, {"u", "e"},
                            {"e", "u"}, {"v", "e"}, {"e", "v"}};
  for (const auto& p : pairs) {
    for (const char* b : binops) {
      for (const char* r : redops) {
        for (const char* out : {"v", "e"}) {
          const std::string name = std::string(p[0]) + "_" + b + "_" + p[1] +
                                   "_" + r + "_" + out;
          const BrConfig cfg = named_config(name);
          CHECK_NOTHROW(validate_config(cfg));
          if (std::string(out) == "v")
            CHECK(config_name(cfg) == name);
        }
      }
    }
  }
  for (const char* src : {"u", "e"}) {
    for (const char* r : redops) {
      const std::string name = std::string(src) + "_copy_" + r + "_v";
      CHECK_NOTHROW(named_config(name));
    }
  }
}

TEST_CASE("application configs all parse") {
  CHECK(application_configs().size() == 9);
  for (const auto& name : application_configs())
    CHECK_NOTHROW(named_config(name));
}

TEST_CASE("validate_config enforces the operand rules") {
  BrConfig c;  // defaults: u copy -> sum -> v
  CHECK_NOTHROW(validate_config(c));

  c.rhs = Operand::U;
  c.binary = BinaryOp::Add;
  CHECK_THROWS_AS(validate_config(c), ConfigError);  // lhs == rhs

  c.rhs = Operand::V;
  c.out = Operand::E;
  CHECK_THROWS_AS(validate_config(c), ConfigError);  // out=e needs copy

  c.reduce = ReduceOp::CopyLast;
  CHECK_NOTHROW(validate_config(c));

  c.rhs = Operand::None;  // copy binary required when rhs absent
  c.binary = BinaryOp::Add;
  CHECK_THROWS_AS(validate_config(c), ConfigError);
}
