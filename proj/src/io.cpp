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
#include "gspmm/io.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

#include "gspmm/error.hpp"

static_assert(std::endian::native == std::endian::little,
              "binary containers assume a little-endian host");

namespace gspmm {

namespace {

[[noreturn]] void line_error(const std::string& path, std::size_t line,
                             const char* what) {
  std::ostringstream os;
  os << path << ":" << line << ": " << what;
  throw ParseError(os.str());
}

// Parses a decimal field, advancing *s past it and any following blanks.
bool parse_u64(const char*& s, const char* end, std::uint64_t& out) {
  while (s < end && (*s == ' ' || *s == '\t')) ++s;
  const auto [ptr, ec] = std::from_chars(s, end, out);
  if (ec != std::errc{} || ptr == s) return false;
  s = ptr;
  while (s < end && (*s == ' ' || *s == '\t')) ++s;
  return true;
}

void write_u64(std::ostream& os, std::uint64_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

std::uint64_t read_u64(std::istream& is, const std::string& path) {
  std::uint64_t v = 0;
  if (!is.read(reinterpret_cast<char*>(&v), sizeof(v)))
    throw IoError(path + ": truncated file");
  return v;
}

template <class T>
void write_u64_array(std::ostream& os, const std::vector<T>& a) {
  for (const T v : a) write_u64(os, static_cast<std::uint64_t>(v));
}

template <class T>
void read_u64_array(std::istream& is, const std::string& path,
                    std::vector<T>& a, std::size_t count) {
  a.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t v = read_u64(is, path);
    if (v > std::numeric_limits<T>::max())
      throw IoError(path + ": id does not fit the configured id width");
    a[i] = static_cast<T>(v);
  }
}

}  // namespace

EdgeList load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  EdgeList el;
  bool have_header = false;
  std::uint64_t header_nodes = 0;
  std::uint64_t max_id = 0;
  std::string line;
  std::size_t lineno = 0;
  constexpr std::uint64_t id_cap = std::numeric_limits<NodeId>::max();

  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body(line);
    if (const auto hash = body.find('#'); hash != std::string_view::npos)
      body = body.substr(0, hash);
    const char* s = body.data();
    const char* end = s + body.size();
    while (s < end && (*s == ' ' || *s == '\t' || *s == '\r')) ++s;
    if (s == end) continue;

    if (*s == '%') {
      const std::string_view rest(s, static_cast<std::size_t>(end - s));
      if (rest.rfind("%nodes", 0) != 0)
        line_error(path, lineno, "unknown '%' directive");
      const char* p = s + 6;
      std::uint64_t n = 0;
      if (!parse_u64(p, end, n))
        line_error(path, lineno, "bad %nodes value");
      if (n > id_cap) line_error(path, lineno, "%nodes overflows id width");
      have_header = true;
      header_nodes = n;
      continue;
    }

    std::uint64_t src = 0, dst = 0;
    if (!parse_u64(s, end, src) || !parse_u64(s, end, dst))
      line_error(path, lineno, "expected 'src dst'");
    // allow trailing \r from CRLF files
    while (s < end && *s == '\r') ++s;
    if (s != end) line_error(path, lineno, "trailing garbage after edge");
    if (src >= id_cap || dst >= id_cap)
      line_error(path, lineno, "node id overflows id width");
    if (have_header && (src >= header_nodes || dst >= header_nodes))
      line_error(path, lineno, "node id >= %nodes");
    max_id = std::max({max_id, src, dst});
    el.edges.push_back(
        {static_cast<NodeId>(src), static_cast<NodeId>(dst)});
  }
  el.num_nodes = have_header ? static_cast<NodeId>(header_nodes)
               : el.edges.empty() ? 0
                                  : static_cast<NodeId>(max_id + 1);
  return el;
}

void save_edge_list(const std::string& path, const EdgeList& el) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "%nodes " << el.num_nodes << "\n";
  for (const Edge& e : el.edges) out << e.src << " " << e.dst << "\n";
  if (!out) throw IoError("write failed: " + path);
}

void save_feature_matrix(const std::string& path, const FeatureMatrix& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write("FMAT1", 5);
  write_u64(out, static_cast<std::uint64_t>(f.rows));
  write_u64(out, static_cast<std::uint64_t>(f.dim));
  out.write(reinterpret_cast<const char*>(f.data.data()),
            static_cast<std::streamsize>(f.data.size() * sizeof(float)));
  if (!out) throw IoError("write failed: " + path);
}

FeatureMatrix load_feature_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char magic[5];
  if (!in.read(magic, 5) || std::memcmp(magic, "FMAT1", 5) != 0)
    throw IoError(path + ": not a FMAT1 file");
  FeatureMatrix f;
  f.rows = static_cast<std::int64_t>(read_u64(in, path));
  f.dim = static_cast<std::int64_t>(read_u64(in, path));
  if (f.rows < 0 || f.dim < 0) throw IoError(path + ": bad dimensions");
  f.data.resize(static_cast<std::size_t>(f.rows * f.dim));
  if (!in.read(reinterpret_cast<char*>(f.data.data()),
               static_cast<std::streamsize>(f.data.size() * sizeof(float))))
    throw IoError(path + ": truncated data section");
  return f;
}

void save_csr(const std::string& path, const CsrGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write("CSR1", 4);
  const char orient = g.orientation == Orientation::DstMajor ? 1 : 0;
  out.write(&orient, 1);
  write_u64(out, g.num_rows);
  write_u64(out, g.num_cols);
  write_u64(out, g.num_edges());
  write_u64_array(out, g.indptr);
  write_u64_array(out, g.indices);
  write_u64_array(out, g.edge_ids);
  if (!out) throw IoError("write failed: " + path);
}

CsrGraph load_csr(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, "CSR1", 4) != 0)
    throw IoError(path + ": not a CSR1 file");
  char orient = 0;
  if (!in.read(&orient, 1)) throw IoError(path + ": truncated file");
  CsrGraph g;
  g.orientation = orient ? Orientation::DstMajor : Orientation::SrcMajor;
  g.num_rows = static_cast<NodeId>(read_u64(in, path));
  g.num_cols = static_cast<NodeId>(read_u64(in, path));
  const std::uint64_t m = read_u64(in, path);
  read_u64_array(in, path, g.indptr, static_cast<std::size_t>(g.num_rows) + 1);
  read_u64_array(in, path, g.indices, m);
  read_u64_array(in, path, g.edge_ids, m);
  if (const auto bad = validate(g))
    throw IoError(path + ": invalid CSR payload: " + *bad);
  return g;
}

}  // namespace gspmm
