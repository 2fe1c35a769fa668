// Copyright 2026 The besmub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "besmub/cayley_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace besmub {

std::uint64_t CayleyGraph::edge_count() const noexcept {
  std::uint64_t twice = 0;
  for (const auto &row : rows_) twice += row.count();
  return twice / 2;
}

std::optional<std::size_t> CayleyGraph::index_of(const Sl2Matrix &m) const noexcept {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), m);
  if (it == vertices_.end() || *it != m) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t CayleyGraph::require_index(const Sl2Matrix &m) const {
  auto idx = index_of(m);
  if (!idx) throw std::out_of_range("matrix " + to_string(m) + " is not a vertex of the p = " +
                                    std::to_string(p_.value()) + " graph");
  return *idx;
}

CayleyGraph build_graph(Prime p, std::uint32_t max_prime) {
  if (p.value() > max_prime) {
    throw std::out_of_range("p = " + std::to_string(p.value()) + " exceeds the graph size cap " +
                            std::to_string(max_prime));
  }
  CayleyGraph g(p);
  g.vertices_ = enumerate_sl2(p);
  const std::size_t n = g.vertices_.size();
  g.rows_.assign(n, VertexSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Sl2Matrix &a = g.vertices_[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (trace_of_quotient(a, g.vertices_[j]) != 2 % p.value()) {
        g.rows_[i].set(j);
        g.rows_[j].set(i);
      }
    }
  }
  return g;
}

VertexColoring row_coloring(const CayleyGraph &g) {
  const std::uint32_t p = g.p();
  VertexColoring c;
  c.num_colors = p * p - 1;
  c.colors.reserve(g.size());
  for (const auto &m : g.vertices()) c.colors.push_back(m.alpha * p + m.beta - 1);
  return c;
}

bool is_proper_coloring(const CayleyGraph &g, const VertexColoring &c) {
  if (c.colors.size() != g.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto &row = g.neighbours(i);
    for (std::size_t j = row.next(i + 1); j != VertexSet::npos; j = row.next(j + 1)) {
      if (c.colors[i] == c.colors[j]) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> independent_row_sets(const CayleyGraph &g) {
  const auto coloring = row_coloring(g);
  std::vector<std::vector<std::size_t>> sets(coloring.num_colors);
  for (std::size_t i = 0; i < g.size(); ++i) sets[coloring.colors[i]].push_back(i);
  return sets;
}

bool is_independent(const CayleyGraph &g, std::span<const std::size_t> members) {
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (members[a] >= g.size()) throw std::out_of_range("vertex index out of range");
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (members[a] == members[b] || g.adjacent(members[a], members[b])) return false;
    }
  }
  return true;
}

std::string export_dimacs(const CayleyGraph &g) {
  std::ostringstream out;
  out << "c Cayley graph of SL(2,Z_" << g.p().value() << "), edge iff Tr(F_i^-1 F_j) != 2 mod p\n";
  out << "c vertex k (1-based) is the (k-1)-th matrix in lexicographic (alpha,beta,gamma,delta) order\n";
  out << "p edge " << g.size() << " " << g.edge_count() << "\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto &row = g.neighbours(i);
    for (std::size_t j = row.next(i + 1); j != VertexSet::npos; j = row.next(j + 1)) {
      out << "e " << i + 1 << " " << j + 1 << "\n";
    }
  }
  return out.str();
}

DimacsGraph parse_dimacs(std::string_view text) {
  DimacsGraph out;
  bool have_header = false;
  std::size_t seen_edges = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    char kind = 0;
    ls >> kind;
    auto fail = [&](const std::string &why) {
      throw std::runtime_error("DIMACS line " + std::to_string(line_no) + ": " + why);
    };
    if (kind == 'p') {
      std::string format;
      if (!(ls >> format >> out.num_vertices >> out.num_edges) || (format != "edge" && format != "col")) {
        fail("bad problem line");
      }
      if (have_header) fail("duplicate problem line");
      have_header = true;
      out.rows.assign(out.num_vertices, VertexSet(out.num_vertices));
    } else if (kind == 'e') {
      if (!have_header) fail("edge before problem line");
      std::size_t a = 0, b = 0;
      if (!(ls >> a >> b) || a == 0 || b == 0 || a > out.num_vertices || b > out.num_vertices || a == b) {
        fail("bad edge");
      }
      out.rows[a - 1].set(b - 1);
      out.rows[b - 1].set(a - 1);
      ++seen_edges;
    } else {
      fail("unknown line type");
    }
  }
  if (!have_header) throw std::runtime_error("DIMACS: missing problem line");
  if (seen_edges != out.num_edges) {
    throw std::runtime_error("DIMACS: header declares " + std::to_string(out.num_edges) + " edges, found " +
                             std::to_string(seen_edges));
  }
  return out;
}

nlohmann::json vertex_table_json(const CayleyGraph &g) {
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto &m = g.vertex(i);
    table.push_back({{"index", i}, {"alpha", m.alpha}, {"beta", m.beta}, {"gamma", m.gamma}, {"delta", m.delta}});
  }
  return {{"p", g.p().value()}, {"vertices", table}};
}

}  // namespace besmub
