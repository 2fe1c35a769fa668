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

#include <random>
#include <set>
#include <sstream>

#include "gtest/gtest.h"

#include "besmub/quantum_oracle.hpp"

using namespace besmub;

TEST(cayley_graph, small_counts) {
  auto g2 = build_graph(Prime(2));
  EXPECT_EQ(g2.size(), 6u);
  EXPECT_EQ(g2.edge_count(), 6u);
  auto g3 = build_graph(Prime(3));
  EXPECT_EQ(g3.size(), 24u);
  EXPECT_EQ(g3.edge_count(), 180u);
}

TEST(cayley_graph, regular_loopless_symmetric) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto g = build_graph(Prime(p));
    for (std::size_t i = 0; i < g.size(); i++) {
      EXPECT_FALSE(g.adjacent(i, i));
      EXPECT_EQ(g.degree(i), g.expected_degree());
      for (std::size_t j = i + 1; j < g.size(); j++) {
        ASSERT_EQ(g.adjacent(i, j), g.adjacent(j, i));
      }
    }
    EXPECT_EQ(g.edge_count(), g.size() * g.expected_degree() / 2);
  }
}

TEST(cayley_graph, adjacency_is_trace_condition) {
  auto g = build_graph(Prime(5));
  for (std::size_t i = 0; i < g.size(); i++) {
    for (std::size_t j = 0; j < g.size(); j++) {
      auto q = sl2_inv(g.vertex(i)) * g.vertex(j);
      ASSERT_EQ(g.adjacent(i, j), q.trace() != 2 % 5);
    }
  }
}

TEST(cayley_graph, connection_set_closed_under_inverse) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (const auto &f : enumerate_sl2(Prime(p))) {
      bool in_t = f.trace() != 2;
      EXPECT_EQ(in_t, sl2_inv(f).trace() != 2);
    }
  }
}

TEST(cayley_graph, left_translation_preserves_edges) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    auto g = build_graph(Prime(p));
    std::mt19937_64 rng(p);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int trial = 0; trial < 100; trial++) {
      auto f = g.vertex(pick(rng));
      std::size_t a = pick(rng), b = pick(rng);
      auto fa = g.require_index(f * g.vertex(a));
      auto fb = g.require_index(f * g.vertex(b));
      EXPECT_EQ(g.adjacent(a, b), g.adjacent(fa, fb));
    }
  }
}

TEST(cayley_graph, vertex_order_and_lookup) {
  auto g = build_graph(Prime(5));
  EXPECT_EQ(g.vertices(), enumerate_sl2(Prime(5)));
  for (std::size_t i = 0; i < g.size(); i++) EXPECT_EQ(g.index_of(g.vertex(i)), i);
  EXPECT_FALSE(g.index_of(Sl2Matrix::identity(Prime(3))).has_value());
  EXPECT_THROW(g.require_index(Sl2Matrix::identity(Prime(3))), std::out_of_range);
}

TEST(cayley_graph, identity_not_self_adjacent) {
  for (std::uint32_t p : {2u, 3u, 13u}) {
    auto g = build_graph(Prime(p));
    auto id = g.require_index(Sl2Matrix::identity(Prime(p)));
    EXPECT_FALSE(g.adjacent(id, id));
  }
}

TEST(cayley_graph, cap) {
  EXPECT_THROW(build_graph(Prime(29)), std::out_of_range);
  EXPECT_THROW(build_graph(Prime(7), 5), std::out_of_range);
}

TEST(row_coloring, proper_with_full_classes) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    auto g = build_graph(Prime(p));
    auto c = row_coloring(g);
    EXPECT_EQ(c.num_colors, p * p - 1);
    EXPECT_TRUE(is_proper_coloring(g, c));
    std::vector<std::size_t> sizes(c.num_colors, 0);
    for (auto col : c.colors) sizes.at(col)++;
    for (auto s : sizes) EXPECT_EQ(s, p);
  }
}

TEST(row_coloring, same_row_means_same_color_and_non_adjacent) {
  auto g = build_graph(Prime(5));
  auto c = row_coloring(g);
  for (std::size_t i = 0; i < g.size(); i++) {
    for (std::size_t j = i + 1; j < g.size(); j++) {
      const auto &a = g.vertex(i);
      const auto &b = g.vertex(j);
      if (a.alpha == b.alpha && a.beta == b.beta) {
        EXPECT_EQ(c.colors[i], c.colors[j]);
        EXPECT_FALSE(g.adjacent(i, j));
      }
    }
  }
}

TEST(row_coloring, improper_detected) {
  auto g = build_graph(Prime(3));
  VertexColoring c{std::vector<std::uint32_t>(g.size(), 0), 1};
  EXPECT_FALSE(is_proper_coloring(g, c));
}

TEST(independent_row_sets, partition_into_independent_sets) {
  for (std::uint32_t p : {3u, 5u}) {
    auto g = build_graph(Prime(p));
    auto sets = independent_row_sets(g);
    ASSERT_EQ(sets.size(), p * p - 1);
    std::set<std::size_t> seen;
    for (const auto &s : sets) {
      EXPECT_EQ(s.size(), p);
      EXPECT_TRUE(is_independent(g, s));
      seen.insert(s.begin(), s.end());
    }
    EXPECT_EQ(seen.size(), g.size());
  }
}

TEST(dimacs, problem_lines) {
  auto text2 = export_dimacs(build_graph(Prime(2)));
  EXPECT_NE(text2.find("\np edge 6 6\n"), std::string::npos);
  auto text3 = export_dimacs(build_graph(Prime(3)));
  EXPECT_NE(text3.find("\np edge 24 180\n"), std::string::npos);
  EXPECT_EQ(text3, export_dimacs(build_graph(Prime(3))));
}

TEST(dimacs, edges_one_based_ascending) {
  std::istringstream in(export_dimacs(build_graph(Prime(3))));
  std::string line;
  std::size_t edges = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] != 'e') continue;
    std::istringstream ls(line.substr(2));
    std::size_t i = 0, j = 0;
    ls >> i >> j;
    EXPECT_GE(i, 1u);
    EXPECT_LT(i, j);
    EXPECT_LE(j, 24u);
    edges++;
  }
  EXPECT_EQ(edges, 180u);
}

TEST(dimacs, round_trip) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto g = build_graph(Prime(p));
    auto parsed = parse_dimacs(export_dimacs(g));
    ASSERT_EQ(parsed.num_vertices, g.size());
    EXPECT_EQ(parsed.num_edges, g.edge_count());
    for (std::size_t i = 0; i < g.size(); i++) EXPECT_EQ(parsed.rows[i], g.neighbours(i));
  }
}

TEST(dimacs, malformed_input) {
  EXPECT_THROW(parse_dimacs("e 1 2\n"), std::runtime_error);
  EXPECT_THROW(parse_dimacs("p edge 3 1\ne 1 4\n"), std::runtime_error);
  EXPECT_THROW(parse_dimacs("p edge 3 2\ne 1 2\n"), std::runtime_error);
  EXPECT_THROW(parse_dimacs("p edge 3 1\ne 2 2\n"), std::runtime_error);
}

TEST(vertex_table, json_layout) {
  auto g = build_graph(Prime(3));
  auto j = vertex_table_json(g);
  EXPECT_EQ(j["p"], 3);
  ASSERT_EQ(j["vertices"].size(), 24u);
  EXPECT_EQ(j["vertices"][0]["index"], 0);
  EXPECT_EQ(j["vertices"][0]["gamma"], 2);
}

TEST(cayley_graph, oracle_cross_check) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    auto g = build_graph(Prime(p));
    std::mt19937_64 rng(7 * p);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int trial = 0; trial < 200; trial++) {
      std::size_t i = pick(rng), j = pick(rng);
      ComplexMatrix ci = build_clifford({g.vertex(i), {0, 0}});
      ComplexMatrix cj = build_clifford({g.vertex(j), {0, 0}});
      double t = std::abs((ci.adjoint() * cj).trace());
      EXPECT_EQ(g.adjacent(i, j), std::abs(t - 1.0) <= tolerance::kVerification)
          << "p=" << p << " i=" << i << " j=" << j << " |tr|=" << t;
    }
  }
}
