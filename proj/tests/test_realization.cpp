#include <doctest.h>

#include <random>

#include "degset/graphicality.hpp"
#include "degset/realization.hpp"

#include "support/oracles.hpp"

using namespace degset;

namespace {

DegreeSequence seq(std::vector<int> values) {
  return DegreeSequence::from_values(std::move(values));
}

Graph complete(int p) {
  Graph g(p);
  for (int u = 0; u < p; ++u)
    for (int v = u + 1; v < p; ++v) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges())
    g.add_edge(u + a.vertex_count(), v + a.vertex_count());
  return g;
}

}  // namespace

TEST_CASE("realize constructs the requested degree sequence") {
  CHECK(degree_sequence_of(realize(seq({2, 2, 2}))) == seq({2, 2, 2}));
  CHECK(degree_sequence_of(realize(seq({5, 4, 4, 3, 3, 3}))) ==
        seq({5, 4, 4, 3, 3, 3}));
  CHECK(degree_sequence_of(realize(seq({3, 2, 1, 1, 1}))) ==
        seq({3, 2, 1, 1, 1}));
  CHECK(realize(seq({1, 1})).edges().size() == 1);
  CHECK_THROWS_AS(realize(seq({3, 1})), NotGraphic);
  CHECK_THROWS_AS(realize(seq({3, 3, 1, 1})), NotGraphic);
}

TEST_CASE("realize is deterministic") {
  auto a = realize(seq({4, 3, 3, 2, 2, 2}));
  auto b = realize(seq({4, 3, 3, 2, 2, 2}));
  CHECK(a.edges() == b.edges());
}

TEST_CASE("split_vertex") {
  Graph triangle = complete(3);
  auto g = split_vertex(triangle, 0, {1, 1});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges().size() == 3);
  CHECK(degree_sequence_of(g) == seq({2, 2, 1, 1}));

  Graph k4 = complete(4);
  auto same = split_vertex(k4, 2, {3});
  CHECK(degree_sequence_of(same) == seq({3, 3, 3, 3}));

  Graph star(5);  // K_{1,4}, center 0
  for (int v = 1; v <= 4; ++v) star.add_edge(0, v);
  auto split = split_vertex(star, 0, {2, 2});
  CHECK(split.vertex_count() == 6);
  CHECK(split.edges().size() == 4);
  CHECK(degree_sequence_of(split) == seq({2, 2, 1, 1, 1, 1}));

  CHECK_THROWS_AS(split_vertex(k4, 0, {1, 1}), BadPartition);
  CHECK_THROWS_AS(split_vertex(k4, 0, {3, 0}), BadPartition);
  CHECK_THROWS_AS(split_vertex(k4, 4, {3}), IndexOutOfRange);
}

TEST_CASE("split_vertex preserves all other degrees") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    // random graphic sequence via a random graph
    int p = 4 + static_cast<int>(rng() % 5);
    Graph g(p);
    for (int u = 0; u < p; ++u)
      for (int v = u + 1; v < p; ++v)
        if (rng() % 2) g.add_edge(u, v);
    auto degs = g.degrees();
    int v = static_cast<int>(rng() % p);
    if (degs[static_cast<std::size_t>(v)] < 2) continue;

    // split off a random prefix of the neighbor list
    int first = 1 + static_cast<int>(
        rng() % (degs[static_cast<std::size_t>(v)] - 1));
    auto h = split_vertex(g, v, {first, degs[static_cast<std::size_t>(v)] - first});

    CHECK(h.vertex_count() == p + 1);
    CHECK(h.edges().size() == g.edges().size());
    auto hd = h.degrees();
    CHECK(hd[static_cast<std::size_t>(p - 1)] == first);
    CHECK(hd[static_cast<std::size_t>(p)] ==
          degs[static_cast<std::size_t>(v)] - first);
    // survivors keep their degrees, shifted past v
    for (int u = 0; u < p; ++u) {
      if (u == v) continue;
      int relabeled = u < v ? u : u - 1;
      CHECK(hd[static_cast<std::size_t>(relabeled)] ==
            degs[static_cast<std::size_t>(u)]);
    }
  }
}

TEST_CASE("reduce_odd_pair on two disjoint cliques") {
  auto g = disjoint_union(complete(4), complete(4));
  auto h = reduce_odd_pair(g, 0, 4);
  CHECK(h.vertex_count() == 9);
  CHECK(h.edges().size() == 12);
  CHECK(degree_sequence_of(h) == seq({3, 3, 3, 3, 3, 3, 2, 2, 2}));
}

TEST_CASE("reduce_odd_pair on two disjoint K_{3,3}") {
  Graph k33(6);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
  auto g = disjoint_union(k33, k33);
  auto h = reduce_odd_pair(g, 0, 6);
  CHECK(h.vertex_count() == 13);
  CHECK(h.edges().size() == 18);
  CHECK(degree_sequence_of(h) ==
        DegreeSequence({{3, 10}, {2, 3}}));
}

TEST_CASE("reduce_odd_pair rejects bad pairs") {
  auto k4 = complete(4);
  CHECK_THROWS_AS(reduce_odd_pair(k4, 0, 1), PreconditionViolated);  // adjacent
  Graph mixed(6);  // degrees 3 and 1: unequal
  mixed.add_edge(0, 1);
  mixed.add_edge(0, 2);
  mixed.add_edge(0, 3);
  mixed.add_edge(4, 5);
  CHECK_THROWS_AS(reduce_odd_pair(mixed, 0, 4), PreconditionViolated);
  Graph paths(6);  // degree 1 < 3
  paths.add_edge(0, 1);
  paths.add_edge(2, 3);
  paths.add_edge(4, 5);
  CHECK_THROWS_AS(reduce_odd_pair(paths, 0, 2), PreconditionViolated);
}

TEST_CASE("reduce_odd_pair randomized invariants") {
  std::mt19937 rng(31337);
  int done = 0;
  while (done < 100) {
    // two independent random components guarantee a nonadjacent pair
    int p = 4 + static_cast<int>(rng() % 4);
    Graph comp(p);
    for (int u = 0; u < p; ++u)
      for (int v = u + 1; v < p; ++v)
        if (rng() % 2) comp.add_edge(u, v);
    auto degs = comp.degrees();
    int x = -1;
    for (int u = 0; u < p; ++u)
      if (degs[static_cast<std::size_t>(u)] >= 3 &&
          degs[static_cast<std::size_t>(u)] % 2 == 1) { x = u; break; }
    if (x < 0) continue;
    int d = degs[static_cast<std::size_t>(x)];
    auto g = disjoint_union(comp, comp);
    int y = x + p;

    auto h = reduce_odd_pair(g, x, y);
    CHECK(h.edges().size() == g.edges().size());
    CHECK(h.vertex_count() == 2 * p + d - 2);  // minus x, y; plus z and d-1
    auto hd = h.degrees();
    // survivors unchanged; all new vertices have degree 2
    auto gd = g.degrees();
    std::vector<int> survivors;
    for (int u = 0; u < 2 * p; ++u)
      if (u != x && u != y) survivors.push_back(gd[static_cast<std::size_t>(u)]);
    for (std::size_t i = 0; i < survivors.size(); ++i)
      CHECK(hd[i] == survivors[i]);
    for (std::size_t i = survivors.size(); i < hd.size(); ++i)
      CHECK(hd[i] == 2);
    ++done;
  }
}

TEST_CASE("realize round-trips every small graphic sequence") {
  for (const auto& values : testsupport::all_sequences(7, 6)) {
    auto s = seq(values);
    if (!is_graphic_full(s)) continue;
    auto g = realize(s);
    CHECK(degree_sequence_of(g) == s);
  }
}

TEST_CASE("dot and edge list forms") {
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  auto dot = to_dot(path);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(to_edge_list(path) == "0 1\n1 2\n");
}
