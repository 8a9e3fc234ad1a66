#include "doctest.h"

#include "brute.hpp"
#include "instances.hpp"
#include "twoouter/gen.hpp"
#include "twoouter/plane.hpp"

using namespace twoouter;
using testing_support::as_set;

TEST_CASE("octahedron layers and faces") {
  auto g = gen::octahedron();
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_edges() == 12);
  CHECK(faces(g).size() == 8);
  auto la = layers(g);
  CHECK(la.depth == 2);
  CHECK(la.layer(1) == VertexSet{0, 1, 2});
  CHECK(la.layer(2) == VertexSet{3, 4, 5});
  CHECK(outerplanarity_index(g) == 2);
  CHECK(outer_vertices(g, {0, 1, 2, 3, 4, 5}) == VertexSet{0, 1, 2});
}

TEST_CASE("octahedron surgery") {
  auto g = gen::octahedron();
  auto c = contract_star(g, 0, {1, 3}, 1);
  CHECK(c.num_vertices() == 4);
  CHECK(c.num_edges() == 5);
  CHECK_FALSE(c.adjacent(2, 4));
  auto w = delete_vertices(g, {0});
  CHECK(w.num_vertices() == 5);
  CHECK(w.num_edges() == 8);
  CHECK(is_outerplane_set(g, {2, 3, 4, 5}));
  CHECK_FALSE(is_outerplane_set(g, {0, 1, 2, 3, 4, 5}));
  CHECK_THROWS_AS(contract_star(g, 0, {5}, 0), Error);
}

TEST_CASE("hexagon fixture") {
  auto g = gen::hexagon_fixture();
  CHECK(g.num_edges() == 18);
  CHECK(g.num_faces() == 11);
  auto la = layers(g);
  CHECK(la.layer(1) == VertexSet{0, 1, 2, 3, 4, 5});
  CHECK(la.layer(2) == VertexSet{6, 7, 8});
  CHECK(g.canonical_string().rfind("0: 1 6 5;1: 0 2 7 6;", 0) == 0);
  auto dual = inner_dual_tree(induced_subgraph(g, la.layer(1)));
  CHECK(dual.nodes.size() == 1);
  CHECK(dual.edges.empty());
}

TEST_CASE("invalid embeddings are rejected") {
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;  // sentinel: nothing thrown
  };
  auto bad = [&](RotationMap r, std::vector<Dart> o) {
    return kind([&] { EmbeddedGraph::from_rotations(std::move(r), std::move(o)); });
  };
  CHECK(bad({{0, {1}}, {1, {}}}, {{0, 1}}) == ErrorKind::InvalidEmbedding);          // asymmetric
  CHECK(bad({{0, {0}}}, {}) == ErrorKind::InvalidEmbedding);                          // loop
  CHECK(bad({{0, {1, 1}}, {1, {0, 0}}}, {{0, 1}}) == ErrorKind::InvalidEmbedding);    // parallel
  CHECK(bad({{0, {1}}, {1, {0}}}, {}) == ErrorKind::InvalidEmbedding);                // no outer marker
  CHECK(bad({{0, {1}}, {1, {0}}, {2, {}}}, {{0, 2}}) == ErrorKind::InvalidEmbedding); // marker not an edge
  RotationMap k5;
  for (VertexId v = 0; v < 5; ++v)
    for (VertexId w = 0; w < 5; ++w)
      if (v != w) k5[v].push_back(w);
  CHECK(bad(k5, {{0, 1}}) == ErrorKind::InvalidEmbedding);  // Euler
}

TEST_CASE("block-cut tree and components") {
  auto g = gen::linked_octahedra(2);
  auto bct = block_cut_tree(g);
  CHECK(bct.blocks.size() == 3);
  CHECK(bct.cut_vertices.size() == 2);
  CHECK(bct.tree_edges.size() == 4);
  CHECK(cut_vertices(g) == bct.cut_vertices);
  CHECK(connected_components(g).size() == 1);
  auto split = remove_edges(g, {{bct.cut_vertices[0], bct.cut_vertices[1]}});
  CHECK(connected_components(split).size() == 2);
  CHECK_THROWS_AS(block_cut_tree(split), Error);
  CHECK(cut_vertices(gen::octahedron()).empty());
}

TEST_CASE("facial blocks of the octahedron") {
  auto g = gen::octahedron();
  auto fb = facial_blocks(g, layers(g));
  REQUIRE(fb.size() == 1);
  CHECK(fb[0].whole_graph);
  CHECK(as_set(fb[0].cycle) == std::set<VertexId>{0, 1, 2});
  CHECK(fb[0].enclosed == VertexSet{3, 4, 5});
}

TEST_CASE("property: layers and outer sets agree with brute force") {
  gen::Rng rng(11);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = testing_support::random_two(seed, 40);
    auto p = brute::from(g);
    auto la = layers(g);
    auto bl = brute::layers(p);
    REQUIRE(static_cast<int>(bl.size()) == la.depth);
    for (int i = 1; i <= la.depth; ++i) CHECK(as_set(la.layer(i)) == bl[static_cast<std::size_t>(i - 1)]);

    OuterplaneChecker checker(g);
    for (int trial = 0; trial < 5; ++trial) {
      auto s = testing_support::random_subset(g, rng);
      CHECK(as_set(outer_vertices(g, s)) == brute::outer_of(p, as_set(s)));
      bool op = brute::outerplane(p, as_set(s));
      CHECK(is_outerplane_set(g, s) == op);
      std::vector<bool> keep(g.num_vertices());
      for (auto v : s) keep[static_cast<std::size_t>(g.index_of(v))] = true;
      CHECK(checker.check(keep) == op);
      CHECK(induces_forest(g, s) == brute::acyclic(p, as_set(s)));
    }
  }
}

TEST_CASE("property: rotation round trip and inherited embeddings") {
  gen::Rng rng(5);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto g = testing_support::random_two(seed, 40);
    CHECK(EmbeddedGraph::from_rotations(g.rotations(), g.outer_darts()) == g);
    auto s = testing_support::random_subset(g, rng);
    auto h = induced_subgraph(g, s);
    CHECK(h.vertices() == s);
    for (auto v : s) {
      std::vector<VertexId> expect;
      for (auto w : g.rotation(v))
        if (std::binary_search(s.begin(), s.end(), w)) expect.push_back(w);
      CHECK(h.rotation(v) == expect);
    }
    // induced subgraphs keep the outer vertex sets of the original
    CHECK(as_set(outer_vertices(h, s)) == as_set(outer_vertices(g, s)));
  }
}
