#include "doctest.h"

#include "brute.hpp"
#include "twoouter/gen.hpp"
#include "twoouter/plane.hpp"

using namespace twoouter;

TEST_CASE("rng is reproducible") {
  gen::Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  gen::Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(c.below(7) < 7);
  }
}

TEST_CASE("fixture shapes") {
  CHECK(gen::octahedron().num_edges() == 12);
  CHECK(gen::k4().num_edges() == 6);
  CHECK(gen::hexagon_fixture().num_vertices() == 9);
  auto l2 = gen::linked_octahedra(2);
  CHECK(l2.num_vertices() == 12);
  CHECK(l2.num_edges() == 25);
  CHECK(layers(l2).depth == 2);
  auto nest = gen::nested_octahedra();
  CHECK(nest.num_vertices() == 12);
  CHECK(nest.num_edges() == 27);
  CHECK(layers(nest).depth == 4);
  CHECK(layers(gen::linked_octahedra(5)).depth == 2);
}

TEST_CASE("specs round trip") {
  for (const char* s : {"octahedron", "k4", "hexagon", "nested_octahedra", "linked_octahedra:4",
                        "random:n=20,k=2,seed=7", "tree:n=9,seed=3"}) {
    auto spec = gen::parse_spec(s);
    CHECK(gen::to_string(spec) == s);
    CHECK(gen::generate(spec) == gen::generate(gen::parse_spec(gen::to_string(spec))));
  }
  auto kind = [](const std::string& s) {
    try {
      gen::generate(gen::parse_spec(s));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::TooLarge;  // sentinel
  };
  CHECK(kind("random:n=20,k=2") == ErrorKind::ParseError);
  CHECK(kind("cube") == ErrorKind::ParseError);
  CHECK(kind("linked_octahedra:0") == ErrorKind::InfeasibleSpec);
  CHECK(kind("random:n=5,k=3,seed=1") == ErrorKind::InfeasibleSpec);
}

TEST_CASE("property: random instances have the requested depth and stay connected") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int k = 1 + static_cast<int>(seed % 4);
    int n = 3 * (k - 1) + 1 + static_cast<int>(seed % 30);
    auto g = gen::random_k_outerplanar(n, k, seed, seed % 2 ? 0.0 : 0.6);
    CHECK(static_cast<int>(g.num_vertices()) == n);
    CHECK(layers(g).depth == k);
    CHECK(brute::layers(brute::from(g)).size() == static_cast<std::size_t>(k));
    CHECK(connected_components(g).size() == 1);
    CHECK(gen::random_k_outerplanar(n, k, seed, seed % 2 ? 0.0 : 0.6) == g);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    int n = 1 + static_cast<int>(seed);
    auto t = gen::random_tree(n, seed);
    CHECK(t.num_edges() + 1 == t.num_vertices());
    CHECK(connected_components(t).size() == 1);
  }
}

TEST_CASE("coordinates give clockwise rotations") {
  auto g = gen::from_coordinates({{0, {0, 0}}, {1, {1, 0}}, {2, {0, 1}}, {3, {-1, 0}}, {4, {0, -1}}},
                                 {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
  // clockwise from north: 2 (north), 1 (east), 4 (south), 3 (west)
  auto r = g.rotation(0);
  auto it = std::find(r.begin(), r.end(), 2);
  std::rotate(r.begin(), it, r.end());
  CHECK(r == std::vector<VertexId>{2, 1, 4, 3});
  CHECK(layers(g).layer(2) == VertexSet{0});
}
