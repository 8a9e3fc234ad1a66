#include "doctest.h"

#include <algorithm>

#include "brute.hpp"
#include "instances.hpp"
#include "twoouter/augment.hpp"
#include "twoouter/gen.hpp"
#include "twoouter/plane.hpp"

using namespace twoouter;

TEST_CASE("triangulated fixtures gain no edges") {
  for (auto g : {gen::octahedron(), gen::hexagon_fixture(), gen::k4()}) {
    auto a = triangulate_disk(g);
    CHECK(a.added_edges.empty());
    CHECK(a.result == g);
  }
}

TEST_CASE("square with a centre gets one chord per quadrilateral") {
  // 4-cycle, centre joined to two opposite corners
  auto g = gen::from_coordinates({{0, {0, 1}}, {1, {1, 1}}, {2, {1, 0}}, {3, {0, 0}}, {4, {0.5, 0.5}}},
                                 {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 4}});
  REQUIRE(layers(g).depth == 2);
  auto a = triangulate_disk(g);
  CHECK(a.added_edges.size() == 2);
  auto la = layers(a.result);
  CHECK(la.layer(1) == VertexSet{0, 1, 2, 3});
  CHECK(la.layer(2) == VertexSet{4});
  for (int f = 0; f < a.result.num_faces(); ++f)
    if (!a.result.is_outer_face(f)) CHECK(a.result.face_size(f) == 3);
}

TEST_CASE("chord choice and placement in a quadrilateral") {
  auto g = gen::from_coordinates({{0, {0, 1}}, {1, {1, 1}}, {2, {1, 0}}, {3, {0, 0}}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto la = layers(g);
  const Face* inner = nullptr;
  auto fs = faces(g);
  for (const auto& f : fs)
    if (!f.is_outer) inner = &f;
  REQUIRE(inner);
  Chord c = face_triangulation_step(g, la, *inner);
  CHECK(c.u == 0);
  CHECK(c.w == 2);
  auto h = apply_chord(g, c);
  CHECK(h.num_edges() == 5);
  auto after = [&](VertexId v, VertexId anchor) {
    auto r = h.rotation(v);
    auto it = std::find(r.begin(), r.end(), anchor);
    return r[static_cast<std::size_t>((it - r.begin() + 1)) % r.size()];
  };
  CHECK(after(0, c.u_after) == 2);
  CHECK(after(2, c.w_after) == 0);
  CHECK(h.num_faces() == 3);
  CHECK(layers(h).depth == 1);
}

TEST_CASE("property: triangulation keeps layers and makes every finite face a triangle") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = testing_support::random_two(seed, 50);
    if (connected_components(g).size() != 1 || g.num_vertices() < 3) continue;
    auto a = triangulate_disk(g);
    const auto& t = a.result;
    CHECK(t.vertices() == g.vertices());
    for (auto [u, v] : g.edges()) CHECK(t.adjacent(u, v));
    CHECK(t.num_edges() == g.num_edges() + a.added_edges.size());
    auto la = layers(g), lt = layers(t);
    CHECK(la.layers == lt.layers);
    for (int f = 0; f < t.num_faces(); ++f)
      if (!t.is_outer_face(f)) CHECK(t.face_size(f) == 3);
    // same check, independently
    auto bl = brute::layers(brute::from(t));
    CHECK(static_cast<int>(bl.size()) == la.depth);
  }
}
