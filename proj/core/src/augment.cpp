#include "twoouter/augment.hpp"

#include <algorithm>
#include <tuple>

namespace twoouter {

EmbeddedGraph apply_chord(const EmbeddedGraph& g, const Chord& c) {
  return insert_edge(g, c.u, c.u_after, c.w, c.w_after);
}

namespace {

bool same_layers(const LayerAssignment& a, const LayerAssignment& b) {
  return a.depth == b.depth && a.layer_of == b.layer_of;
}

}  // namespace

Chord face_triangulation_step(const EmbeddedGraph& g, const LayerAssignment& la, const Face& f) {
  const auto walk = f.vertex_walk();
  const std::size_t s = walk.size();
  if (f.is_outer || s < 4) fail(ErrorKind::NoLegalChord, "face is outer or already a triangle");

  // (rank, lo, hi, i, j); rank 0 = L1-L1, 1 = L1-L2, 2 = L2-L2
  std::vector<std::tuple<int, VertexId, VertexId, std::size_t, std::size_t>> cands;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 2; j < s; ++j) {
      if (i == 0 && j == s - 1) continue;
      VertexId a = walk[i], b = walk[j];
      if (a == b || g.adjacent(a, b)) continue;
      int rank = (la.of(a) != 1) + (la.of(b) != 1);
      cands.emplace_back(rank, std::min(a, b), std::max(a, b), i, j);
    }
  std::sort(cands.begin(), cands.end());
  auto make = [&](std::size_t i, std::size_t j) {
    return Chord{walk[i], walk[j], walk[(i + s - 1) % s], walk[(j + s - 1) % s]};
  };
  for (const auto& [rank, lo, hi, i, j] : cands) {
    Chord c = make(i, j);
    if (rank < 2) return c;
    if (same_layers(layers(apply_chord(g, c)), la)) return c;
  }
  fail(ErrorKind::NoLegalChord, "no chord keeps the layering");
}

Augmentation triangulate_disk(const EmbeddedGraph& g) {
  Augmentation aug;
  aug.base = g;
  const LayerAssignment la = layers(g);
  if (la.depth > 2) fail(ErrorKind::AugmentationFailed, "input is not 2-outerplanar");
  EmbeddedGraph cur = g;
  while (true) {
    int pick = -1;
    for (int fi = 0; fi < cur.num_faces(); ++fi)
      if (!cur.is_outer_face(fi) && cur.face_size(fi) >= 4) {
        pick = fi;
        break;
      }
    if (pick < 0) break;
    Face face;
    for (int d : cur.face_darts(pick)) face.boundary.push_back(cur.to_dart(d));
    try {
      Chord c = face_triangulation_step(cur, la, face);
      cur = apply_chord(cur, c);
      aug.added_edges.push_back(c);
    } catch (const Error& e) {
      fail(ErrorKind::AugmentationFailed, e.what());
    }
  }
  aug.result = std::move(cur);
  return aug;
}

}  // namespace twoouter
