#pragma once

#include <vector>

#include "twoouter/embedded_graph.hpp"
#include "twoouter/plane.hpp"

namespace twoouter {

/// A chord u-w drawn inside a face; `u_after`/`w_after` are the rotation
/// anchors (the new neighbour goes right after them, clockwise).
struct Chord {
  VertexId u = 0, w = 0;
  VertexId u_after = 0, w_after = 0;
};

struct Augmentation {
  EmbeddedGraph base;
  std::vector<Chord> added_edges;
  EmbeddedGraph result;
};

/// Picks a chord for finite face `f` of `g`. Chords with an L1 end come first
/// (L1-L1, then L1-L2, lexicographic). An L2-L2 chord is only returned if it
/// leaves the layering of `g` unchanged. Throws NoLegalChord.
Chord face_triangulation_step(const EmbeddedGraph& g, const LayerAssignment& la, const Face& f);

/// Adds chords until every finite face is a triangle. Works on faces with
/// repeated vertices too. Throws AugmentationFailed.
Augmentation triangulate_disk(const EmbeddedGraph& g);

/// Inserts a chord returned by `face_triangulation_step`.
EmbeddedGraph apply_chord(const EmbeddedGraph& g, const Chord& c);

}  // namespace twoouter
