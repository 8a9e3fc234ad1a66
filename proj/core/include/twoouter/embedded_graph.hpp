#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twoouter/types.hpp"

namespace twoouter {

using RotationMap = std::map<VertexId, std::vector<VertexId>>;

/// Simple plane graph given combinatorially: a clockwise rotation of
/// neighbours around every vertex plus one designated outer-face dart per
/// connected component with edges. Components without edges (isolated
/// vertices) lie on their own outer face.
///
/// Instances are immutable. Construction validates simplicity, rotation
/// symmetry, the outer-face markers and Euler's formula per component, and
/// throws `Error{InvalidEmbedding}` on failure.
///
/// Besides the id-based API there is a dense-index API (`index_of`, `nbr`,
/// darts numbered `0..num_darts()`) used by the algorithms.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  static EmbeddedGraph from_rotations(RotationMap rotations,
                                      std::vector<Dart> outer_darts);

  // ids
  const std::vector<VertexId>& vertices() const { return ids_; }
  std::size_t num_vertices() const { return ids_.size(); }
  std::size_t num_edges() const { return num_darts() / 2; }
  bool empty() const { return ids_.empty(); }
  bool has_vertex(VertexId v) const;
  std::vector<VertexId> rotation(VertexId v) const;
  std::size_t degree(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;  // u < v, sorted
  RotationMap rotations() const;
  /// One dart per component with edges, as stored.
  const std::vector<Dart>& outer_darts() const { return outer_; }

  // dense indices
  int index_of(VertexId v) const;  // -1 if absent
  VertexId id_at(int i) const { return ids_[static_cast<std::size_t>(i)]; }
  int deg(int i) const { return static_cast<int>(rot_[static_cast<std::size_t>(i)].size()); }
  std::span<const int> nbrs(int i) const { return rot_[static_cast<std::size_t>(i)]; }
  bool adj(int u, int v) const;

  // darts
  int num_darts() const { return static_cast<int>(dart_tail_.size()); }
  int dart(int v, int pos) const { return offset_[static_cast<std::size_t>(v)] + pos; }
  int dart_between(int u, int v) const;  // -1 if not adjacent
  int tail(int d) const { return dart_tail_[static_cast<std::size_t>(d)]; }
  int head(int d) const;
  int position(int d) const { return d - offset_[static_cast<std::size_t>(tail(d))]; }
  int twin(int d) const { return twin_[static_cast<std::size_t>(d)]; }
  /// Next dart along the face on the left of `d`.
  int next(int d) const { return next_[static_cast<std::size_t>(d)]; }
  Dart to_dart(int d) const { return {id_at(tail(d)), id_at(head(d))}; }

  // faces (computed at construction)
  int num_faces() const { return static_cast<int>(face_start_.size()); }
  int face_of(int d) const { return face_of_[static_cast<std::size_t>(d)]; }
  /// Darts of face `f` in traversal order.
  std::vector<int> face_darts(int f) const;
  int face_size(int f) const;
  bool is_outer_face(int f) const { return face_outer_[static_cast<std::size_t>(f)]; }

  // components
  int num_components() const { return num_components_; }
  int component_of(int i) const { return comp_[static_cast<std::size_t>(i)]; }

  /// Canonical text form: rotations start at the smallest neighbour and every
  /// component's outer face is named by its lexicographically smallest dart.
  std::string canonical_string() const;
  std::uint64_t hash() const;

  friend bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) {
    return a.canonical_string() == b.canonical_string();
  }

 private:
  void build();

  std::vector<VertexId> ids_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> offset_;
  std::vector<int> dart_tail_;
  std::vector<int> twin_;
  std::vector<int> next_;
  std::vector<Dart> outer_;

  std::vector<int> face_of_;
  std::vector<int> face_start_;
  std::vector<int> face_len_;
  std::vector<bool> face_outer_;

  std::vector<int> comp_;
  int num_components_ = 0;
};

}  // namespace twoouter
