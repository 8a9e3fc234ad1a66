#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "twoouter/embedded_graph.hpp"

namespace twoouter {

struct Face {
  std::vector<Dart> boundary;  // in traversal order, face on the left
  bool is_outer = false;

  std::vector<VertexId> vertex_walk() const;
};

/// Faces of every component. Isolated vertices contribute no face here.
std::vector<Face> faces(const EmbeddedGraph& g);

struct LayerAssignment {
  std::map<VertexId, int> layer_of;  // 1-based
  std::vector<VertexSet> layers;     // layers[0] is L1
  int depth = 0;

  const VertexSet& layer(int i) const { return layers[static_cast<std::size_t>(i - 1)]; }
  int of(VertexId v) const { return layer_of.at(v); }
};

/// Peels the outer boundary repeatedly. Uses the embedding inherited from `g`
/// at every step, so nested components are handled correctly.
LayerAssignment layers(const EmbeddedGraph& g);
int outerplanarity_index(const EmbeddedGraph& g);

/// Vertices of `subset` incident to the infinite face of the inherited
/// embedding of G[subset]. `subset` must be sorted.
VertexSet outer_vertices(const EmbeddedGraph& g, const VertexSet& subset);

/// True iff every vertex of `subset` lies on the infinite face of G[subset].
bool is_outerplane_set(const EmbeddedGraph& g, const VertexSet& subset);

/// Reusable evaluator for many `is_outerplane_set` queries on one graph.
class OuterplaneChecker {
 public:
  explicit OuterplaneChecker(const EmbeddedGraph& g);
  /// `keep[i]` refers to dense vertex index i of the graph.
  bool check(const std::vector<bool>& keep) const;

 private:
  const EmbeddedGraph* g_;
};

struct BlockCutTree {
  std::vector<VertexSet> blocks;  // maximal 2-connected pieces and bridges
  VertexSet cut_vertices;
  /// (block index, cut vertex) incidences; the block-cut tree proper.
  std::vector<std::pair<int, VertexId>> tree_edges;
};

BlockCutTree block_cut_tree(const EmbeddedGraph& g);

std::vector<VertexSet> connected_components(const EmbeddedGraph& g);
VertexSet cut_vertices(const EmbeddedGraph& g);

struct DualTree {
  std::vector<Face> nodes;                              // finite faces
  std::vector<std::pair<int, int>> edges;               // node indices
  std::vector<std::pair<VertexId, VertexId>> primal;    // shared edge per dual edge, u < v
  std::vector<std::vector<int>> neighbours() const;
};

/// Dual of `g1` restricted to its finite faces; throws NotTree if that is not a
/// tree (the precondition is an outer boundary that is a simple cycle).
DualTree inner_dual_tree(const EmbeddedGraph& g1);

struct FacialBlock {
  std::vector<VertexId> cycle;  // facial cycle of G[L1], walk order
  VertexSet enclosed;           // L2 vertices inside the cycle
  EmbeddedGraph block_graph;    // G[cycle + enclosed]
  bool whole_graph = false;
  /// Shared edge for leaf blocks; smallest boundary edge when whole_graph.
  std::optional<std::pair<VertexId, VertexId>> shared_edge;
  bool leaf = false;
};

std::vector<FacialBlock> facial_blocks(const EmbeddedGraph& g, const LayerAssignment& la);

/// G minus `removed` with inherited embedding and recomputed outer markers.
EmbeddedGraph delete_vertices(const EmbeddedGraph& g, const VertexSet& removed);
/// G[kept] with inherited embedding.
EmbeddedGraph induced_subgraph(const EmbeddedGraph& g, const VertexSet& kept);

/// Identifies {center} + spokes to `representative`, splicing rotations along
/// contracted edges, then drops loops and duplicate parallel edges.
EmbeddedGraph contract_star(const EmbeddedGraph& g, VertexId center, const VertexSet& spokes,
                            VertexId representative);

/// Adds edge u-v. The new edge is placed right after `u_after` in the rotation
/// of u and right after `v_after` in the rotation of v.
EmbeddedGraph insert_edge(const EmbeddedGraph& g, VertexId u, VertexId u_after, VertexId v,
                          VertexId v_after);

/// Removes edges; the outer face absorbs faces merged into it.
EmbeddedGraph remove_edges(const EmbeddedGraph& g, const std::vector<std::pair<VertexId, VertexId>>& edges);

/// True iff G[subset] is a forest (plain union-find on the edge list).
bool induces_forest(const EmbeddedGraph& g, const VertexSet& subset);

VertexSet to_set(std::vector<VertexId> v);

}  // namespace twoouter
