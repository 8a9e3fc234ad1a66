#pragma once

#include <utility>
#include <vector>

#include "twoouter/embedded_graph.hpp"
#include "twoouter/plane.hpp"

namespace twoouter {

using Edge = std::pair<VertexId, VertexId>;

struct Matching {
  std::vector<Edge> edges;  // orientation as produced by the construction
};

struct Triple {
  bool matched = false;
  std::vector<VertexId> l2;  // matched: x,y ; unmatched: u
  std::vector<VertexId> l1;  // matched: z ; unmatched: v,w
  std::vector<VertexId> members() const;  // l2 then l1
};

struct TripleList {
  std::vector<Triple> triples;
};

struct ExtractionResult {
  VertexSet kept;
  std::vector<std::pair<VertexId, int>> deleted;  // (vertex, phase 1..3) in order
  Matching matching;
  TripleList triples;
};

/// Number of neighbours of v in the other layer.
int between_degree(const EmbeddedGraph& g, const LayerAssignment& la, VertexId v);

/// Edges of G[L2] on the outer face of its inherited embedding, sorted (u < v).
/// Asserts the cactus property. Throws LayerTooDeep.
std::vector<Edge> boundary_of_layer2(const EmbeddedGraph& g, const LayerAssignment& la);

/// Inductive matching on the boundary of G[L2]: every L2 vertex left
/// uncovered has between degree >= 2. `g` must be a connected disk
/// triangulation of depth <= 2. Throws PreconditionViolated.
Matching build_matching(const EmbeddedGraph& g, const LayerAssignment& la);

/// Property check for a matching (disjoint, on the boundary, uncovered L2
/// vertices have between degree >= 2).
bool matching_has_property(const EmbeddedGraph& g, const LayerAssignment& la, const Matching& m);

/// Throws NoFaceWitness.
TripleList build_triples(const EmbeddedGraph& g, const LayerAssignment& la, const Matching& m);

/// Three-phase L1 deletion.
ExtractionResult deletion_pass(const EmbeddedGraph& g, const LayerAssignment& la, const TripleList& triples);

/// Induced outerplane subset of size >= ceil(2n/3) for depth <= 2 inputs.
/// Throws NotTwoOuterplanar, AugmentationFailed.
ExtractionResult extract_outerplane(const EmbeddedGraph& g);

/// Runs `extract_outerplane` on G[L1+L2], G[L3+L4], ... and keeps an odd
/// trailing layer whole.
VertexSet extract_k_pairwise(const EmbeddedGraph& g);

}  // namespace twoouter
