#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "twoouter/augment.hpp"
#include "twoouter/embedded_graph.hpp"
#include "twoouter/plane.hpp"

namespace twoouter {

struct ForestPartition {
  VertexSet f0, f1;
};

enum class ReductionKind {
  Split,          // disconnected input, one piece per component
  R_Cut,          // cut vertex split
  Triangulate,    // chord insertion, not a reduction proper
  R1_LowDegree,
  R2_Deg4,
  R3_BoundaryCritical,
  R4_CriticalPair,
};

std::string_view to_string(ReductionKind k);

/// Named vertices per kind:
///   R1 (v); R_Cut (c); R2 and R3 (a,b,c,d,e,f); R4 (a,b,c,d,e,f,g,h).
struct ReductionWitness {
  ReductionKind kind = ReductionKind::R1_LowDegree;
  std::vector<VertexId> named;
};

struct Surgery {
  enum class Op { Pieces, AddChords, DeleteVertex, Contract };
  Op op = Op::Pieces;
  std::vector<VertexSet> pieces;  // Pieces: vertex set of each induced piece
  std::vector<Chord> chords;      // AddChords
  VertexId vertex = 0;            // DeleteVertex
  VertexId center = 0, representative = 0;
  VertexSet spokes;               // Contract

  std::string describe() const;
};

struct TraceStep {
  ReductionWitness witness;
  Surgery surgery;
  std::uint64_t hash_before = 0;
  std::vector<std::uint64_t> hashes_after;
  /// Set when the case table gave a cyclic class and the local
  /// exhaustive fallback had to pick the reinsertion.
  bool repaired = false;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
};

struct ForestResult {
  ForestPartition partition;
  ReductionTrace trace;
};

struct ForestOptions {
  /// Called on every intermediate graph the driver builds (after validation).
  std::function<void(const EmbeddedGraph&)> on_graph;
  /// When false, a failed case table raises ReconstructionAcyclicityFailure
  /// instead of trying the local fallback.
  bool allow_local_repair = true;
};

/// Splits a graph of outerplanarity index <= 2 into two induced forests.
/// Throws NotTwoOuterplanar, InternalInvariantViolation,
/// ReconstructionAcyclicityFailure.
ForestResult partition_two_forests(const EmbeddedGraph& g, const ForestOptions& opts = {});

/// Next reduction for a connected disk triangulation with minimum degree 4
/// and no cut vertex (R2 globally, then the dual-tree search).
ReductionWitness locate_reduction(const EmbeddedGraph& g);

/// Checks the local pattern each reconstruction table relies on.
/// Throws WitnessInvalid with the failing condition.
void validate_witness(const EmbeddedGraph& g, const LayerAssignment& la, const ReductionWitness& w);

/// Independent check: classes disjoint, cover V, both acyclic.
bool validate_partition(const EmbeddedGraph& g, const ForestPartition& p);

/// Re-executes every surgery from `input` and compares hashes.
/// Returns an empty string on success, else a description of the mismatch.
std::string replay_trace(const EmbeddedGraph& input, const ReductionTrace& trace,
                         const std::function<void(const EmbeddedGraph&)>& on_graph = {});

}  // namespace twoouter
