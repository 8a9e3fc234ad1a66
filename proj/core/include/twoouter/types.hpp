#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twoouter {

using VertexId = std::uint32_t;

/// A directed edge. For the face convention used throughout the library the
/// face lying to the left of `tail -> head` is the one traced by `next_in_face`.
struct Dart {
  VertexId tail = 0;
  VertexId head = 0;

  auto operator<=>(const Dart&) const = default;
};

enum class ErrorKind {
  InvalidEmbedding,
  UnknownVertex,
  Disconnected,
  NotTree,
  LayerTooDeep,
  NotAdjacent,
  EmbeddingBroken,
  AugmentationFailed,
  NoLegalChord,
  NotTwoOuterplanar,
  InternalInvariantViolation,
  WitnessInvalid,
  ReconstructionAcyclicityFailure,
  PreconditionViolated,
  NoFaceWitness,
  TooLarge,
  InfeasibleSpec,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

using VertexSet = std::vector<VertexId>;  // sorted, unique

}  // namespace twoouter
