#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twoouter/embedded_graph.hpp"

namespace twoouter {

struct OracleResult {
  int optimum = 0;
  VertexSet witness;
  std::uint64_t explored = 0;
};

/// Size caps; defaults 24/24/16, overridable through TWOOUTER_FOREST_CAP,
/// TWOOUTER_ARBORICITY_CAP and TWOOUTER_OUTERPLANE_CAP.
int default_forest_cap();
int default_arboricity_cap();
int default_outerplane_cap();

/// Branch and bound, vertices by descending degree. Throws TooLarge.
OracleResult max_induced_forest_exact(const EmbeddedGraph& g, int cap = default_forest_cap());

/// Smallest number of classes each inducing a forest. Throws TooLarge.
int vertex_arboricity_exact(const EmbeddedGraph& g, int cap = default_arboricity_cap());
/// Same, plus one optimal partition.
std::vector<VertexSet> arboricity_partition_exact(const EmbeddedGraph& g, int cap = default_arboricity_cap());

/// Subsets by descending size under the inherited embedding. Throws TooLarge.
OracleResult max_induced_outerplane_exact(const EmbeddedGraph& g, int cap = default_outerplane_cap());

struct Ratio {
  std::int64_t num = 2, den = 3;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Families: "octahedron", "trees:count=C,max_n=N,seed=S",
/// "random:count=C,max_n=N,k=K,seed=S". Throws ParseError.
struct ScanFamily {
  enum class Kind { Octahedron, Trees, Random };
  Kind kind = Kind::Octahedron;
  int count = 1;
  int max_n = 10;
  int k = 3;
  std::uint64_t seed = 0;
};
ScanFamily parse_family(const std::string& text);
/// One GenSpec string per instance, deterministic.
std::vector<std::string> family_instances(const ScanFamily& family);

struct ScanReport {
  int instances = 0;
  int skipped_too_large = 0;
  int min_optimum = 0, min_n = 0;  // arg-min ratio as a fraction
  double min_ratio = 1.0;
  std::string argmin_spec;
  std::optional<EmbeddedGraph> argmin;
  bool violation = false;  // re-verified
  std::optional<EmbeddedGraph> violating;
  std::string violating_spec;
};

ScanReport scan_conjecture(const ScanFamily& family, Ratio bound, int cap = default_outerplane_cap());

}  // namespace twoouter
