#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "twoouter/embedded_graph.hpp"

namespace twoouter::gen {

/// Portable RNG: identical streams on every platform for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next_u64();
  double uniform();                    // [0, 1)
  double uniform(double lo, double hi);
  std::size_t below(std::size_t n);    // [0, n)
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

using Point = std::pair<double, double>;

/// Straight-line drawing to rotation system: neighbours sorted clockwise by
/// angle; the outer dart of each component starts at its topmost vertex.
/// Components must not nest.
EmbeddedGraph from_coordinates(const std::map<VertexId, Point>& pos,
                               const std::vector<std::pair<VertexId, VertexId>>& edges);

EmbeddedGraph octahedron();
EmbeddedGraph k4();
EmbeddedGraph hexagon_fixture();
EmbeddedGraph linked_octahedra(int m);
EmbeddedGraph nested_octahedra();

/// k nested rings (all of size >= 3 except possibly a single centre vertex),
/// annuli zipped into triangles, random chords in the innermost ring, then a
/// random share (up to `max_drop`) of edges dropped while connectivity and
/// depth k survive.
EmbeddedGraph random_k_outerplanar(int n, int k, std::uint64_t seed, double max_drop = 0.6);
EmbeddedGraph random_tree(int n, std::uint64_t seed);

struct GenSpec {
  enum class Kind { Octahedron, LinkedOctahedra, K4, Hexagon, NestedOctahedra, RandomKOuterplanar, Tree };
  Kind kind = Kind::Octahedron;
  int m = 1;
  int n = 0;
  int k = 1;
  std::uint64_t seed = 0;
};

/// Accepts: octahedron | k4 | hexagon | nested_octahedra | linked_octahedra:M |
/// random:n=N,k=K,seed=S | tree:n=N,seed=S
GenSpec parse_spec(const std::string& text);
std::string to_string(const GenSpec& spec);
EmbeddedGraph generate(const GenSpec& spec);

}  // namespace twoouter::gen
