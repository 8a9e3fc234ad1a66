#pragma once

#include <set>

#include "twoouter/gen.hpp"

namespace testing_support {

// connected 2-outerplanar instance; n in [1, max_n]
inline twoouter::EmbeddedGraph random_two(std::uint64_t seed, int max_n, double drop = 0.6) {
  twoouter::gen::Rng rng(seed * 7919 + 1);
  int n = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(max_n)));
  return twoouter::gen::random_k_outerplanar(n, n >= 4 ? 2 : 1, seed, drop);
}

inline std::set<twoouter::VertexId> as_set(const twoouter::VertexSet& v) { return {v.begin(), v.end()}; }

inline twoouter::VertexSet random_subset(const twoouter::EmbeddedGraph& g, twoouter::gen::Rng& rng) {
  twoouter::VertexSet s;
  for (auto v : g.vertices())
    if (rng.uniform() < 0.7) s.push_back(v);
  return s;
}

}  // namespace testing_support
