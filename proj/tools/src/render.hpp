#pragma once

#include <map>
#include <string>

#include "twoouter/embedded_graph.hpp"

namespace twoouter::cli {

/// Vertex -> class name ("f0", "f1", "kept", "deleted"); drives fill colours.
using Overlay = std::map<VertexId, std::string>;

std::string to_dot(const EmbeddedGraph& g, const Overlay& overlay = {});

/// Barycentric layout with each component's outer face pinned to a circle.
/// Every face (outer ones included) becomes one <polygon class="face ...">.
std::string to_svg(const EmbeddedGraph& g, const Overlay& overlay = {});

}  // namespace twoouter::cli
