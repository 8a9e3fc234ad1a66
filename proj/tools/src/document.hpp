#pragma once

#include <map>
#include <string>

#include "twoouter/embedded_graph.hpp"

namespace twoouter::cli {

struct GraphDocument {
  EmbeddedGraph graph;
  std::map<VertexId, std::string> labels;
};

/// Throws ParseError (syntax or schema, with byte offset when known) and
/// InvalidEmbedding (well-formed document, bad rotation system).
GraphDocument parse_document(const std::string& text);

/// Canonical, byte-stable text: rotations start at their smallest neighbour,
/// outer faces are named by their smallest dart, isolated vertices as [v].
std::string serialize_document(const EmbeddedGraph& g, const std::map<VertexId, std::string>& labels = {});

std::string read_input(const std::string& path);  // "-" is stdin
void write_output(const std::string& path, const std::string& text);  // "-" or "" is stdout

}  // namespace twoouter::cli
