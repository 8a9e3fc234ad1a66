#include "document.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace twoouter::cli {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::ParseError, what); }

VertexId as_id(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + ": vertex id must be an integer");
  auto v = j.get<std::int64_t>();
  if (v < 0 || v > std::numeric_limits<VertexId>::max()) bad(where + ": vertex id out of range");
  return static_cast<VertexId>(v);
}

VertexId key_id(const std::string& key) {
  if (key.empty() || key.size() > 10 || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }))
    bad("rotations: key \"" + key + "\" is not a vertex id");
  auto v = std::stoull(key);
  if (v > std::numeric_limits<VertexId>::max()) bad("rotations: key " + key + " out of range");
  return static_cast<VertexId>(v);
}

}  // namespace

GraphDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad("at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) bad("document must be a JSON object");
  static const std::set<std::string> known{"format_version", "vertices", "rotations", "outer_face", "labels"};
  for (auto& [k, _] : doc.items())
    if (!known.count(k)) bad("unknown field \"" + k + "\"");
  for (const char* k : {"format_version", "vertices", "rotations", "outer_face"})
    if (!doc.contains(k)) bad(std::string("missing field \"") + k + "\"");
  if (!doc["format_version"].is_number_integer() || doc["format_version"].get<std::int64_t>() != 1)
    bad("format_version must be 1");

  const json& jv = doc["vertices"];
  if (!jv.is_array()) bad("vertices must be an array");
  std::set<VertexId> vertices;
  for (std::size_t i = 0; i < jv.size(); ++i)
    if (!vertices.insert(as_id(jv[i], "vertices[" + std::to_string(i) + "]")).second)
      bad("vertices: duplicate id " + std::to_string(jv[i].get<std::int64_t>()));

  const json& jr = doc["rotations"];
  if (!jr.is_object()) bad("rotations must be an object");
  RotationMap rot;
  for (auto& [k, list] : jr.items()) {
    VertexId v = key_id(k);
    if (!vertices.count(v)) fail(ErrorKind::InvalidEmbedding, "rotations: vertex " + k + " not listed in vertices");
    if (!list.is_array()) bad("rotations[" + k + "] must be an array");
    auto& r = rot[v];
    for (std::size_t i = 0; i < list.size(); ++i) r.push_back(as_id(list[i], "rotations[" + k + "][" + std::to_string(i) + "]"));
  }
  for (VertexId v : vertices) rot[v];

  const json& jo = doc["outer_face"];
  if (!jo.is_array()) bad("outer_face must be an array");
  std::vector<Dart> outer;
  std::set<VertexId> singles;
  for (std::size_t i = 0; i < jo.size(); ++i) {
    const json& e = jo[i];
    const std::string where = "outer_face[" + std::to_string(i) + "]";
    if (!e.is_array() || e.empty() || e.size() > 2) bad(where + " must be [u,v] or [v]");
    if (e.size() == 2) {
      outer.push_back({as_id(e[0], where), as_id(e[1], where)});
    } else {
      VertexId v = as_id(e[0], where);
      if (!rot.count(v)) fail(ErrorKind::InvalidEmbedding, where + ": unknown vertex");
      if (!rot[v].empty()) fail(ErrorKind::InvalidEmbedding, where + ": vertex " + std::to_string(v) + " is not isolated");
      singles.insert(v);
    }
  }

  GraphDocument out;
  out.graph = EmbeddedGraph::from_rotations(std::move(rot), std::move(outer));

  if (doc.contains("labels")) {
    const json& jl = doc["labels"];
    if (!jl.is_object()) bad("labels must be an object");
    for (auto& [k, val] : jl.items()) {
      VertexId v = key_id(k);
      if (!vertices.count(v)) fail(ErrorKind::InvalidEmbedding, "labels: unknown vertex " + k);
      if (!val.is_string()) bad("labels[" + k + "] must be a string");
      out.labels[v] = val.get<std::string>();
    }
  }
  return out;
}

std::string serialize_document(const EmbeddedGraph& g, const std::map<VertexId, std::string>& labels) {
  std::ostringstream os;
  os << "{\n  \"format_version\": 1,\n  \"vertices\": [";
  for (std::size_t i = 0; i < g.num_vertices(); ++i) os << (i ? ", " : "") << g.vertices()[i];
  os << "],\n  \"rotations\": {";
  for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) {
    os << (v ? ",\n" : "\n") << "    \"" << g.id_at(v) << "\": [";
    auto r = g.nbrs(v);
    std::size_t start = 0;
    for (std::size_t j = 1; j < r.size(); ++j)
      if (g.id_at(r[j]) < g.id_at(r[start])) start = j;
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? ", " : "") << g.id_at(r[(start + j) % r.size()]);
    os << "]";
  }
  os << (g.empty() ? "},\n" : "\n  },\n");

  std::vector<std::vector<VertexId>> faces;
  for (const Dart& od : g.outer_darts()) {
    int d = g.dart_between(g.index_of(od.tail), g.index_of(od.head));
    Dart best = od;
    for (int e : g.face_darts(g.face_of(d))) best = std::min(best, g.to_dart(e));
    faces.push_back({best.tail, best.head});
  }
  for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v)
    if (g.deg(v) == 0) faces.push_back({g.id_at(v)});
  std::sort(faces.begin(), faces.end());
  os << "  \"outer_face\": [";
  for (std::size_t i = 0; i < faces.size(); ++i) {
    os << (i ? ", " : "") << '[';
    for (std::size_t j = 0; j < faces[i].size(); ++j) os << (j ? ", " : "") << faces[i][j];
    os << ']';
  }
  os << ']';
  if (!labels.empty()) {
    os << ",\n  \"labels\": {";
    bool first = true;
    for (auto& [v, s] : labels) {
      os << (first ? "\n" : ",\n") << "    \"" << v << "\": " << json(s).dump();
      first = false;
    }
    os << "\n  }";
  }
  os << "\n}\n";
  return os.str();
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace twoouter::cli
