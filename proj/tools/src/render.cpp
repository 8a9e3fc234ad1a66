#include "render.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace twoouter::cli {

namespace {

const char* colour(const std::string& cls) {
  if (cls == "f0") return "#4c78a8";
  if (cls == "f1") return "#f58518";
  if (cls == "kept") return "#54a24b";
  if (cls == "deleted") return "#e45756";
  return "#ffffff";
}

struct P {
  double x = 0, y = 0;
};

std::vector<P> layout(const EmbeddedGraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<P> pos(static_cast<std::size_t>(n));
  std::vector<char> pinned(static_cast<std::size_t>(n), 0);
  std::vector<int> comp_outer(static_cast<std::size_t>(g.num_components()), -1);
  for (const Dart& od : g.outer_darts()) {
    int d = g.dart_between(g.index_of(od.tail), g.index_of(od.head));
    comp_outer[static_cast<std::size_t>(g.component_of(g.tail(d)))] = d;
  }
  const double pi = std::acos(-1.0);
  for (int c = 0; c < g.num_components(); ++c) {
    const double cx = 2.5 * c;
    int d = comp_outer[static_cast<std::size_t>(c)];
    if (d < 0) {
      for (int v = 0; v < n; ++v)
        if (g.component_of(v) == c) {
          pos[static_cast<std::size_t>(v)] = {cx, 0};
          pinned[static_cast<std::size_t>(v)] = 1;
        }
      continue;
    }
    std::vector<int> ring;
    for (int e : g.face_darts(g.face_of(d))) {
      int v = g.tail(e);
      if (!pinned[static_cast<std::size_t>(v)]) {
        pinned[static_cast<std::size_t>(v)] = 1;
        ring.push_back(v);
      }
    }
    // face walks turn left; reverse the angle so the outer walk runs clockwise on screen
    for (std::size_t i = 0; i < ring.size(); ++i) {
      double a = pi / 2 + 2 * pi * static_cast<double>(i) / static_cast<double>(ring.size());
      pos[static_cast<std::size_t>(ring[i])] = {cx + std::cos(a), -std::sin(a)};
    }
    for (int v = 0; v < n; ++v)
      if (g.component_of(v) == c && !pinned[static_cast<std::size_t>(v)]) pos[static_cast<std::size_t>(v)] = {cx, 0};
  }
  for (int it = 0; it < 2000; ++it)
    for (int v = 0; v < n; ++v) {
      if (pinned[static_cast<std::size_t>(v)]) continue;
      P s;
      for (int w : g.nbrs(v)) {
        s.x += pos[static_cast<std::size_t>(w)].x;
        s.y += pos[static_cast<std::size_t>(w)].y;
      }
      pos[static_cast<std::size_t>(v)] = {s.x / g.deg(v), s.y / g.deg(v)};
    }
  return pos;
}

}  // namespace

std::string to_dot(const EmbeddedGraph& g, const Overlay& overlay) {
  std::ostringstream os;
  os << "graph G {\n";
  for (VertexId v : g.vertices()) {
    os << "  " << v;
    auto it = overlay.find(v);
    if (it != overlay.end()) os << " [class=\"" << it->second << "\", style=filled, fillcolor=\"" << colour(it->second) << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_svg(const EmbeddedGraph& g, const Overlay& overlay) {
  const auto pos = layout(g);
  const double scale = 120, margin = 30;
  double w = 2 * margin + scale * (2.5 * std::max(0, g.num_components() - 1) + 2);
  double h = 2 * margin + 2 * scale;
  auto X = [&](int v) { return margin + scale * (pos[static_cast<std::size_t>(v)].x + 1); };
  auto Y = [&](int v) { return margin + scale * (pos[static_cast<std::size_t>(v)].y + 1); };
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' '
     << h << "\">\n";
  for (int f = 0; f < g.num_faces(); ++f) {
    bool outer = g.is_outer_face(f);
    os << "  <polygon class=\"face" << (outer ? " outer" : "") << "\" fill=\"" << (outer ? "none" : "#eef2f7")
       << "\" stroke=\"none\" points=\"";
    bool first = true;
    for (int d : g.face_darts(f)) {
      os << (first ? "" : " ") << X(g.tail(d)) << ',' << Y(g.tail(d));
      first = false;
    }
    os << "\"/>\n";
  }
  for (int d = 0; d < g.num_darts(); ++d)
    if (g.tail(d) < g.head(d))
      os << "  <line x1=\"" << X(g.tail(d)) << "\" y1=\"" << Y(g.tail(d)) << "\" x2=\"" << X(g.head(d)) << "\" y2=\""
         << Y(g.head(d)) << "\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
  for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) {
    auto it = overlay.find(g.id_at(v));
    std::string cls = it == overlay.end() ? "" : it->second;
    os << "  <circle class=\"vertex" << (cls.empty() ? "" : " " + cls) << "\" cx=\"" << X(v) << "\" cy=\"" << Y(v)
       << "\" r=\"9\" fill=\"" << colour(cls) << "\" stroke=\"#333\"/>\n";
    os << "  <text x=\"" << X(v) << "\" y=\"" << Y(v) + 4
       << "\" text-anchor=\"middle\" font-size=\"10\" font-family=\"sans-serif\">" << g.id_at(v) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace twoouter::cli
