#include "twoouter/embedded_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twoouter {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotTree: return "NotTree";
    case ErrorKind::LayerTooDeep: return "LayerTooDeep";
    case ErrorKind::NotAdjacent: return "NotAdjacent";
    case ErrorKind::EmbeddingBroken: return "EmbeddingBroken";
    case ErrorKind::AugmentationFailed: return "AugmentationFailed";
    case ErrorKind::NoLegalChord: return "NoLegalChord";
    case ErrorKind::NotTwoOuterplanar: return "NotTwoOuterplanar";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::WitnessInvalid: return "WitnessInvalid";
    case ErrorKind::ReconstructionAcyclicityFailure: return "ReconstructionAcyclicityFailure";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NoFaceWitness: return "NoFaceWitness";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

namespace {

void invalid(const std::string& what) { fail(ErrorKind::InvalidEmbedding, what); }

}  // namespace

EmbeddedGraph EmbeddedGraph::from_rotations(RotationMap rotations,
                                            std::vector<Dart> outer_darts) {
  EmbeddedGraph g;
  g.ids_.reserve(rotations.size());
  for (const auto& [v, _] : rotations) g.ids_.push_back(v);
  g.rot_.resize(g.ids_.size());
  std::size_t i = 0;
  for (const auto& [v, nbrs] : rotations) {
    auto& r = g.rot_[i++];
    r.reserve(nbrs.size());
    for (VertexId w : nbrs) {
      int wi = g.index_of(w);
      if (wi < 0) invalid("vertex " + std::to_string(v) + " lists unknown neighbour " + std::to_string(w));
      if (w == v) invalid("loop at vertex " + std::to_string(v));
      r.push_back(wi);
    }
    auto sorted = r;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      invalid("repeated neighbour in rotation of " + std::to_string(v));
  }
  g.outer_ = std::move(outer_darts);
  g.build();
  return g;
}

bool EmbeddedGraph::has_vertex(VertexId v) const { return index_of(v) >= 0; }

int EmbeddedGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return -1;
  return static_cast<int>(it - ids_.begin());
}

std::vector<VertexId> EmbeddedGraph::rotation(VertexId v) const {
  int i = index_of(v);
  if (i < 0) fail(ErrorKind::UnknownVertex, std::to_string(v));
  std::vector<VertexId> out;
  for (int w : nbrs(i)) out.push_back(id_at(w));
  return out;
}

std::size_t EmbeddedGraph::degree(VertexId v) const {
  int i = index_of(v);
  if (i < 0) fail(ErrorKind::UnknownVertex, std::to_string(v));
  return rot_[static_cast<std::size_t>(i)].size();
}

bool EmbeddedGraph::adjacent(VertexId u, VertexId v) const {
  int a = index_of(u), b = index_of(v);
  return a >= 0 && b >= 0 && adj(a, b);
}

bool EmbeddedGraph::adj(int u, int v) const { return dart_between(u, v) >= 0; }

int EmbeddedGraph::dart_between(int u, int v) const {
  const auto& r = rot_[static_cast<std::size_t>(u)];
  for (std::size_t j = 0; j < r.size(); ++j)
    if (r[j] == v) return offset_[static_cast<std::size_t>(u)] + static_cast<int>(j);
  return -1;
}

int EmbeddedGraph::head(int d) const {
  int t = tail(d);
  return rot_[static_cast<std::size_t>(t)][static_cast<std::size_t>(d - offset_[static_cast<std::size_t>(t)])];
}

std::vector<std::pair<VertexId, VertexId>> EmbeddedGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (int d = 0; d < num_darts(); ++d)
    if (tail(d) < head(d)) out.emplace_back(id_at(tail(d)), id_at(head(d)));
  std::sort(out.begin(), out.end());
  return out;
}

RotationMap EmbeddedGraph::rotations() const {
  RotationMap m;
  for (std::size_t i = 0; i < ids_.size(); ++i) m[ids_[i]] = rotation(ids_[i]);
  return m;
}

std::vector<int> EmbeddedGraph::face_darts(int f) const {
  std::vector<int> out;
  int start = face_start_[static_cast<std::size_t>(f)];
  int d = start;
  do {
    out.push_back(d);
    d = next(d);
  } while (d != start);
  return out;
}

int EmbeddedGraph::face_size(int f) const { return face_len_[static_cast<std::size_t>(f)]; }

void EmbeddedGraph::build() {
  const int n = static_cast<int>(ids_.size());
  offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offset_[static_cast<std::size_t>(v) + 1] = offset_[static_cast<std::size_t>(v)] + deg(v);
  const int m2 = offset_.back();
  dart_tail_.resize(static_cast<std::size_t>(m2));
  twin_.assign(static_cast<std::size_t>(m2), -1);
  next_.assign(static_cast<std::size_t>(m2), -1);
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < deg(v); ++j) dart_tail_[static_cast<std::size_t>(dart(v, j))] = v;
  for (int d = 0; d < m2; ++d) {
    int u = tail(d), v = head(d);
    int back = dart_between(v, u);
    if (back < 0)
      invalid("rotation asymmetry: " + std::to_string(id_at(u)) + " lists " + std::to_string(id_at(v)) +
              " but not conversely");
    twin_[static_cast<std::size_t>(d)] = back;
  }
  for (int d = 0; d < m2; ++d) {
    int b = twin(d);
    int v = tail(b);
    next_[static_cast<std::size_t>(d)] = dart(v, (position(b) + 1) % deg(v));
  }

  // components
  comp_.assign(static_cast<std::size_t>(n), -1);
  num_components_ = 0;
  for (int s = 0; s < n; ++s) {
    if (comp_[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp_[static_cast<std::size_t>(s)] = num_components_;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : nbrs(v))
        if (comp_[static_cast<std::size_t>(w)] < 0) {
          comp_[static_cast<std::size_t>(w)] = num_components_;
          stack.push_back(w);
        }
    }
    ++num_components_;
  }

  // faces
  face_of_.assign(static_cast<std::size_t>(m2), -1);
  face_start_.clear();
  face_len_.clear();
  for (int d = 0; d < m2; ++d) {
    if (face_of_[static_cast<std::size_t>(d)] >= 0) continue;
    int f = static_cast<int>(face_start_.size());
    face_start_.push_back(d);
    int len = 0;
    int e = d;
    do {
      if (face_of_[static_cast<std::size_t>(e)] >= 0) invalid("face trace does not close");
      face_of_[static_cast<std::size_t>(e)] = f;
      ++len;
      e = next(e);
    } while (e != d);
    face_len_.push_back(len);
  }
  face_outer_.assign(face_start_.size(), false);

  std::vector<int> comp_outer(static_cast<std::size_t>(num_components_), -1);
  for (const Dart& od : outer_) {
    int u = index_of(od.tail), v = index_of(od.head);
    if (u < 0 || v < 0) invalid("outer face dart names unknown vertex");
    int d = dart_between(u, v);
    if (d < 0)
      invalid("outer face dart " + std::to_string(od.tail) + "->" + std::to_string(od.head) + " is not an edge");
    int c = comp_[static_cast<std::size_t>(u)];
    if (comp_outer[static_cast<std::size_t>(c)] >= 0) invalid("two outer faces designated for one component");
    comp_outer[static_cast<std::size_t>(c)] = d;
    face_outer_[static_cast<std::size_t>(face_of(d))] = true;
  }

  // Euler per component
  std::vector<int> cv(static_cast<std::size_t>(num_components_), 0), cd(cv), cf(cv);
  for (int v = 0; v < n; ++v) ++cv[static_cast<std::size_t>(comp_[static_cast<std::size_t>(v)])];
  for (int d = 0; d < m2; ++d) ++cd[static_cast<std::size_t>(comp_[static_cast<std::size_t>(tail(d))])];
  for (int f = 0; f < num_faces(); ++f)
    ++cf[static_cast<std::size_t>(comp_[static_cast<std::size_t>(tail(face_start_[static_cast<std::size_t>(f)]))])];
  for (int c = 0; c < num_components_; ++c) {
    auto cu = static_cast<std::size_t>(c);
    if (cd[cu] == 0) continue;
    if (comp_outer[cu] < 0) invalid("component without an outer face marker");
    if (cv[cu] - cd[cu] / 2 + cf[cu] != 2) invalid("Euler characteristic violated: rotation system is not planar");
  }
  // store canonical outer darts: sorted by component
  std::vector<Dart> outer;
  for (int c = 0; c < num_components_; ++c)
    if (comp_outer[static_cast<std::size_t>(c)] >= 0) outer.push_back(to_dart(comp_outer[static_cast<std::size_t>(c)]));
  outer_ = std::move(outer);
}

std::string EmbeddedGraph::canonical_string() const {
  std::ostringstream os;
  for (int v = 0; v < static_cast<int>(ids_.size()); ++v) {
    os << id_at(v) << ':';
    auto r = nbrs(v);
    if (!r.empty()) {
      std::size_t start = 0;
      for (std::size_t j = 1; j < r.size(); ++j)
        if (id_at(r[j]) < id_at(r[start])) start = j;
      for (std::size_t j = 0; j < r.size(); ++j) os << ' ' << id_at(r[(start + j) % r.size()]);
    }
    os << ';';
  }
  os << '|';
  std::vector<Dart> outs;
  for (const Dart& od : outer_) {
    int d = dart_between(index_of(od.tail), index_of(od.head));
    Dart best = od;
    for (int e : face_darts(face_of(d))) best = std::min(best, to_dart(e));
    outs.push_back(best);
  }
  std::sort(outs.begin(), outs.end());
  for (const Dart& d : outs) os << d.tail << '>' << d.head << ';';
  return os.str();
}

std::uint64_t EmbeddedGraph::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canonical_string()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace twoouter
