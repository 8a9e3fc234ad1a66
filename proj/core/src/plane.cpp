#include "twoouter/plane.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "dsu.hpp"

namespace twoouter {

VertexSet to_set(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<VertexId> Face::vertex_walk() const {
  std::vector<VertexId> out;
  out.reserve(boundary.size());
  for (const Dart& d : boundary) out.push_back(d.tail);
  return out;
}

std::vector<Face> faces(const EmbeddedGraph& g) {
  std::vector<Face> out;
  out.reserve(static_cast<std::size_t>(g.num_faces()));
  for (int f = 0; f < g.num_faces(); ++f) {
    Face face;
    face.is_outer = g.is_outer_face(f);
    for (int d : g.face_darts(f)) face.boundary.push_back(g.to_dart(d));
    out.push_back(std::move(face));
  }
  return out;
}

namespace {

std::vector<bool> mask_of(const EmbeddedGraph& g, const VertexSet& subset) {
  std::vector<bool> keep(g.num_vertices(), false);
  for (VertexId v : subset) {
    int i = g.index_of(v);
    if (i < 0) fail(ErrorKind::UnknownVertex, std::to_string(v));
    keep[static_cast<std::size_t>(i)] = true;
  }
  return keep;
}

// Union-find over the faces of g in which faces separated only by removed
// edges (an endpoint outside `keep`) are merged. Index num_faces() is the
// infinite region; every designated outer face is attached to it.
Dsu regions(const EmbeddedGraph& g, const std::vector<bool>& keep) {
  Dsu dsu(static_cast<std::size_t>(g.num_faces()) + 1);
  const int inf = g.num_faces();
  for (int f = 0; f < g.num_faces(); ++f)
    if (g.is_outer_face(f)) dsu.unite(f, inf);
  for (int d = 0; d < g.num_darts(); ++d)
    if (!keep[static_cast<std::size_t>(g.tail(d))] || !keep[static_cast<std::size_t>(g.head(d))])
      dsu.unite(g.face_of(d), g.face_of(g.twin(d)));
  return dsu;
}

bool on_infinite(const EmbeddedGraph& g, Dsu& dsu, int v) {
  if (g.deg(v) == 0) return true;
  const int inf_root = dsu.find(g.num_faces());
  for (int j = 0; j < g.deg(v); ++j)
    if (dsu.find(g.face_of(g.dart(v, j))) == inf_root) return true;
  return false;
}

std::vector<bool> outer_mask(const EmbeddedGraph& g, const std::vector<bool>& keep) {
  Dsu dsu = regions(g, keep);
  std::vector<bool> out(g.num_vertices(), false);
  for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v)
    if (keep[static_cast<std::size_t>(v)]) out[static_cast<std::size_t>(v)] = on_infinite(g, dsu, v);
  return out;
}

}  // namespace

VertexSet outer_vertices(const EmbeddedGraph& g, const VertexSet& subset) {
  auto keep = mask_of(g, subset);
  auto out = outer_mask(g, keep);
  VertexSet res;
  for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v)
    if (out[static_cast<std::size_t>(v)]) res.push_back(g.id_at(v));
  return res;
}

bool is_outerplane_set(const EmbeddedGraph& g, const VertexSet& subset) {
  return outer_vertices(g, subset).size() == to_set(subset).size();
}

OuterplaneChecker::OuterplaneChecker(const EmbeddedGraph& g) : g_(&g) {}

bool OuterplaneChecker::check(const std::vector<bool>& keep) const {
  Dsu dsu = regions(*g_, keep);
  for (int v = 0; v < static_cast<int>(g_->num_vertices()); ++v)
    if (keep[static_cast<std::size_t>(v)] && !on_infinite(*g_, dsu, v)) return false;
  return true;
}

LayerAssignment layers(const EmbeddedGraph& g) {
  LayerAssignment la;
  std::vector<bool> keep(g.num_vertices(), true);
  std::size_t remaining = g.num_vertices();
  while (remaining > 0) {
    auto out = outer_mask(g, keep);
    VertexSet layer;
    for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v)
      if (out[static_cast<std::size_t>(v)]) {
        layer.push_back(g.id_at(v));
        keep[static_cast<std::size_t>(v)] = false;
      }
    if (layer.empty()) fail(ErrorKind::InternalInvariantViolation, "empty layer while peeling");
    remaining -= layer.size();
    ++la.depth;
    for (VertexId v : layer) la.layer_of[v] = la.depth;
    la.layers.push_back(std::move(layer));
  }
  return la;
}

int outerplanarity_index(const EmbeddedGraph& g) { return layers(g).depth; }

std::vector<VertexSet> connected_components(const EmbeddedGraph& g) {
  std::vector<VertexSet> comps(static_cast<std::size_t>(g.num_components()));
  for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v)
    comps[static_cast<std::size_t>(g.component_of(v))].push_back(g.id_at(v));
  return comps;
}

namespace {

struct Biconnected {
  std::vector<std::vector<int>> blocks;  // dense vertex indices
  std::vector<bool> is_cut;
};

Biconnected biconnected(const EmbeddedGraph& g) {
  const int n = static_cast<int>(g.num_vertices());
  Biconnected res;
  res.is_cut.assign(static_cast<std::size_t>(n), false);
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> estack;
  int timer = 0;

  // iterative DFS: frame = (vertex, parent, next neighbour position)
  struct Frame {
    int v, parent, pos, children;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    if (g.deg(root) == 0) {
      res.blocks.push_back({root});
      disc[static_cast<std::size_t>(root)] = timer++;
      continue;
    }
    std::vector<Frame> st{{root, -1, 0, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!st.empty()) {
      Frame& fr = st.back();
      auto nb = g.nbrs(fr.v);
      if (fr.pos < static_cast<int>(nb.size())) {
        int w = nb[static_cast<std::size_t>(fr.pos++)];
        if (w == fr.parent) continue;
        auto wu = static_cast<std::size_t>(w);
        if (disc[wu] < 0) {
          estack.emplace_back(fr.v, w);
          ++fr.children;
          disc[wu] = low[wu] = timer++;
          st.push_back({w, fr.v, 0, 0});
        } else if (disc[wu] < disc[static_cast<std::size_t>(fr.v)]) {
          estack.emplace_back(fr.v, w);
          low[static_cast<std::size_t>(fr.v)] = std::min(low[static_cast<std::size_t>(fr.v)], disc[wu]);
        }
        continue;
      }
      Frame done = fr;
      st.pop_back();
      if (st.empty()) {
        if (done.children > 1) res.is_cut[static_cast<std::size_t>(done.v)] = true;
        break;
      }
      int p = st.back().v;
      auto pu = static_cast<std::size_t>(p), vu = static_cast<std::size_t>(done.v);
      low[pu] = std::min(low[pu], low[vu]);
      if (low[vu] >= disc[pu]) {
        if (st.back().parent != -1) res.is_cut[pu] = true;
        std::vector<int> block;
        while (true) {
          auto e = estack.back();
          estack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e.first == p && e.second == done.v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        res.blocks.push_back(std::move(block));
      }
    }
  }
  return res;
}

}  // namespace

VertexSet cut_vertices(const EmbeddedGraph& g) {
  auto bc = biconnected(g);
  VertexSet out;
  for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v)
    if (bc.is_cut[static_cast<std::size_t>(v)]) out.push_back(g.id_at(v));
  return out;
}

BlockCutTree block_cut_tree(const EmbeddedGraph& g) {
  if (g.num_components() > 1) fail(ErrorKind::Disconnected, "block_cut_tree needs a connected graph");
  auto bc = biconnected(g);
  BlockCutTree t;
  for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v)
    if (bc.is_cut[static_cast<std::size_t>(v)]) t.cut_vertices.push_back(g.id_at(v));
  for (const auto& b : bc.blocks) {
    VertexSet ids;
    for (int v : b) ids.push_back(g.id_at(v));
    t.blocks.push_back(to_set(std::move(ids)));
  }
  std::sort(t.blocks.begin(), t.blocks.end());
  for (std::size_t i = 0; i < t.blocks.size(); ++i)
    for (VertexId v : t.blocks[i])
      if (std::binary_search(t.cut_vertices.begin(), t.cut_vertices.end(), v))
        t.tree_edges.emplace_back(static_cast<int>(i), v);
  return t;
}

std::vector<std::vector<int>> DualTree::neighbours() const {
  std::vector<std::vector<int>> adj(nodes.size());
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

DualTree inner_dual_tree(const EmbeddedGraph& g1) {
  DualTree t;
  std::vector<int> node_of(static_cast<std::size_t>(g1.num_faces()), -1);
  for (int f = 0; f < g1.num_faces(); ++f) {
    if (g1.is_outer_face(f)) continue;
    node_of[static_cast<std::size_t>(f)] = static_cast<int>(t.nodes.size());
    Face face;
    for (int d : g1.face_darts(f)) face.boundary.push_back(g1.to_dart(d));
    t.nodes.push_back(std::move(face));
  }
  for (int d = 0; d < g1.num_darts(); ++d) {
    int e = g1.twin(d);
    if (d > e) continue;
    int a = node_of[static_cast<std::size_t>(g1.face_of(d))], b = node_of[static_cast<std::size_t>(g1.face_of(e))];
    if (a < 0 || b < 0) continue;
    if (a == b) fail(ErrorKind::NotTree, "finite face meets itself across an edge");
    t.edges.emplace_back(a, b);
    VertexId u = g1.id_at(g1.tail(d)), v = g1.id_at(g1.head(d));
    t.primal.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (!t.nodes.empty()) {
    if (t.edges.size() + 1 != t.nodes.size()) fail(ErrorKind::NotTree, "inner dual is not a tree");
    Dsu dsu(t.nodes.size());
    for (auto [a, b] : t.edges)
      if (!dsu.unite(a, b)) fail(ErrorKind::NotTree, "inner dual contains a cycle");
  }
  return t;
}

EmbeddedGraph induced_subgraph(const EmbeddedGraph& g, const VertexSet& kept_in) {
  VertexSet kept = to_set(kept_in);
  auto keep = mask_of(g, kept);
  RotationMap rot;
  for (VertexId v : kept) {
    auto& r = rot[v];
    int vi = g.index_of(v);
    for (int w : g.nbrs(vi))
      if (keep[static_cast<std::size_t>(w)]) r.push_back(g.id_at(w));
  }
  // provisional outer darts: any dart per component
  std::map<VertexId, VertexId> parent;
  std::function<VertexId(VertexId)> find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& [v, _] : rot) parent[v] = v;
  for (auto& [v, r] : rot)
    for (VertexId w : r) parent[find(v)] = find(w);
  std::map<VertexId, Dart> provisional;
  for (auto& [v, r] : rot)
    if (!r.empty() && !provisional.count(find(v))) provisional[find(v)] = Dart{v, r.front()};
  std::vector<Dart> prov;
  for (auto& [_, d] : provisional) prov.push_back(d);
  EmbeddedGraph sub;
  try {
    sub = EmbeddedGraph::from_rotations(rot, prov);
  } catch (const Error& e) {
    fail(ErrorKind::EmbeddingBroken, std::string("induced subgraph: ") + e.what());
  }
  if (sub.num_darts() == 0) return sub;

  Dsu dsu = regions(g, keep);
  const int inf = dsu.find(g.num_faces());
  std::vector<int> cls(static_cast<std::size_t>(sub.num_faces()));
  std::vector<int> fcomp(static_cast<std::size_t>(sub.num_faces()));
  for (int f = 0; f < sub.num_faces(); ++f) {
    int d = sub.face_darts(f).front();
    int gd = g.dart_between(g.index_of(sub.id_at(sub.tail(d))), g.index_of(sub.id_at(sub.head(d))));
    cls[static_cast<std::size_t>(f)] = dsu.find(g.face_of(gd));
    fcomp[static_cast<std::size_t>(f)] = sub.component_of(sub.tail(d));
  }
  std::vector<int> chosen(static_cast<std::size_t>(sub.num_components()), -1);
  std::set<int> seen{inf};
  std::deque<int> queue{inf};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int f = 0; f < sub.num_faces(); ++f) {
      if (cls[static_cast<std::size_t>(f)] != x) continue;
      int c = fcomp[static_cast<std::size_t>(f)];
      if (chosen[static_cast<std::size_t>(c)] >= 0) continue;
      chosen[static_cast<std::size_t>(c)] = f;
      for (int f2 = 0; f2 < sub.num_faces(); ++f2)
        if (fcomp[static_cast<std::size_t>(f2)] == c && seen.insert(cls[static_cast<std::size_t>(f2)]).second)
          queue.push_back(cls[static_cast<std::size_t>(f2)]);
    }
  }
  std::vector<Dart> outer;
  for (int c = 0; c < sub.num_components(); ++c) {
    int f = chosen[static_cast<std::size_t>(c)];
    if (f < 0) {
      // isolated vertices have no face; anything else must have been reached
      bool has_edges = false;
      for (int v = 0; v < static_cast<int>(sub.num_vertices()); ++v)
        if (sub.component_of(v) == c && sub.deg(v) > 0) has_edges = true;
      if (has_edges) fail(ErrorKind::EmbeddingBroken, "could not place a component of the induced subgraph");
      continue;
    }
    outer.push_back(sub.to_dart(sub.face_darts(f).front()));
  }
  return EmbeddedGraph::from_rotations(std::move(rot), std::move(outer));
}

EmbeddedGraph delete_vertices(const EmbeddedGraph& g, const VertexSet& removed) {
  auto gone = mask_of(g, to_set(removed));
  VertexSet kept;
  for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v)
    if (!gone[static_cast<std::size_t>(v)]) kept.push_back(g.id_at(v));
  if (kept.size() == g.num_vertices()) return g;
  return induced_subgraph(g, kept);
}

namespace {

// Half-edge multigraph used for contraction and edge removal. Every dart
// carries an "outer" flag; all darts of the infinite face are flagged.
class Mesh {
 public:
  explicit Mesh(const EmbeddedGraph& g) {
    const int m = g.num_darts();
    origin_.resize(static_cast<std::size_t>(m));
    twin_.resize(static_cast<std::size_t>(m));
    outer_.resize(static_cast<std::size_t>(m));
    hole_.assign(static_cast<std::size_t>(m), false);
    for (int d = 0; d < m; ++d) {
      origin_[static_cast<std::size_t>(d)] = g.id_at(g.tail(d));
      twin_[static_cast<std::size_t>(d)] = g.twin(d);
      outer_[static_cast<std::size_t>(d)] = g.is_outer_face(g.face_of(d));
    }
    for (int v = 0; v < static_cast<int>(g.num_vertices()); ++v) {
      auto& r = rot_[g.id_at(v)];
      for (int j = 0; j < g.deg(v); ++j) r.push_back(g.dart(v, j));
    }
  }

  VertexId target(int h) const { return origin_[static_cast<std::size_t>(twin_[static_cast<std::size_t>(h)])]; }

  int next(int h) const {
    int t = twin_[static_cast<std::size_t>(h)];
    const auto& r = rot_.at(origin_[static_cast<std::size_t>(t)]);
    auto it = std::find(r.begin(), r.end(), t);
    std::size_t pos = static_cast<std::size_t>(it - r.begin());
    return r[(pos + 1) % r.size()];
  }

  std::vector<int> face(int h) const {
    std::vector<int> out;
    int e = h;
    do {
      out.push_back(e);
      e = next(e);
    } while (e != h && out.size() <= origin_.size());
    return out;
  }

  int find_dart(VertexId u, VertexId v) const {
    for (int h : rot_.at(u))
      if (target(h) == v) return h;
    return -1;
  }

  // Contracts edge h = u->v into u.
  void contract(int h) {
    int t = twin_[static_cast<std::size_t>(h)];
    VertexId u = origin_[static_cast<std::size_t>(h)], v = origin_[static_cast<std::size_t>(t)];
    auto& ru = rot_[u];
    auto rv = rot_[v];
    auto iu = static_cast<std::size_t>(std::find(ru.begin(), ru.end(), h) - ru.begin());
    auto iv = static_cast<std::size_t>(std::find(rv.begin(), rv.end(), t) - rv.begin());
    std::vector<int> merged(ru.begin(), ru.begin() + static_cast<std::ptrdiff_t>(iu));
    for (std::size_t k = 1; k < rv.size(); ++k) merged.push_back(rv[(iv + k) % rv.size()]);
    merged.insert(merged.end(), ru.begin() + static_cast<std::ptrdiff_t>(iu) + 1, ru.end());
    for (int x : rv) origin_[static_cast<std::size_t>(x)] = u;
    ru = std::move(merged);
    rot_.erase(v);
  }

  void remove(int h) {
    int t = twin_[static_cast<std::size_t>(h)];
    {
      // bridge: remember the walk so a piece that floats free can be placed
      auto fh = face(h);
      if (std::find(fh.begin(), fh.end(), t) != fh.end())
        for (int x : fh) hole_[static_cast<std::size_t>(x)] = true;
    }
    if (outer_[static_cast<std::size_t>(h)] || outer_[static_cast<std::size_t>(t)]) {
      for (int x : face(h)) outer_[static_cast<std::size_t>(x)] = true;
      for (int x : face(t)) outer_[static_cast<std::size_t>(x)] = true;
    }
    for (int x : {h, t}) {
      auto& r = rot_[origin_[static_cast<std::size_t>(x)]];
      r.erase(std::find(r.begin(), r.end(), x));
    }
  }

  void drop_loops_and_parallels() {
    for (auto& [u, r] : rot_) {
      for (std::size_t k = 0; k < r.size();) {
        int h = r[k];
        if (target(h) == u) {
          remove(h);
          k = 0;
          continue;
        }
        ++k;
      }
    }
    for (auto& [u, r] : rot_) {
      std::map<VertexId, int> keep;
      for (int h : r) {
        auto [it, fresh] = keep.emplace(target(h), h);
        if (!fresh) it->second = std::min(it->second, h);
      }
      std::vector<int> extra;
      for (int h : r)
        if (keep[target(h)] != h) extra.push_back(h);
      for (int h : extra) remove(h);
    }
  }

  EmbeddedGraph to_graph() const {
    RotationMap rot;
    for (const auto& [v, r] : rot_) {
      auto& out = rot[v];
      for (int h : r) out.push_back(target(h));
    }
    // one outer dart per component
    std::map<VertexId, VertexId> parent;
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto& [v, _] : rot) parent[v] = v;
    for (auto& [v, r] : rot)
      for (VertexId w : r) parent[find(v)] = find(w);
    std::map<VertexId, Dart> chosen, fallback;
    std::set<VertexId> needs;
    for (const auto& [v, r] : rot_)
      for (int h : r) {
        needs.insert(find(v));
        if (outer_[static_cast<std::size_t>(h)] && !chosen.count(find(v))) chosen[find(v)] = Dart{v, target(h)};
        if (hole_[static_cast<std::size_t>(h)] && !fallback.count(find(v))) fallback[find(v)] = Dart{v, target(h)};
      }
    for (auto& [c, d] : fallback) chosen.emplace(c, d);
    std::vector<Dart> outer;
    for (VertexId c : needs) {
      auto it = chosen.find(c);
      if (it == chosen.end()) fail(ErrorKind::EmbeddingBroken, "surgery detached a nested component");
      outer.push_back(it->second);
    }
    try {
      return EmbeddedGraph::from_rotations(std::move(rot), std::move(outer));
    } catch (const Error& e) {
      fail(ErrorKind::EmbeddingBroken, e.what());
    }
  }

  const std::map<VertexId, std::vector<int>>& rotations() const { return rot_; }

 private:
  std::map<VertexId, std::vector<int>> rot_;
  std::vector<VertexId> origin_;
  std::vector<int> twin_;
  std::vector<bool> outer_;
  std::vector<bool> hole_;
};

}  // namespace

EmbeddedGraph contract_star(const EmbeddedGraph& g, VertexId center, const VertexSet& spokes_in,
                            VertexId representative) {
  VertexSet spokes = to_set(spokes_in);
  VertexSet merged = spokes;
  merged.push_back(center);
  merged = to_set(merged);
  for (VertexId v : merged)
    if (!g.has_vertex(v)) fail(ErrorKind::UnknownVertex, std::to_string(v));
  if (!std::binary_search(merged.begin(), merged.end(), representative))
    fail(ErrorKind::NotAdjacent, "representative is not part of the contracted set");

  Mesh mesh(g);
  std::set<VertexId> pending(merged.begin(), merged.end());
  pending.erase(representative);
  while (!pending.empty()) {
    int pick = -1;
    VertexId best = 0;
    for (int h : mesh.rotations().at(representative)) {
      VertexId t = mesh.target(h);
      if (pending.count(t) && (pick < 0 || t < best)) {
        pick = h;
        best = t;
      }
    }
    if (pick < 0) fail(ErrorKind::NotAdjacent, "contracted vertex set is not connected");
    mesh.contract(pick);
    pending.erase(best);
  }
  mesh.drop_loops_and_parallels();
  return mesh.to_graph();
}

EmbeddedGraph remove_edges(const EmbeddedGraph& g, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  Mesh mesh(g);
  for (auto [u, v] : edges) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "remove_edges");
    int h = mesh.find_dart(u, v);
    if (h < 0) fail(ErrorKind::NotAdjacent, std::to_string(u) + "-" + std::to_string(v));
    mesh.remove(h);
  }
  return mesh.to_graph();
}

EmbeddedGraph insert_edge(const EmbeddedGraph& g, VertexId u, VertexId u_after, VertexId v,
                          VertexId v_after) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "insert_edge");
  if (u == v || g.adjacent(u, v)) fail(ErrorKind::InvalidEmbedding, "insert_edge would create a multi-edge or loop");
  RotationMap rot = g.rotations();
  auto place = [&](VertexId x, VertexId after, VertexId nb) {
    auto& r = rot[x];
    if (r.empty()) {
      r.push_back(nb);
      return;
    }
    auto it = std::find(r.begin(), r.end(), after);
    if (it == r.end()) fail(ErrorKind::NotAdjacent, "insert_edge anchor is not a neighbour");
    r.insert(it + 1, nb);
  };
  place(u, u_after, v);
  place(v, v_after, u);
  return EmbeddedGraph::from_rotations(std::move(rot), g.outer_darts());
}

bool induces_forest(const EmbeddedGraph& g, const VertexSet& subset) {
  auto keep = mask_of(g, subset);
  Dsu dsu(g.num_vertices());
  for (int d = 0; d < g.num_darts(); ++d) {
    int a = g.tail(d), b = g.head(d);
    if (a > b || !keep[static_cast<std::size_t>(a)] || !keep[static_cast<std::size_t>(b)]) continue;
    if (!dsu.unite(a, b)) return false;
  }
  return true;
}

std::vector<FacialBlock> facial_blocks(const EmbeddedGraph& g, const LayerAssignment& la) {
  if (la.depth > 2) fail(ErrorKind::LayerTooDeep, "facial blocks need at most two layers");
  std::vector<FacialBlock> out;
  if (g.empty()) return out;
  const VertexSet& l1 = la.layer(1);
  EmbeddedGraph g1 = induced_subgraph(g, l1);
  auto keep = mask_of(g, l1);
  Dsu dsu = regions(g, keep);

  // class of each L2 vertex
  std::map<int, VertexSet> enclosed_by_class;
  if (la.depth == 2)
    for (VertexId v : la.layer(2)) {
      int vi = g.index_of(v);
      if (g.deg(vi) == 0) continue;
      enclosed_by_class[dsu.find(g.face_of(g.dart(vi, 0)))].push_back(v);
    }

  int finite = 0;
  for (int f = 0; f < g1.num_faces(); ++f)
    if (!g1.is_outer_face(f)) ++finite;

  for (int f = 0; f < g1.num_faces(); ++f) {
    if (g1.is_outer_face(f)) continue;
    FacialBlock b;
    auto darts = g1.face_darts(f);
    std::vector<std::pair<VertexId, VertexId>> inner_edges, all_edges;
    for (int d : darts) {
      b.cycle.push_back(g1.id_at(g1.tail(d)));
      VertexId x = g1.id_at(g1.tail(d)), y = g1.id_at(g1.head(d));
      auto e = std::make_pair(std::min(x, y), std::max(x, y));
      all_edges.push_back(e);
      if (!g1.is_outer_face(g1.face_of(g1.twin(d)))) inner_edges.push_back(e);
    }
    int d0 = darts.front();
    int gd = g.dart_between(g.index_of(g1.id_at(g1.tail(d0))), g.index_of(g1.id_at(g1.head(d0))));
    auto it = enclosed_by_class.find(dsu.find(g.face_of(gd)));
    if (it != enclosed_by_class.end()) b.enclosed = it->second;
    VertexSet members = b.cycle;
    members.insert(members.end(), b.enclosed.begin(), b.enclosed.end());
    b.block_graph = induced_subgraph(g, to_set(members));
    if (finite == 1) {
      b.whole_graph = true;
      b.leaf = true;
      b.shared_edge = *std::min_element(all_edges.begin(), all_edges.end());
    } else if (inner_edges.size() == 1) {
      b.leaf = true;
      b.shared_edge = inner_edges.front();
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace twoouter
