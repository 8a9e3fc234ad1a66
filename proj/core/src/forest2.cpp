#include "twoouter/forest2.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "dsu.hpp"

namespace twoouter {

std::string_view to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::Split: return "Split";
    case ReductionKind::R_Cut: return "R_Cut";
    case ReductionKind::Triangulate: return "Triangulate";
    case ReductionKind::R1_LowDegree: return "R1_LowDegree";
    case ReductionKind::R2_Deg4: return "R2_Deg4";
    case ReductionKind::R3_BoundaryCritical: return "R3_BoundaryCritical";
    case ReductionKind::R4_CriticalPair: return "R4_CriticalPair";
  }
  return "?";
}

std::string Surgery::describe() const {
  std::ostringstream os;
  auto list = [&](const VertexSet& s) {
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
  };
  switch (op) {
    case Op::Pieces:
      os << "pieces";
      for (const auto& p : pieces) {
        os << ' ';
        list(p);
      }
      break;
    case Op::AddChords:
      os << "add";
      for (const auto& c : chords) os << ' ' << c.u << '-' << c.w;
      break;
    case Op::DeleteVertex: os << "delete " << vertex; break;
    case Op::Contract:
      os << "contract center " << center << " spokes ";
      list(spokes);
      os << " into " << representative;
      break;
  }
  return os.str();
}

namespace {

using Classes = std::map<VertexId, int>;

std::vector<EmbeddedGraph> apply_surgery(const EmbeddedGraph& g, const Surgery& s) {
  std::vector<EmbeddedGraph> out;
  switch (s.op) {
    case Surgery::Op::Pieces:
      for (const auto& p : s.pieces) out.push_back(induced_subgraph(g, p));
      break;
    case Surgery::Op::AddChords: {
      EmbeddedGraph h = g;
      for (const auto& c : s.chords) h = apply_chord(h, c);
      out.push_back(std::move(h));
      break;
    }
    case Surgery::Op::DeleteVertex: out.push_back(delete_vertices(g, {s.vertex})); break;
    case Surgery::Op::Contract: out.push_back(contract_star(g, s.center, s.spokes, s.representative)); break;
  }
  return out;
}

bool classes_acyclic(const EmbeddedGraph& g, const Classes& cls) {
  Dsu dsu(g.num_vertices());
  for (int d = 0; d < g.num_darts(); ++d) {
    int u = g.tail(d), v = g.head(d);
    if (u > v) continue;
    if (cls.at(g.id_at(u)) != cls.at(g.id_at(v))) continue;
    if (!dsu.unite(u, v)) return false;
  }
  return true;
}

std::set<VertexId> nbr_set(const EmbeddedGraph& g, VertexId v) {
  auto r = g.rotation(v);
  return {r.begin(), r.end()};
}

/// Third vertices of the triangular faces on either side of edge x-y.
std::vector<VertexId> apexes(const EmbeddedGraph& g, VertexId x, VertexId y) {
  std::vector<VertexId> out;
  int d = g.dart_between(g.index_of(x), g.index_of(y));
  if (d < 0) return out;
  for (int e : {d, g.twin(d)}) {
    int f = g.face_of(e);
    if (g.is_outer_face(f) || g.face_size(f) != 3) continue;
    out.push_back(g.id_at(g.head(g.next(e))));
  }
  return out;
}

std::optional<VertexId> apex_other_than(const EmbeddedGraph& g, VertexId x, VertexId y, VertexId not_this) {
  for (VertexId z : apexes(g, x, y))
    if (z != not_this) return z;
  return std::nullopt;
}

bool opposite_at(const EmbeddedGraph& g, VertexId at, VertexId p, VertexId q) {
  auto r = g.rotation(at);
  if (r.size() != 4) return false;
  auto ip = std::find(r.begin(), r.end(), p) - r.begin();
  auto iq = std::find(r.begin(), r.end(), q) - r.begin();
  return ip < 4 && iq < 4 && (ip - iq == 2 || iq - ip == 2);
}

[[noreturn]] void invariant(const std::string& what) { fail(ErrorKind::InternalInvariantViolation, what); }

}  // namespace

void validate_witness(const EmbeddedGraph& g, const LayerAssignment& la, const ReductionWitness& w) {
  auto bad = [&](const std::string& why) {
    fail(ErrorKind::WitnessInvalid, std::string(to_string(w.kind)) + ": " + why);
  };
  const auto& n = w.named;
  for (VertexId v : n)
    if (!g.has_vertex(v)) bad("unknown vertex " + std::to_string(v));
  if (std::set<VertexId>(n.begin(), n.end()).size() != n.size()) bad("named vertices not distinct");
  auto need_edge = [&](VertexId x, VertexId y) {
    if (!g.adjacent(x, y)) bad("missing edge " + std::to_string(x) + "-" + std::to_string(y));
  };
  auto need_layer = [&](VertexId x, int l) {
    if (la.of(x) != l) bad("vertex " + std::to_string(x) + " not in L" + std::to_string(l));
  };
  auto need_nbrs = [&](VertexId x, std::set<VertexId> s) {
    if (nbr_set(g, x) != s) bad("neighbourhood of " + std::to_string(x) + " does not match");
  };
  switch (w.kind) {
    case ReductionKind::R1_LowDegree:
      if (n.size() != 1 || g.degree(n[0]) > 3) bad("needs one vertex of degree <= 3");
      return;
    case ReductionKind::R2_Deg4: {
      if (n.size() != 6) bad("needs 6 vertices");
      VertexId a = n[0], b = n[1], c = n[2], d = n[3], e = n[4], f = n[5];
      for (VertexId x : {a, b, c}) need_layer(x, 2);
      for (VertexId x : {d, e, f}) need_layer(x, 1);
      need_nbrs(c, {a, b, d, e});
      need_nbrs(d, {a, c, e, f});
      need_edge(a, b);
      need_edge(a, f);
      need_edge(e, b);
      if (!opposite_at(g, d, c, f)) bad("c and f are not opposite around d");
      return;
    }
    case ReductionKind::R3_BoundaryCritical: {
      if (n.size() != 6) bad("needs 6 vertices");
      VertexId a = n[0], b = n[1], c = n[2], d = n[3], e = n[4], f = n[5];
      for (VertexId x : {a, b, c, f}) need_layer(x, 2);
      for (VertexId x : {d, e}) need_layer(x, 1);
      need_nbrs(c, {a, b, d, e});
      need_edge(a, b);
      need_edge(d, a);
      need_edge(e, b);
      need_edge(f, a);
      need_edge(f, b);
      if (!opposite_at(g, c, a, e)) bad("a and e are not opposite around c");
      return;
    }
    case ReductionKind::R4_CriticalPair: {
      if (n.size() != 8) bad("needs 8 vertices");
      VertexId a = n[0], b = n[1], c = n[2], d = n[3], e = n[4], f = n[5], gg = n[6], h = n[7];
      for (VertexId x : {a, b, c, f, gg}) need_layer(x, 2);
      for (VertexId x : {d, e, h}) need_layer(x, 1);
      need_nbrs(c, {a, b, d, e});
      need_nbrs(gg, {b, f, e, h});
      need_edge(a, b);
      need_edge(a, f);
      need_edge(b, f);
      need_edge(d, a);
      need_edge(e, b);
      need_edge(h, f);
      return;
    }
    default: bad("not a local reduction");
  }
}

namespace {

std::optional<ReductionWitness> find_r2(const EmbeddedGraph& g, const LayerAssignment& la) {
  for (VertexId c : g.vertices()) {
    if (la.of(c) != 2 || g.degree(c) != 4) continue;
    std::vector<VertexId> A, D;
    for (VertexId x : g.rotation(c)) (la.of(x) == 2 ? A : D).push_back(x);
    if (A.size() != 2 || D.size() != 2 || !g.adjacent(A[0], A[1])) continue;
    std::sort(A.begin(), A.end());
    std::sort(D.begin(), D.end());
    for (int di = 0; di < 2; ++di) {
      VertexId d = D[static_cast<std::size_t>(di)], e = D[static_cast<std::size_t>(1 - di)];
      if (g.degree(d) != 4) continue;
      for (int ai = 0; ai < 2; ++ai) {
        VertexId a = A[static_cast<std::size_t>(ai)], b = A[static_cast<std::size_t>(1 - ai)];
        auto nd = nbr_set(g, d);
        if (!nd.count(a) || !nd.count(c) || !nd.count(e)) continue;
        nd.erase(a);
        nd.erase(c);
        nd.erase(e);
        VertexId f = *nd.begin();
        ReductionWitness w{ReductionKind::R2_Deg4, {a, b, c, d, e, f}};
        try {
          validate_witness(g, la, w);
          return w;
        } catch (const Error&) {
        }
      }
    }
  }
  return std::nullopt;
}

struct KInfo {
  VertexSet vertices;
  VertexId separating;
};

KInfo choose_k(const EmbeddedGraph& g, const LayerAssignment& la) {
  auto blocks = facial_blocks(g, la);
  const FacialBlock* B = nullptr;
  for (const auto& b : blocks)
    if (b.leaf) {
      B = &b;
      break;
    }
  if (!B || !B->shared_edge) invariant("no leaf facial block");
  auto [xb, yb] = *B->shared_edge;
  std::optional<VertexId> vb;
  for (VertexId z : apexes(g, xb, yb))
    if (std::binary_search(B->enclosed.begin(), B->enclosed.end(), z)) vb = z;
  if (!vb) invariant("facial block has no separating vertex");

  EmbeddedGraph l2b = induced_subgraph(g, B->enclosed);
  if (l2b.num_components() != 1) invariant("G[L2^B] is disconnected");
  BlockCutTree bct = block_cut_tree(l2b);
  if (bct.blocks.size() == 1) return {bct.blocks[0], *vb};

  std::map<int, std::vector<VertexId>> cuts_of;
  for (auto [bi, cv] : bct.tree_edges) cuts_of[bi].push_back(cv);
  std::optional<std::size_t> pick, pick_weak;
  for (std::size_t i = 0; i < bct.blocks.size(); ++i) {
    const auto& cv = cuts_of[static_cast<int>(i)];
    if (cv.size() != 1) continue;
    const auto& blk = bct.blocks[i];
    bool has_vb = std::binary_search(blk.begin(), blk.end(), *vb);
    if (!has_vb && !pick) pick = i;
    if (has_vb && cv[0] == *vb && !pick_weak) pick_weak = i;
  }
  if (!pick) pick = pick_weak;
  if (!pick) invariant("no leaf block of G[L2^B] avoids the separating vertex");
  return {bct.blocks[*pick], cuts_of[static_cast<int>(*pick)][0]};
}

ReductionWitness dual_tree_search(const EmbeddedGraph& g, const LayerAssignment& la) {
  KInfo K = choose_k(g, la);
  if (K.vertices.size() < 4) invariant("block K has fewer than 4 vertices");
  EmbeddedGraph kg = induced_subgraph(g, K.vertices);
  std::set<std::pair<VertexId, VertexId>> boundary;
  for (int d = 0; d < kg.num_darts(); ++d)
    if (kg.is_outer_face(kg.face_of(d))) {
      VertexId x = kg.id_at(kg.tail(d)), y = kg.id_at(kg.head(d));
      boundary.emplace(std::min(x, y), std::max(x, y));
    }
  auto on_boundary = [&](VertexId x, VertexId y) { return boundary.count({std::min(x, y), std::max(x, y)}) > 0; };

  DualTree T = inner_dual_tree(kg);
  const std::size_t N = T.nodes.size();
  std::vector<VertexSet> tri(N);
  for (std::size_t i = 0; i < N; ++i) {
    tri[i] = to_set(T.nodes[i].vertex_walk());
    if (tri[i].size() != 3 || T.nodes[i].boundary.size() != 3) invariant("block K has a non-triangular face");
  }
  std::vector<std::vector<std::pair<int, int>>> adj(N);  // (node, edge index)
  for (std::size_t i = 0; i < T.edges.size(); ++i) {
    auto [p, q] = T.edges[i];
    adj[static_cast<std::size_t>(p)].emplace_back(q, static_cast<int>(i));
    adj[static_cast<std::size_t>(q)].emplace_back(p, static_cast<int>(i));
  }

  int root = -1, best = -1;
  for (std::size_t i = 0; i < N; ++i) {
    if (!std::binary_search(tri[i].begin(), tri[i].end(), K.separating)) continue;
    int cnt = 0;
    for (int j = 0; j < 3; ++j) {
      VertexId x = tri[i][static_cast<std::size_t>(j)], y = tri[i][static_cast<std::size_t>((j + 1) % 3)];
      cnt += on_boundary(x, y);
    }
    if (cnt > best || (cnt == best && tri[i] < tri[static_cast<std::size_t>(root)])) {
      best = cnt;
      root = static_cast<int>(i);
    }
  }
  if (root < 0) invariant("separating vertex of K lies on no triangle");

  std::vector<int> depth(N, -1), parent(N, -1), parent_edge(N, -1);
  std::deque<int> q{root};
  depth[static_cast<std::size_t>(root)] = 0;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (auto [y, ei] : adj[static_cast<std::size_t>(x)])
      if (depth[static_cast<std::size_t>(y)] < 0) {
        depth[static_cast<std::size_t>(y)] = depth[static_cast<std::size_t>(x)] + 1;
        parent[static_cast<std::size_t>(y)] = x;
        parent_edge[static_cast<std::size_t>(y)] = ei;
        q.push_back(y);
      }
  }
  int xs = -1;
  for (std::size_t i = 0; i < N; ++i) {
    if (static_cast<int>(i) == root || adj[i].size() != 1) continue;
    if (xs < 0 || depth[i] > depth[static_cast<std::size_t>(xs)] ||
        (depth[i] == depth[static_cast<std::size_t>(xs)] && tri[i] < tri[static_cast<std::size_t>(xs)]))
      xs = static_cast<int>(i);
  }
  if (xs < 0) invariant("dual tree of K has no leaf");
  const int ys = parent[static_cast<std::size_t>(xs)];
  auto [a0, b0] = T.primal[static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(xs)])];
  auto third = [&](int node, VertexId x, VertexId y) {
    for (VertexId z : tri[static_cast<std::size_t>(node)])
      if (z != x && z != y) return z;
    invariant("degenerate triangle");
  };
  const VertexId c = third(xs, a0, b0);
  const VertexId f = third(ys, a0, b0);
  const std::size_t dy = adj[static_cast<std::size_t>(ys)].size();

  auto l1_across = [&](VertexId top, VertexId x, VertexId other) {
    auto z = apex_other_than(g, top, x, other);
    if (!z) invariant("missing face next to critical triangle");
    return *z;
  };
  auto make_r3 = [&](VertexId a, VertexId b) {
    VertexId d = l1_across(c, a, b), e = l1_across(c, b, a);
    return ReductionWitness{ReductionKind::R3_BoundaryCritical, {a, b, c, d, e, f}};
  };

  if (dy == 1) {
    std::vector<VertexId> cand;
    for (VertexId p : {std::min(a0, b0), std::max(a0, b0)})
      if (p != K.separating) cand.push_back(p);
    if (cand.empty()) invariant("both ends of the leaf edge are separating");
    VertexId a = cand.front();
    return make_r3(a, a == a0 ? b0 : a0);
  }
  if (dy == 2) {
    VertexId p;
    if (on_boundary(b0, f) && !on_boundary(a0, f))
      p = b0;
    else if (on_boundary(a0, f) && !on_boundary(b0, f))
      p = a0;
    else
      invariant("parent triangle with two children has no single boundary edge");
    if (p == K.separating) invariant("boundary endpoint of the parent triangle is separating");
    return make_r3(p, p == a0 ? b0 : a0);
  }
  // dy == 3: sibling leaf z* hangs off one of the other two edges of y*
  int zs = -1;
  for (auto [y, ei] : adj[static_cast<std::size_t>(ys)])
    if (y != xs && y != parent[static_cast<std::size_t>(ys)]) zs = y;
  if (zs < 0 || adj[static_cast<std::size_t>(zs)].size() != 1) invariant("sibling of the deepest leaf is not a leaf");
  VertexId a = a0, b = b0;
  if (!std::binary_search(tri[static_cast<std::size_t>(zs)].begin(), tri[static_cast<std::size_t>(zs)].end(), b))
    std::swap(a, b);
  const VertexId gg = third(zs, b, f);
  VertexId d = l1_across(c, a, b), e = l1_across(c, b, a);
  VertexId i = l1_across(gg, b, f), h = l1_across(gg, f, b);
  if (i != e) invariant("critical pair does not share the L1 vertex");
  return ReductionWitness{ReductionKind::R4_CriticalPair, {a, b, c, d, e, f, gg, h}};
}

}  // namespace

ReductionWitness locate_reduction(const EmbeddedGraph& g) {
  if (g.num_components() != 1 || g.num_vertices() < 5)
    fail(ErrorKind::PreconditionViolated, "locate_reduction needs a connected graph on >= 5 vertices");
  for (VertexId v : g.vertices())
    if (g.degree(v) < 4) fail(ErrorKind::PreconditionViolated, "vertex of degree < 4");
  for (int f = 0; f < g.num_faces(); ++f)
    if (!g.is_outer_face(f) && g.face_size(f) != 3) fail(ErrorKind::PreconditionViolated, "not a disk triangulation");
  if (!cut_vertices(g).empty()) fail(ErrorKind::PreconditionViolated, "graph has a cut vertex");
  LayerAssignment la = layers(g);
  if (la.depth != 2) invariant("reduced graph is not of depth 2");
  if (auto w = find_r2(g, la)) return *w;
  ReductionWitness w = dual_tree_search(g, la);
  try {
    validate_witness(g, la, w);
  } catch (const Error& e) {
    invariant(std::string("located witness fails its pattern: ") + e.what());
  }
  return w;
}

bool validate_partition(const EmbeddedGraph& g, const ForestPartition& p) {
  std::vector<int> cls(g.num_vertices(), -1);
  for (int k = 0; k < 2; ++k)
    for (VertexId v : k == 0 ? p.f0 : p.f1) {
      int i = g.index_of(v);
      if (i < 0 || cls[static_cast<std::size_t>(i)] >= 0) return false;
      cls[static_cast<std::size_t>(i)] = k;
    }
  if (std::count(cls.begin(), cls.end(), -1) > 0) return false;
  return induces_forest(g, to_set(p.f0)) && induces_forest(g, to_set(p.f1));
}

namespace {

class Solver {
 public:
  Solver(const ForestOptions& opts, ReductionTrace& trace) : opts_(opts), trace_(trace) {}

  Classes solve(const EmbeddedGraph& g0) {
    notify(g0);
    Classes cls;
    const auto n = g0.num_vertices();
    if (n <= 2) {
      for (VertexId v : g0.vertices()) cls[v] = 0;
      return cls;
    }
    if (g0.num_components() > 1) {
      Surgery s;
      s.op = Surgery::Op::Pieces;
      s.pieces = connected_components(g0);
      auto parts = record({ReductionKind::Split, {}}, g0, s);
      for (const auto& part : parts) {
        Classes sub = solve(part);
        cls.insert(sub.begin(), sub.end());
      }
      return cls;
    }
    VertexSet cuts = cut_vertices(g0);
    if (!cuts.empty()) return cut_split(g0, cuts.front());

    EmbeddedGraph g = g0;
    bool tri = false;
    for (int f = 0; f < g.num_faces(); ++f)
      if (!g.is_outer_face(f) && g.face_size(f) > 3) tri = true;
    if (tri) {
      Augmentation aug = triangulate_disk(g);
      Surgery s;
      s.op = Surgery::Op::AddChords;
      s.chords = aug.added_edges;
      g = record({ReductionKind::Triangulate, {}}, g, s).front();
    }

    for (VertexId v : g.vertices())
      if (g.degree(v) <= 3) return r1(g, v);

    ReductionWitness w = locate_reduction(g);
    return contract_and_rebuild(g, w);
  }

 private:
  void notify(const EmbeddedGraph& g) {
    if (opts_.on_graph) opts_.on_graph(g);
  }

  std::vector<EmbeddedGraph> record(ReductionWitness w, const EmbeddedGraph& g, const Surgery& s) {
    TraceStep step;
    step.witness = std::move(w);
    step.surgery = s;
    step.hash_before = g.hash();
    auto out = apply_surgery(g, s);
    for (const auto& h : out) step.hashes_after.push_back(h.hash());
    trace_.steps.push_back(std::move(step));
    return out;
  }

  void check(const EmbeddedGraph& g, const Classes& cls, const char* what) {
    if (!classes_acyclic(g, cls))
      fail(ErrorKind::ReconstructionAcyclicityFailure, std::string(what) + " produced a cycle");
  }

  Classes cut_split(const EmbeddedGraph& g, VertexId c) {
    auto rest = connected_components(delete_vertices(g, {c}));
    VertexSet b1 = rest.front(), b2;
    b1.push_back(c);
    for (std::size_t i = 1; i < rest.size(); ++i) b2.insert(b2.end(), rest[i].begin(), rest[i].end());
    b2.push_back(c);
    Surgery s;
    s.op = Surgery::Op::Pieces;
    s.pieces = {to_set(b1), to_set(b2)};
    auto parts = record({ReductionKind::R_Cut, {c}}, g, s);
    Classes p1 = solve(parts[0]);
    Classes p2 = solve(parts[1]);
    const bool flip = p1.at(c) != p2.at(c);
    for (auto [v, k] : p2) p1[v] = flip ? 1 - k : k;
    check(g, p1, "cut split");
    return p1;
  }

  Classes r1(const EmbeddedGraph& g, VertexId v) {
    Surgery s;
    s.op = Surgery::Op::DeleteVertex;
    s.vertex = v;
    auto parts = record({ReductionKind::R1_LowDegree, {v}}, g, s);
    Classes cls = solve(parts[0]);
    int in0 = 0;
    for (VertexId w : g.rotation(v)) in0 += cls.at(w) == 0;
    cls[v] = in0 <= 1 ? 0 : 1;
    check(g, cls, "R1");
    return cls;
  }

  Classes contract_and_rebuild(const EmbeddedGraph& g, const ReductionWitness& w) {
    const auto& n = w.named;
    Surgery s;
    s.op = Surgery::Op::Contract;
    VertexSet removed;
    switch (w.kind) {
      case ReductionKind::R2_Deg4:  // {f,d,c} -> f
        s.center = n[3];
        s.spokes = to_set({n[5], n[2]});
        s.representative = n[5];
        removed = to_set({n[2], n[3]});
        break;
      case ReductionKind::R3_BoundaryCritical:  // {a,c,e} -> e
        s.center = n[2];
        s.spokes = to_set({n[0], n[4]});
        s.representative = n[4];
        removed = to_set({n[0], n[2]});
        break;
      case ReductionKind::R4_CriticalPair:  // {e,c,b,g,h} -> h
        s.center = n[4];
        s.spokes = to_set({n[2], n[1], n[6], n[7]});
        s.representative = n[7];
        removed = to_set({n[4], n[2], n[1], n[6]});
        break;
      default: invariant("unexpected witness kind");
    }
    auto parts = record(w, g, s);
    const EmbeddedGraph& minor = parts[0];
    if (outerplanarity_index(minor) > 2) invariant("contraction raised the outerplanarity index");
    const std::size_t step_index = trace_.steps.size() - 1;

    Classes cls = solve(minor);
    apply_table(g, w, cls);
    if (classes_acyclic(g, cls)) return cls;
    if (!opts_.allow_local_repair)
      fail(ErrorKind::ReconstructionAcyclicityFailure, std::string(to_string(w.kind)) + " case table produced a cycle");
    for (unsigned mask = 0; mask < (1u << removed.size()); ++mask) {
      for (std::size_t i = 0; i < removed.size(); ++i) cls[removed[i]] = (mask >> i) & 1u;
      if (classes_acyclic(g, cls)) {
        trace_.steps[step_index].repaired = true;
        return cls;
      }
    }
    fail(ErrorKind::ReconstructionAcyclicityFailure,
         std::string(to_string(w.kind)) + ": no reinsertion of the contracted vertices is acyclic");
  }

  static void apply_table(const EmbeddedGraph& g, const ReductionWitness& w, Classes& cls) {
    const auto& n = w.named;
    switch (w.kind) {
      case ReductionKind::R2_Deg4: {
        VertexId a = n[0], b = n[1], c = n[2], d = n[3], e = n[4], f = n[5];
        const int X = cls.at(f), Y = 1 - X;
        if (cls.at(b) == X) {
          cls[c] = X;
          cls[d] = g.adjacent(b, f) ? Y : X;
        } else if (cls.at(a) == X && cls.at(e) == X) {
          cls[c] = cls[d] = Y;
        } else if (cls.at(a) == Y && cls.at(e) == Y) {
          cls[c] = cls[d] = X;
        } else {
          cls[c] = X;
          cls[d] = Y;
        }
        return;
      }
      case ReductionKind::R3_BoundaryCritical: {
        VertexId a = n[0], b = n[1], c = n[2], d = n[3], e = n[4], f = n[5];
        const int X = cls.at(f), Y = 1 - X;
        if (cls.at(e) == X) {
          cls[a] = X;
          cls[c] = g.adjacent(f, e) ? Y : X;
        } else if (cls.at(b) == X && cls.at(d) == X) {
          cls[a] = cls[c] = Y;
        } else if (cls.at(b) == Y && cls.at(d) == Y) {
          cls[a] = cls[c] = X;
        } else {
          cls[c] = X;
          cls[a] = Y;
        }
        return;
      }
      case ReductionKind::R4_CriticalPair: {
        VertexId a = n[0], b = n[1], c = n[2], d = n[3], e = n[4], f = n[5], gg = n[6], h = n[7];
        const int X = cls.at(a), Y = 1 - X;
        auto put = [&](std::initializer_list<VertexId> vs, int k) {
          for (VertexId v : vs) cls[v] = k;
        };
        if (cls.at(h) == X) {
          if (g.adjacent(a, h)) {
            put({e, b}, Y);
            put({c, gg}, X);
          } else {
            put({b, e}, X);
            put({c, gg}, Y);
          }
        } else {
          const int D = cls.at(d), F = cls.at(f);
          if (D == Y && F == Y) {
            put({c, e, gg}, X);
            put({b}, Y);
          } else if (D == X && F == X) {
            put({e}, X);
            put({b, c, gg}, Y);
          } else if (D == X && F == Y) {
            put({e, gg}, X);
            put({b, c}, Y);
          } else {
            put({c, gg}, X);
            put({b, e}, Y);
          }
        }
        return;
      }
      default: return;
    }
  }

  const ForestOptions& opts_;
  ReductionTrace& trace_;
};

}  // namespace

ForestResult partition_two_forests(const EmbeddedGraph& g, const ForestOptions& opts) {
  if (outerplanarity_index(g) > 2) fail(ErrorKind::NotTwoOuterplanar, "outerplanarity index exceeds 2");
  ForestResult res;
  Solver solver(opts, res.trace);
  Classes cls = solver.solve(g);
  for (auto [v, k] : cls) (k == 0 ? res.partition.f0 : res.partition.f1).push_back(v);
  if (!validate_partition(g, res.partition))
    fail(ErrorKind::ReconstructionAcyclicityFailure, "final partition failed validation");
  return res;
}

std::string replay_trace(const EmbeddedGraph& input, const ReductionTrace& trace,
                         const std::function<void(const EmbeddedGraph&)>& on_graph) {
  std::map<std::uint64_t, EmbeddedGraph> seen{{input.hash(), input}};
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& st = trace.steps[i];
    auto it = seen.find(st.hash_before);
    if (it == seen.end()) return "step " + std::to_string(i) + ": unknown source graph";
    std::vector<EmbeddedGraph> out;
    try {
      out = apply_surgery(it->second, st.surgery);
    } catch (const Error& e) {
      return "step " + std::to_string(i) + ": " + e.what();
    }
    if (out.size() != st.hashes_after.size()) return "step " + std::to_string(i) + ": result count differs";
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (out[j].hash() != st.hashes_after[j]) return "step " + std::to_string(i) + ": hash mismatch";
      if (on_graph) on_graph(out[j]);
      seen.emplace(out[j].hash(), out[j]);
    }
  }
  return {};
}

}  // namespace twoouter
