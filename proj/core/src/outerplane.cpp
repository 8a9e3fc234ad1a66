#include "twoouter/outerplane.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "twoouter/augment.hpp"

namespace twoouter {

std::vector<VertexId> Triple::members() const {
  std::vector<VertexId> out = l2;
  out.insert(out.end(), l1.begin(), l1.end());
  return out;
}

int between_degree(const EmbeddedGraph& g, const LayerAssignment& la, VertexId v) {
  int own = la.of(v), cnt = 0;
  for (VertexId w : g.rotation(v)) cnt += la.of(w) != own;
  return cnt;
}

namespace {

Edge norm(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

std::set<Edge> outer_edges(const EmbeddedGraph& h) {
  std::set<Edge> out;
  for (int d = 0; d < h.num_darts(); ++d)
    if (h.is_outer_face(h.face_of(d))) out.insert(norm(h.id_at(h.tail(d)), h.id_at(h.head(d))));
  return out;
}

void check_cactus(const VertexSet& verts, const std::set<Edge>& edges) {
  // every block of a cactus is a bridge or a cycle: |E(block)| <= |V(block)|
  RotationMap rot;
  for (VertexId v : verts) rot[v];
  for (auto [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  // embedding does not matter for blocks; fake one per component via any rotation
  // would need planarity, so run a plain edge-biconnected count instead.
  std::map<VertexId, std::vector<VertexId>> adj;
  for (auto& [v, r] : rot) adj[v] = r;
  std::map<VertexId, int> disc, low;
  int timer = 0;
  std::vector<Edge> stack;
  bool ok = true;
  std::function<void(VertexId, VertexId)> dfs = [&](VertexId v, VertexId parent) {
    disc[v] = low[v] = ++timer;
    for (VertexId w : adj[v]) {
      if (w == parent) continue;
      if (!disc.count(w)) {
        stack.push_back(norm(v, w));
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::set<VertexId> bv;
          std::size_t be = 0;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            ++be;
            bv.insert(e.first);
            bv.insert(e.second);
            if (e == norm(v, w)) break;
          }
          if (be > 1 && be != bv.size()) ok = false;
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(norm(v, w));
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (VertexId v : verts)
    if (!disc.count(v)) dfs(v, v);
  if (!ok) fail(ErrorKind::InternalInvariantViolation, "boundary of G[L2] is not a cactus");
}

}  // namespace

std::vector<Edge> boundary_of_layer2(const EmbeddedGraph& g, const LayerAssignment& la) {
  if (la.depth > 2) fail(ErrorKind::LayerTooDeep, "boundary_of_layer2 needs depth <= 2");
  if (la.depth < 2) return {};
  EmbeddedGraph h = induced_subgraph(g, la.layer(2));
  auto edges = outer_edges(h);
  check_cactus(la.layer(2), edges);
  return {edges.begin(), edges.end()};
}

namespace {

struct MatchState {
  EmbeddedGraph h;                               // current (contracted) G[L2]
  std::map<VertexId, std::set<VertexId>> l1;     // between neighbours
};

Matching match_rec(const MatchState& s) {
  const auto bd = outer_edges(s.h);
  std::map<VertexId, std::vector<VertexId>> bnbr;
  for (auto [a, b] : bd) {
    bnbr[a].push_back(b);
    bnbr[b].push_back(a);
  }
  auto in_L = [&](VertexId x) { return s.l1.at(x).size() == 1; };
  bool any = false;
  for (VertexId x : s.h.vertices()) any = any || in_L(x);
  if (!any) return {};

  for (VertexId v : s.h.vertices()) {
    if (!in_L(v)) continue;
    auto& nb = bnbr[v];
    std::sort(nb.begin(), nb.end());
    if (nb.size() != 2) continue;
    std::optional<VertexId> u;
    for (VertexId x : nb)
      if (!in_L(x)) {
        u = x;
        break;
      }
    if (!u) continue;
    const VertexId w = nb[0] == *u ? nb[1] : nb[0];

    MatchState next;
    next.h = contract_star(s.h, v, to_set({*u, w}), v);
    next.l1 = s.l1;
    next.l1.erase(*u);
    next.l1.erase(w);
    for (VertexId x : s.l1.at(*u)) next.l1[v].insert(x);
    for (VertexId x : s.l1.at(w)) next.l1[v].insert(x);
    Matching sub = match_rec(next);

    Matching m;
    bool covered = false;
    auto on_b = [&](VertexId p, VertexId q) { return bd.count(norm(p, q)) > 0; };
    for (auto [p, q] : sub.edges) {
      if (p != v && q != v) {
        m.edges.emplace_back(p, q);
        continue;
      }
      covered = true;
      const VertexId x = p == v ? q : p;
      if (on_b(*u, x)) {
        m.edges.emplace_back(*u, x);
        m.edges.emplace_back(v, w);
      } else if (on_b(w, x)) {
        m.edges.emplace_back(w, x);
        m.edges.emplace_back(*u, v);
      } else {
        fail(ErrorKind::InternalInvariantViolation, "matching lift: partner is not on the boundary");
      }
    }
    if (!covered) m.edges.emplace_back(v, w);
    return m;
  }
  fail(ErrorKind::PreconditionViolated, "no between-degree-1 vertex with a usable boundary neighbour");
}

// Direct construction: the between-degree-1 vertices split into maximal
// boundary chains; even chains match internally, odd ones borrow an end vertex.
Matching match_by_chains(const EmbeddedGraph& h, const std::map<VertexId, std::set<VertexId>>& l1) {
  const auto bd = outer_edges(h);
  std::map<VertexId, std::vector<VertexId>> bnbr;
  for (auto [a, b] : bd) {
    bnbr[a].push_back(b);
    bnbr[b].push_back(a);
  }
  auto in_L = [&](VertexId x) { return l1.at(x).size() == 1; };
  struct Chain {
    std::vector<VertexId> body;
    VertexId end0 = 0, end1 = 0;
  };
  std::vector<Chain> odd;
  std::set<VertexId> seen;
  Matching m;
  auto pair_up = [&](const std::vector<VertexId>& body, std::size_t from) {
    for (std::size_t i = from; i + 1 < body.size(); i += 2) m.edges.emplace_back(body[i], body[i + 1]);
  };
  for (VertexId v : h.vertices()) {
    if (!in_L(v) || seen.count(v)) continue;
    for (VertexId x : h.vertices())
      if (in_L(x) && bnbr[x].size() != 2)
        fail(ErrorKind::PreconditionViolated, "between-degree-1 vertex without two boundary edges");
    // walk one way to the chain start
    VertexId prev = bnbr[v][1], cur = v;
    bool cycle = false;
    while (true) {
      const auto& nb = bnbr[cur];
      VertexId nx = nb[0] == prev ? nb[1] : nb[0];
      if (!in_L(nx)) break;
      prev = cur;
      cur = nx;
      if (cur == v) {
        cycle = true;
        break;
      }
    }
    Chain c;
    const VertexId start = cur;
    {
      const auto& nb = bnbr[start];
      c.end0 = nb[0] == prev ? nb[1] : nb[0];
      if (cycle) c.end0 = prev;
    }
    prev = c.end0;
    cur = start;
    while (true) {
      c.body.push_back(cur);
      seen.insert(cur);
      const auto& nb = bnbr[cur];
      VertexId nx = nb[0] == prev ? nb[1] : nb[0];
      if (cycle ? nx == start : !in_L(nx)) {
        c.end1 = nx;
        break;
      }
      prev = cur;
      cur = nx;
    }
    if (c.body.size() % 2 == 0) {
      pair_up(c.body, 0);
    } else if (cycle) {
      fail(ErrorKind::PreconditionViolated, "odd boundary cycle of between-degree-1 vertices");
    } else {
      odd.push_back(std::move(c));
    }
  }
  // odd chains against free end vertices (Kuhn)
  std::map<VertexId, int> owner;
  std::function<bool(int, std::set<VertexId>&)> grab = [&](int i, std::set<VertexId>& tried) {
    for (VertexId e : {odd[static_cast<std::size_t>(i)].end0, odd[static_cast<std::size_t>(i)].end1}) {
      if (!tried.insert(e).second) continue;
      auto it = owner.find(e);
      if (it == owner.end() || grab(it->second, tried)) {
        owner[e] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < static_cast<int>(odd.size()); ++i) {
    std::set<VertexId> tried;
    if (!grab(i, tried)) fail(ErrorKind::PreconditionViolated, "odd chains outnumber their end vertices");
  }
  for (auto [e, i] : owner) {
    const Chain& c = odd[static_cast<std::size_t>(i)];
    if (e == c.end0) {
      m.edges.emplace_back(e, c.body.front());
      pair_up(c.body, 1);
    } else {
      pair_up(c.body, 0);
      m.edges.emplace_back(c.body.back(), e);
    }
  }
  return m;
}

}  // namespace

Matching build_matching(const EmbeddedGraph& g, const LayerAssignment& la) {
  if (la.depth > 2) fail(ErrorKind::LayerTooDeep, "build_matching needs depth <= 2");
  if (la.depth < 2) return {};
  MatchState s;
  s.h = induced_subgraph(g, la.layer(2));
  for (VertexId v : la.layer(2)) {
    auto& set = s.l1[v];
    for (VertexId w : g.rotation(v))
      if (la.of(w) == 1) set.insert(w);
    if (set.empty()) fail(ErrorKind::PreconditionViolated, "L2 vertex without an L1 neighbour");
  }
  Matching m;
  try {
    m = match_rec(s);
  } catch (const Error& e) {
    // contraction can leave a between-degree-1 vertex hanging off one boundary edge
    if (e.kind() != ErrorKind::PreconditionViolated) throw;
    m = match_by_chains(s.h, s.l1);
  }
  if (!matching_has_property(g, la, m)) fail(ErrorKind::PreconditionViolated, "matching lost its property");
  return m;
}

bool matching_has_property(const EmbeddedGraph& g, const LayerAssignment& la, const Matching& m) {
  if (la.depth < 2) return m.edges.empty();
  auto bd = boundary_of_layer2(g, la);
  std::set<Edge> bset(bd.begin(), bd.end());
  std::set<VertexId> covered;
  for (auto [a, b] : m.edges) {
    if (!bset.count(norm(a, b))) return false;
    if (!covered.insert(a).second || !covered.insert(b).second) return false;
  }
  for (VertexId v : la.layer(2))
    if (!covered.count(v) && between_degree(g, la, v) < 2) return false;
  return true;
}

TripleList build_triples(const EmbeddedGraph& g, const LayerAssignment& la, const Matching& m) {
  TripleList out;
  std::set<VertexId> covered;
  for (auto [x, y] : m.edges) {
    covered.insert(x);
    covered.insert(y);
    int d = g.dart_between(g.index_of(x), g.index_of(y));
    if (d < 0) fail(ErrorKind::NoFaceWitness, "matched pair is not an edge");
    std::optional<VertexId> z;
    for (int e : {d, g.twin(d)}) {
      int f = g.face_of(e);
      if (g.is_outer_face(f) || g.face_size(f) != 3) continue;
      VertexId apex = g.id_at(g.head(g.next(e)));
      if (la.of(apex) == 1 && (!z || apex < *z)) z = apex;
    }
    if (!z) fail(ErrorKind::NoFaceWitness, "no L1 face next to " + std::to_string(x) + "-" + std::to_string(y));
    out.triples.push_back(Triple{true, {x, y}, {*z}});
  }
  if (la.depth < 2) return out;
  for (VertexId u : la.layer(2)) {
    if (covered.count(u)) continue;
    std::vector<VertexId> l1;
    for (VertexId w : g.rotation(u))
      if (la.of(w) == 1) l1.push_back(w);
    std::sort(l1.begin(), l1.end());
    if (l1.size() < 2) fail(ErrorKind::NoFaceWitness, "uncovered vertex " + std::to_string(u) + " has < 2 L1 neighbours");
    out.triples.push_back(Triple{false, {u}, {l1[0], l1[1]}});
  }
  return out;
}

ExtractionResult deletion_pass(const EmbeddedGraph& g, const LayerAssignment& la, const TripleList& list) {
  ExtractionResult res;
  const auto& T = list.triples;
  std::vector<bool> alive(T.size(), true);
  std::set<VertexId> gone;
  auto remove = [&](VertexId v, int phase) {
    gone.insert(v);
    res.deleted.emplace_back(v, phase);
    for (std::size_t i = 0; i < T.size(); ++i)
      if (alive[i] && std::count(T[i].l1.begin(), T[i].l1.end(), v)) alive[i] = false;
  };
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < T.size(); ++i)
      if (alive[i] && T[i].l1.size() == 1) {
        remove(T[i].l1[0], 1);
        again = true;
        break;
      }
  }
  for (bool again = true; again;) {
    again = false;
    std::map<VertexId, int> count;
    for (std::size_t i = 0; i < T.size(); ++i)
      if (alive[i])
        for (VertexId v : T[i].l1) ++count[v];
    for (auto [v, c] : count)
      if (c >= 2) {
        remove(v, 2);
        again = true;
        break;
      }
  }
  for (std::size_t i = 0; i < T.size(); ++i)
    if (alive[i]) remove(*std::min_element(T[i].l1.begin(), T[i].l1.end()), 3);
  for (VertexId v : g.vertices())
    if (!gone.count(v)) res.kept.push_back(v);
  (void)la;
  return res;
}

ExtractionResult extract_outerplane(const EmbeddedGraph& g) {
  if (outerplanarity_index(g) > 2) fail(ErrorKind::NotTwoOuterplanar, "outerplanarity index exceeds 2");
  ExtractionResult res;
  std::set<VertexId> gone;
  for (const VertexSet& comp : connected_components(g)) {
    EmbeddedGraph h = comp.size() == g.num_vertices() ? g : induced_subgraph(g, comp);
    if (outerplanarity_index(h) < 2) continue;
    EmbeddedGraph t = triangulate_disk(h).result;
    LayerAssignment la = layers(t);
    Matching m = build_matching(t, la);
    TripleList tl = build_triples(t, la, m);
    ExtractionResult part = deletion_pass(t, la, tl);
    for (auto [v, phase] : part.deleted) gone.insert(v);
    res.deleted.insert(res.deleted.end(), part.deleted.begin(), part.deleted.end());
    res.matching.edges.insert(res.matching.edges.end(), m.edges.begin(), m.edges.end());
    res.triples.triples.insert(res.triples.triples.end(), tl.triples.begin(), tl.triples.end());
  }
  for (VertexId v : g.vertices())
    if (!gone.count(v)) res.kept.push_back(v);
  if (!is_outerplane_set(g, res.kept))
    fail(ErrorKind::InternalInvariantViolation, "extracted set is not outerplane");
  return res;
}

VertexSet extract_k_pairwise(const EmbeddedGraph& g) {
  LayerAssignment la = layers(g);
  VertexSet kept;
  for (int i = 1; i <= la.depth; i += 2) {
    VertexSet s = la.layer(i);
    if (i + 1 <= la.depth) {
      const auto& next = la.layer(i + 1);
      s.insert(s.end(), next.begin(), next.end());
      s = to_set(std::move(s));
      ExtractionResult r = extract_outerplane(induced_subgraph(g, s));
      kept.insert(kept.end(), r.kept.begin(), r.kept.end());
    } else {
      kept.insert(kept.end(), s.begin(), s.end());
    }
  }
  return to_set(std::move(kept));
}

}  // namespace twoouter
