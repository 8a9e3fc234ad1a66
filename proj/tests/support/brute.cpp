#include "brute.hpp"

#include <algorithm>
#include <functional>

namespace brute {

Plain from(const twoouter::EmbeddedGraph& g) {
  Plain p;
  p.rot = g.rotations();
  for (const auto& d : g.outer_darts()) p.outer.emplace_back(d.tail, d.head);
  return p;
}

bool acyclic(const Plain& g, const std::set<VertexId>& s) {
  std::set<VertexId> seen;
  std::function<bool(VertexId, VertexId, bool)> dfs = [&](VertexId v, VertexId parent, bool root) {
    seen.insert(v);
    for (VertexId w : g.rot.at(v)) {
      if (!s.count(w) || (!root && w == parent)) continue;
      if (seen.count(w)) return false;
      if (!dfs(w, v, false)) return false;
    }
    return true;
  };
  for (VertexId v : s)
    if (!seen.count(v) && !dfs(v, v, true)) return false;
  return true;
}

namespace {

using D = std::pair<VertexId, VertexId>;

// face to the left of u->v continues with v->(successor of u in rot(v))
D next(const Plain& g, D d) {
  const auto& r = g.rot.at(d.second);
  auto it = std::find(r.begin(), r.end(), d.first);
  ++it;
  if (it == r.end()) it = r.begin();
  return {d.second, *it};
}

}  // namespace

std::set<VertexId> outer_of(const Plain& g, const std::set<VertexId>& s) {
  // faces of G as dart -> face id
  std::map<D, int> face;
  std::vector<std::vector<D>> walks;
  for (auto& [u, r] : g.rot)
    for (VertexId v : r) {
      if (face.count({u, v})) continue;
      int id = static_cast<int>(walks.size());
      walks.emplace_back();
      D d{u, v};
      do {
        face[d] = id;
        walks.back().push_back(d);
        d = next(g, d);
      } while (d != D{u, v});
    }
  // flood from the outer faces across edges missing from G[s]
  std::vector<char> inf(walks.size(), 0);
  std::vector<int> queue;
  for (auto& d : g.outer) {
    int f = face.at(d);
    if (!inf[static_cast<std::size_t>(f)]) {
      inf[static_cast<std::size_t>(f)] = 1;
      queue.push_back(f);
    }
  }
  while (!queue.empty()) {
    int f = queue.back();
    queue.pop_back();
    for (const D& d : walks[static_cast<std::size_t>(f)]) {
      if (s.count(d.first) && s.count(d.second)) continue;
      int h = face.at({d.second, d.first});
      if (!inf[static_cast<std::size_t>(h)]) {
        inf[static_cast<std::size_t>(h)] = 1;
        queue.push_back(h);
      }
    }
  }
  std::set<VertexId> out;
  for (VertexId v : s) {
    const auto& r = g.rot.at(v);
    if (r.empty()) {
      out.insert(v);
      continue;
    }
    for (VertexId w : r)
      if (inf[static_cast<std::size_t>(face.at({v, w}))]) {
        out.insert(v);
        break;
      }
  }
  return out;
}

bool outerplane(const Plain& g, const std::set<VertexId>& s) { return outer_of(g, s).size() == s.size(); }

std::vector<std::set<VertexId>> layers(const Plain& g) {
  std::set<VertexId> rest;
  for (auto& [v, _] : g.rot) rest.insert(v);
  std::vector<std::set<VertexId>> out;
  while (!rest.empty()) {
    auto l = outer_of(g, rest);
    if (l.empty()) break;
    for (VertexId v : l) rest.erase(v);
    out.push_back(l);
  }
  return out;
}

namespace {

template <class F>
int best_subset(const Plain& g, F ok) {
  std::vector<VertexId> ids;
  for (auto& [v, _] : g.rot) ids.push_back(v);
  const std::size_t n = ids.size();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int c = __builtin_popcount(mask);
    if (c <= best) continue;
    std::set<VertexId> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.insert(ids[i]);
    if (ok(s)) best = c;
  }
  return best;
}

}  // namespace

int max_forest(const Plain& g) {
  return best_subset(g, [&](const std::set<VertexId>& s) { return acyclic(g, s); });
}

int max_outerplane(const Plain& g) {
  return best_subset(g, [&](const std::set<VertexId>& s) { return outerplane(g, s); });
}

int arboricity(const Plain& g) {
  std::vector<VertexId> ids;
  for (auto& [v, _] : g.rot) ids.push_back(v);
  if (ids.empty()) return 0;
  const std::size_t n = ids.size();
  for (int t = 1; t <= 3; ++t) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(t);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<std::set<VertexId>> cls(static_cast<std::size_t>(t));
      std::uint64_t c = code;
      for (std::size_t i = 0; i < n; ++i) {
        cls[c % static_cast<std::uint64_t>(t)].insert(ids[i]);
        c /= static_cast<std::uint64_t>(t);
      }
      bool ok = true;
      for (auto& s : cls) ok = ok && acyclic(g, s);
      if (ok) return t;
    }
  }
  return 4;  // planar inputs never get here
}

}  // namespace brute
