#include "twoouter/gen.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "dsu.hpp"
#include "twoouter/plane.hpp"

namespace twoouter::gen {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next_u64() { return engine_(); }

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::size_t Rng::below(std::size_t n) {
  auto r = static_cast<std::size_t>(uniform() * static_cast<double>(n));
  return std::min(r, n - 1);
}

namespace {

constexpr double kPi = 3.14159265358979323846;

EmbeddedGraph from_local_angles(const std::map<VertexId, std::vector<std::pair<double, VertexId>>>& local,
                                std::vector<Dart> outer) {
  RotationMap rot;
  for (const auto& [v, list] : local) {
    auto sorted = list;
    // clockwise = decreasing angle
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    auto& r = rot[v];
    for (const auto& [_, w] : sorted) r.push_back(w);
  }
  return EmbeddedGraph::from_rotations(std::move(rot), std::move(outer));
}

}  // namespace

EmbeddedGraph from_coordinates(const std::map<VertexId, Point>& pos,
                               const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::map<VertexId, std::vector<std::pair<double, VertexId>>> local;
  for (const auto& [v, _] : pos) local[v];
  auto angle = [&](VertexId a, VertexId b) {
    const Point& p = pos.at(a);
    const Point& q = pos.at(b);
    return std::atan2(q.second - p.second, q.first - p.first);
  };
  for (auto [u, v] : edges) {
    local[u].emplace_back(angle(u, v), v);
    local[v].emplace_back(angle(v, u), u);
  }
  std::vector<VertexId> ids;
  for (const auto& [v, _] : pos) ids.push_back(v);
  Dsu dsu(ids.size());
  auto idx = [&](VertexId v) { return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()); };
  for (auto [u, v] : edges) dsu.unite(idx(u), idx(v));
  std::map<int, VertexId> top;
  for (VertexId v : ids) {
    int c = dsu.find(idx(v));
    auto it = top.find(c);
    if (it == top.end()) {
      top[c] = v;
      continue;
    }
    const Point& p = pos.at(v);
    const Point& q = pos.at(it->second);
    if (p.second > q.second || (p.second == q.second && p.first < q.first)) it->second = v;
  }
  std::vector<Dart> outer;
  for (const auto& [_, v] : top) {
    const auto& list = local[v];
    if (list.empty()) continue;
    auto best = std::max_element(list.begin(), list.end());
    outer.push_back(Dart{v, best->second});
  }
  return from_local_angles(local, std::move(outer));
}

namespace {

const std::vector<Point>& octahedron_points() {
  static const std::vector<Point> pts{{0.0, 10.0}, {8.66, -5.0}, {-8.66, -5.0},
                                      {-2.6, 1.5}, {2.6, 1.5},   {0.0, -3.0}};
  return pts;
}

const std::vector<std::pair<VertexId, VertexId>>& octahedron_edges() {
  static const std::vector<std::pair<VertexId, VertexId>> e{
      {0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 3}};
  return e;
}

}  // namespace

EmbeddedGraph octahedron() { return linked_octahedra(1); }

EmbeddedGraph linked_octahedra(int m) {
  if (m < 1) fail(ErrorKind::InfeasibleSpec, "linked_octahedra needs m >= 1");
  std::map<VertexId, Point> pos;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < m; ++i) {
    auto base = static_cast<VertexId>(6 * i);
    for (VertexId j = 0; j < 6; ++j) {
      const Point& p = octahedron_points()[j];
      pos[base + j] = {p.first + 25.0 * i, p.second};
    }
    for (auto [u, v] : octahedron_edges()) edges.emplace_back(base + u, base + v);
    if (i + 1 < m) edges.emplace_back(base + 1, base + 6 + 2);
  }
  return from_coordinates(pos, edges);
}

EmbeddedGraph k4() {
  std::map<VertexId, Point> pos{{0, {0.0, 10.0}}, {1, {8.66, -5.0}}, {2, {-8.66, -5.0}}, {3, {0.0, 0.0}}};
  return from_coordinates(pos, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
}

EmbeddedGraph hexagon_fixture() {
  std::map<VertexId, Point> pos;
  for (int i = 0; i < 6; ++i) {
    double a = (90.0 - 60.0 * i) * kPi / 180.0;
    pos[static_cast<VertexId>(i)] = {10.0 * std::cos(a), 10.0 * std::sin(a)};
  }
  pos[6] = {-1.0, 3.0};
  pos[7] = {2.0, -2.0};
  pos[8] = {-3.0, -3.0};
  std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0},
                                                   {6, 7}, {7, 8}, {8, 6}, {0, 6}, {1, 6}, {1, 7},
                                                   {2, 7}, {3, 7}, {4, 7}, {4, 8}, {4, 6}, {5, 6}};
  return from_coordinates(pos, edges);
}

EmbeddedGraph nested_octahedra() {
  std::map<VertexId, Point> pos;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId j = 0; j < 6; ++j) {
    const Point& p = octahedron_points()[j];
    pos[j] = p;
    pos[6 + j] = {0.12 * p.first, 0.12 * p.second};
  }
  for (auto [u, v] : octahedron_edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(6 + u, 6 + v);
  }
  edges.insert(edges.end(), {{3, 6}, {4, 7}, {5, 8}});
  return from_coordinates(pos, edges);
}

EmbeddedGraph random_tree(int n, std::uint64_t seed) {
  if (n < 1) fail(ErrorKind::InfeasibleSpec, "tree needs n >= 1");
  Rng rng(seed);
  RotationMap rot;
  rot[0];
  for (int i = 1; i < n; ++i) {
    auto p = static_cast<VertexId>(rng.below(static_cast<std::size_t>(i)));
    auto v = static_cast<VertexId>(i);
    auto& rp = rot[p];
    rp.insert(rp.begin() + static_cast<std::ptrdiff_t>(rng.below(rp.size() + 1)), v);
    rot[v].push_back(p);
  }
  std::vector<Dart> outer;
  if (n > 1) outer.push_back(Dart{0, rot[0].front()});
  return EmbeddedGraph::from_rotations(std::move(rot), std::move(outer));
}

namespace {

struct Ring {
  std::vector<VertexId> ids;
  std::vector<double> angle;  // degrees, ascending
};

double wrap180(double d) {
  while (d > 180.0) d -= 360.0;
  while (d <= -180.0) d += 360.0;
  return d;
}

void random_polygon_chords(Rng& rng, const std::vector<std::size_t>& poly,
                           std::vector<std::pair<std::size_t, std::size_t>>& out) {
  const std::size_t s = poly.size();
  if (s <= 3) return;
  std::size_t i = rng.below(s);
  std::size_t j = (i + 2 + rng.below(s - 3)) % s;
  if (i > j) std::swap(i, j);
  out.emplace_back(poly[i], poly[j]);
  std::vector<std::size_t> a(poly.begin() + static_cast<std::ptrdiff_t>(i), poly.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  std::vector<std::size_t> b(poly.begin() + static_cast<std::ptrdiff_t>(j), poly.end());
  b.insert(b.end(), poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  random_polygon_chords(rng, a, out);
  random_polygon_chords(rng, b, out);
}

}  // namespace

EmbeddedGraph random_k_outerplanar(int n, int k, std::uint64_t seed, double max_drop) {
  if (n < 1 || k < 1) fail(ErrorKind::InfeasibleSpec, "need n >= 1 and k >= 1");
  if (n < 3 * (k - 1) + 1) fail(ErrorKind::InfeasibleSpec, "too few vertices for " + std::to_string(k) + " layers");
  Rng rng(seed);

  std::vector<int> sizes;
  if (k == 1) {
    sizes.push_back(n);
  } else {
    sizes.assign(static_cast<std::size_t>(k - 1), 3);
    sizes.push_back(1);
    for (int extra = n - 3 * (k - 1) - 1; extra > 0; --extra) ++sizes[rng.below(sizes.size())];
    if (sizes.back() == 2) {
      --sizes.back();
      ++sizes[rng.below(sizes.size() - 1)];
    }
  }
  if (n <= 2) {
    RotationMap rot;
    rot[0];
    std::vector<Dart> outer;
    if (n == 2) {
      rot[0] = {1};
      rot[1] = {0};
      outer.push_back({0, 1});
    }
    return EmbeddedGraph::from_rotations(std::move(rot), std::move(outer));
  }

  std::vector<Ring> rings;
  VertexId next_id = 0;
  for (int s : sizes) {
    Ring r;
    for (int j = 0; j < s; ++j) {
      r.ids.push_back(next_id++);
      r.angle.push_back(s == 1 ? 0.0 : (j + rng.uniform(0.3, 0.7)) * 360.0 / s);
    }
    rings.push_back(std::move(r));
  }

  std::set<std::pair<VertexId, VertexId>> edges;
  auto add = [&](VertexId a, VertexId b) { edges.emplace(std::min(a, b), std::max(a, b)); };
  std::map<VertexId, double> theta;
  std::map<VertexId, std::size_t> ring_of;
  for (std::size_t r = 0; r < rings.size(); ++r)
    for (std::size_t j = 0; j < rings[r].ids.size(); ++j) {
      theta[rings[r].ids[j]] = rings[r].angle[j];
      ring_of[rings[r].ids[j]] = r;
    }

  for (const Ring& r : rings) {
    const std::size_t s = r.ids.size();
    if (s >= 3)
      for (std::size_t j = 0; j < s; ++j) add(r.ids[j], r.ids[(j + 1) % s]);
  }
  for (std::size_t r = 0; r + 1 < rings.size(); ++r) {
    const Ring& A = rings[r];
    const Ring& B = rings[r + 1];
    if (B.ids.size() == 1) {
      for (VertexId a : A.ids) add(a, B.ids[0]);
      continue;
    }
    struct Item {
      double angle;
      int side;
      std::size_t idx;
    };
    std::vector<Item> items;
    for (std::size_t j = 0; j < A.ids.size(); ++j) items.push_back({A.angle[j], 0, j});
    for (std::size_t j = 0; j < B.ids.size(); ++j) items.push_back({B.angle[j], 1, j});
    std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
      return x.angle != y.angle ? x.angle < y.angle : x.side < y.side;
    });
    std::size_t co = A.ids.size() - 1, ci = B.ids.size() - 1;
    add(A.ids[co], B.ids[ci]);
    for (const Item& it : items) {
      (it.side == 0 ? co : ci) = it.idx;
      add(A.ids[co], B.ids[ci]);
    }
  }
  std::set<std::pair<VertexId, VertexId>> chords;
  {
    const Ring& inner = rings.back();
    std::vector<std::size_t> poly(inner.ids.size());
    for (std::size_t j = 0; j < poly.size(); ++j) poly[j] = j;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (poly.size() >= 4) random_polygon_chords(rng, poly, out);
    for (auto [i, j] : out) {
      add(inner.ids[i], inner.ids[j]);
      chords.emplace(std::min(inner.ids[i], inner.ids[j]), std::max(inner.ids[i], inner.ids[j]));
    }
  }

  // local angles
  std::map<VertexId, std::vector<std::pair<double, VertexId>>> local;
  for (VertexId v = 0; v < next_id; ++v) local[v];
  auto local_angle = [&](VertexId v, VertexId w) -> double {
    const std::size_t rv = ring_of[v], rw = ring_of[w];
    const Ring& R = rings[rv];
    if (R.ids.size() == 1) return theta[w];  // centre: true angles
    if (rings[rw].ids.size() == 1 && rw == rv + 1) return 180.0;
    if (rw == rv) {
      const std::size_t s = R.ids.size();
      std::size_t jv = static_cast<std::size_t>(v - R.ids[0]), jw = static_cast<std::size_t>(w - R.ids[0]);
      if (jw == (jv + 1) % s) return 90.0;
      if (jv == (jw + 1) % s) return 270.0;
      double d = theta[w] - theta[v];
      if (d <= 0) d += 360.0;
      return 90.0 + d / 2.0;
    }
    double d = wrap180(theta[w] - theta[v]);
    return rw < rv ? d / 2.0 : 180.0 - d / 2.0;
  };
  for (auto [a, b] : edges) {
    local[a].emplace_back(local_angle(a, b), b);
    local[b].emplace_back(local_angle(b, a), a);
  }
  // ring 0 runs ccw, so the face left of a backwards step is the outside
  EmbeddedGraph g = from_local_angles(local, {Dart{rings[0].ids[1], rings[0].ids[0]}});

  // random edge deletion, keeping connectivity and depth
  std::vector<std::pair<VertexId, VertexId>> order(edges.begin(), edges.end());
  rng.shuffle(order);
  const auto target = static_cast<std::size_t>(rng.uniform(0.0, max_drop) * static_cast<double>(order.size()));
  std::size_t removed = 0;
  for (auto e : order) {
    if (removed >= target) break;
    EmbeddedGraph h = remove_edges(g, {e});
    if (h.num_components() != 1 || outerplanarity_index(h) != k) continue;
    g = std::move(h);
    ++removed;
  }
  return g;
}

GenSpec parse_spec(const std::string& text) {
  GenSpec s;
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto bad = [&](const std::string& why) { fail(ErrorKind::ParseError, "gen spec '" + text + "': " + why); };
  auto number = [&](const std::string& v) -> std::uint64_t {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) bad("expected a number, got '" + v + "'");
    try {
      return std::stoull(v);
    } catch (const std::exception&) {
      bad("number out of range");
    }
    return 0;
  };
  std::map<std::string, std::uint64_t> kv;
  auto parse_kv = [&](std::initializer_list<std::string> allowed) {
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) bad("expected key=value");
      std::string key = item.substr(0, eq);
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) bad("unknown key '" + key + "'");
      kv[key] = number(item.substr(eq + 1));
    }
    for (const auto& key : allowed)
      if (!kv.count(key)) bad("missing key '" + key + "'");
  };
  auto small = [&](std::uint64_t v) {
    if (v > 100000) bad("value too large");
    return static_cast<int>(v);
  };
  if (head == "octahedron" && rest.empty()) {
    s.kind = GenSpec::Kind::Octahedron;
  } else if (head == "k4" && rest.empty()) {
    s.kind = GenSpec::Kind::K4;
  } else if (head == "hexagon" && rest.empty()) {
    s.kind = GenSpec::Kind::Hexagon;
  } else if (head == "nested_octahedra" && rest.empty()) {
    s.kind = GenSpec::Kind::NestedOctahedra;
  } else if (head == "linked_octahedra") {
    s.kind = GenSpec::Kind::LinkedOctahedra;
    s.m = small(number(rest));
  } else if (head == "random") {
    s.kind = GenSpec::Kind::RandomKOuterplanar;
    parse_kv({"n", "k", "seed"});
    s.n = small(kv["n"]);
    s.k = small(kv["k"]);
    s.seed = kv["seed"];
  } else if (head == "tree") {
    s.kind = GenSpec::Kind::Tree;
    parse_kv({"n", "seed"});
    s.n = small(kv["n"]);
    s.seed = kv["seed"];
  } else {
    bad("unknown generator");
  }
  return s;
}

std::string to_string(const GenSpec& s) {
  switch (s.kind) {
    case GenSpec::Kind::Octahedron: return "octahedron";
    case GenSpec::Kind::K4: return "k4";
    case GenSpec::Kind::Hexagon: return "hexagon";
    case GenSpec::Kind::NestedOctahedra: return "nested_octahedra";
    case GenSpec::Kind::LinkedOctahedra: return "linked_octahedra:" + std::to_string(s.m);
    case GenSpec::Kind::RandomKOuterplanar:
      return "random:n=" + std::to_string(s.n) + ",k=" + std::to_string(s.k) + ",seed=" + std::to_string(s.seed);
    case GenSpec::Kind::Tree: return "tree:n=" + std::to_string(s.n) + ",seed=" + std::to_string(s.seed);
  }
  return "";
}

EmbeddedGraph generate(const GenSpec& s) {
  switch (s.kind) {
    case GenSpec::Kind::Octahedron: return octahedron();
    case GenSpec::Kind::K4: return k4();
    case GenSpec::Kind::Hexagon: return hexagon_fixture();
    case GenSpec::Kind::NestedOctahedra: return nested_octahedra();
    case GenSpec::Kind::LinkedOctahedra: return linked_octahedra(s.m);
    case GenSpec::Kind::RandomKOuterplanar: return random_k_outerplanar(s.n, s.k, s.seed);
    case GenSpec::Kind::Tree: return random_tree(s.n, s.seed);
  }
  fail(ErrorKind::InfeasibleSpec, "unknown generator");
}

}  // namespace twoouter::gen
