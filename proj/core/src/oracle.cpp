#include "twoouter/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <regex>

#include "twoouter/gen.hpp"
#include "twoouter/plane.hpp"

namespace twoouter {

namespace {

int env_cap(const char* name, int fallback) {
  const char* s = std::getenv(name);
  if (!s || !*s) return fallback;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end || v <= 0) return fallback;
  return static_cast<int>(v);
}

void check_cap(const EmbeddedGraph& g, int cap, const char* what) {
  if (static_cast<int>(g.num_vertices()) > cap)
    fail(ErrorKind::TooLarge, std::string(what) + ": n=" + std::to_string(g.num_vertices()) + " exceeds cap " +
                                  std::to_string(cap));
}

// union-find with undo, for incremental acyclicity
class UndoDsu {
 public:
  explicit UndoDsu(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    log_.push_back(b);
  }
  std::size_t mark() const { return log_.size(); }
  void undo(std::size_t m) {
    while (log_.size() > m) {
      int b = log_.back();
      log_.pop_back();
      int a = parent_[static_cast<std::size_t>(b)];
      size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
      parent_[static_cast<std::size_t>(b)] = b;
    }
  }

 private:
  std::vector<int> parent_, size_, log_;
};

// Adds dense vertex v to the class whose members are flagged in `in`.
// Returns false (and leaves dsu untouched) if that closes a cycle.
bool try_add(const EmbeddedGraph& g, int v, const std::vector<char>& in, UndoDsu& dsu) {
  std::vector<int> roots;
  for (int w : g.nbrs(v))
    if (in[static_cast<std::size_t>(w)]) {
      int r = dsu.find(w);
      if (std::find(roots.begin(), roots.end(), r) != roots.end()) return false;
      roots.push_back(r);
    }
  for (int r : roots) dsu.unite(v, r);
  return true;
}

std::vector<int> by_degree(const EmbeddedGraph& g) {
  std::vector<int> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.deg(a) > g.deg(b); });
  return order;
}

}  // namespace

int default_forest_cap() { return env_cap("TWOOUTER_FOREST_CAP", 24); }
int default_arboricity_cap() { return env_cap("TWOOUTER_ARBORICITY_CAP", 24); }
int default_outerplane_cap() { return env_cap("TWOOUTER_OUTERPLANE_CAP", 16); }

OracleResult max_induced_forest_exact(const EmbeddedGraph& g, int cap) {
  check_cap(g, cap, "max_induced_forest_exact");
  const int n = static_cast<int>(g.num_vertices());
  const auto order = by_degree(g);
  OracleResult res;
  std::vector<char> in(static_cast<std::size_t>(n), 0), best;
  int best_size = -1, cur = 0;
  UndoDsu dsu(n);
  std::function<void(int)> go = [&](int i) {
    ++res.explored;
    if (cur + (n - i) <= best_size) return;
    if (i == n) {
      best_size = cur;
      best = in;
      return;
    }
    int v = order[static_cast<std::size_t>(i)];
    auto m = dsu.mark();
    if (try_add(g, v, in, dsu)) {
      in[static_cast<std::size_t>(v)] = 1;
      ++cur;
      go(i + 1);
      --cur;
      in[static_cast<std::size_t>(v)] = 0;
      dsu.undo(m);
    }
    go(i + 1);
  };
  go(0);
  res.optimum = best_size;
  for (int v = 0; v < n; ++v)
    if (best[static_cast<std::size_t>(v)]) res.witness.push_back(g.id_at(v));
  return res;
}

std::vector<VertexSet> arboricity_partition_exact(const EmbeddedGraph& g, int cap) {
  check_cap(g, cap, "vertex_arboricity_exact");
  const int n = static_cast<int>(g.num_vertices());
  if (n == 0) return {};
  const auto order = by_degree(g);
  for (int t = 1; t <= n; ++t) {
    std::vector<std::vector<char>> in(static_cast<std::size_t>(t), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<UndoDsu> dsu(static_cast<std::size_t>(t), UndoDsu(n));
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    std::function<bool(int, int)> go = [&](int i, int used) {
      if (i == n) return true;
      int v = order[static_cast<std::size_t>(i)];
      // classes are interchangeable: open at most one new class per step
      for (int c = 0; c < std::min(t, used + 1); ++c) {
        auto cu = static_cast<std::size_t>(c);
        auto m = dsu[cu].mark();
        if (!try_add(g, v, in[cu], dsu[cu])) continue;
        in[cu][static_cast<std::size_t>(v)] = 1;
        cls[static_cast<std::size_t>(v)] = c;
        if (go(i + 1, std::max(used, c + 1))) return true;
        in[cu][static_cast<std::size_t>(v)] = 0;
        dsu[cu].undo(m);
      }
      return false;
    };
    if (go(0, 0)) {
      std::vector<VertexSet> out(static_cast<std::size_t>(t));
      for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])].push_back(g.id_at(v));
      return out;
    }
  }
  fail(ErrorKind::InternalInvariantViolation, "no partition into singletons");
}

int vertex_arboricity_exact(const EmbeddedGraph& g, int cap) {
  return static_cast<int>(arboricity_partition_exact(g, cap).size());
}

OracleResult max_induced_outerplane_exact(const EmbeddedGraph& g, int cap) {
  check_cap(g, cap, "max_induced_outerplane_exact");
  const int n = static_cast<int>(g.num_vertices());
  OracleResult res;
  if (n == 0) return res;
  OuterplaneChecker checker(g);
  std::vector<bool> keep(static_cast<std::size_t>(n));
  for (int s = n; s >= 1; --s) {
    // subsets of size s in lexicographic order of their index lists
    std::vector<int> idx(static_cast<std::size_t>(s));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::fill(keep.begin(), keep.end(), false);
      for (int i : idx) keep[static_cast<std::size_t>(i)] = true;
      ++res.explored;
      if (checker.check(keep)) {
        res.optimum = s;
        for (int i : idx) res.witness.push_back(g.id_at(i));
        if (!is_outerplane_set(g, res.witness))
          fail(ErrorKind::InternalInvariantViolation, "outerplane witness failed re-check");
        return res;
      }
      int j = s - 1;
      while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - s + j) --j;
      if (j < 0) break;
      ++idx[static_cast<std::size_t>(j)];
      for (int l = j + 1; l < s; ++l) idx[static_cast<std::size_t>(l)] = idx[static_cast<std::size_t>(l - 1)] + 1;
    }
  }
  fail(ErrorKind::InternalInvariantViolation, "single vertices are always outerplane");
}

ScanFamily parse_family(const std::string& text) {
  ScanFamily f;
  if (text == "octahedron") return f;
  static const std::regex trees(R"(trees:count=(\d+),max_n=(\d+),seed=(\d+))");
  static const std::regex random(R"(random:count=(\d+),max_n=(\d+),k=(\d+),seed=(\d+))");
  std::smatch m;
  try {
    if (std::regex_match(text, m, trees)) {
      f.kind = ScanFamily::Kind::Trees;
      f.count = std::stoi(m[1]);
      f.max_n = std::stoi(m[2]);
      f.seed = std::stoull(m[3]);
    } else if (std::regex_match(text, m, random)) {
      f.kind = ScanFamily::Kind::Random;
      f.count = std::stoi(m[1]);
      f.max_n = std::stoi(m[2]);
      f.k = std::stoi(m[3]);
      f.seed = std::stoull(m[4]);
      if (f.k < 1 || f.max_n < 3 * (f.k - 1) + 1) fail(ErrorKind::ParseError, "max_n too small for k: " + text);
    } else {
      fail(ErrorKind::ParseError, "unknown family: " + text);
    }
  } catch (const std::out_of_range&) {
    fail(ErrorKind::ParseError, "number out of range: " + text);
  }
  if (f.count < 1 || f.max_n < 1) fail(ErrorKind::ParseError, "count and max_n must be positive: " + text);
  return f;
}

std::vector<std::string> family_instances(const ScanFamily& f) {
  std::vector<std::string> out;
  if (f.kind == ScanFamily::Kind::Octahedron) return {"octahedron"};
  gen::Rng rng(f.seed);
  const int lo = f.kind == ScanFamily::Kind::Random ? 3 * (f.k - 1) + 1 : 1;
  for (int i = 0; i < f.count; ++i) {
    int n = lo + static_cast<int>(rng.below(static_cast<std::size_t>(f.max_n - lo + 1)));
    std::uint64_t seed = rng.next_u64() >> 32;
    if (f.kind == ScanFamily::Kind::Trees)
      out.push_back("tree:n=" + std::to_string(n) + ",seed=" + std::to_string(seed));
    else
      out.push_back("random:n=" + std::to_string(n) + ",k=" + std::to_string(f.k) + ",seed=" + std::to_string(seed));
  }
  return out;
}

ScanReport scan_conjecture(const ScanFamily& family, Ratio bound, int cap) {
  ScanReport rep;
  for (const std::string& spec : family_instances(family)) {
    EmbeddedGraph g = gen::generate(gen::parse_spec(spec));
    OracleResult r;
    try {
      r = max_induced_outerplane_exact(g, cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TooLarge) throw;
      ++rep.skipped_too_large;
      continue;
    }
    ++rep.instances;
    const auto n = static_cast<std::int64_t>(g.num_vertices());
    // r.optimum / n < min_optimum / min_n
    if (!rep.argmin || r.optimum * static_cast<std::int64_t>(rep.min_n) < rep.min_optimum * n) {
      rep.min_optimum = r.optimum;
      rep.min_n = static_cast<int>(n);
      rep.min_ratio = static_cast<double>(r.optimum) / static_cast<double>(n);
      rep.argmin_spec = spec;
      rep.argmin = g;
    }
    if (!rep.violation && r.optimum * bound.den < bound.num * n) {
      // rebuild from rotations and search again before calling it a violation
      EmbeddedGraph again = EmbeddedGraph::from_rotations(g.rotations(), g.outer_darts());
      if (max_induced_outerplane_exact(again, cap).optimum * bound.den < bound.num * n) {
        rep.violation = true;
        rep.violating = g;
        rep.violating_spec = spec;
      }
    }
  }
  return rep;
}

}  // namespace twoouter
