#include "hyperspec/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hyperspec {
namespace {

// Equitable refinement. A colour class is stable when all its members have
// the same (colour, sorted multiset of incident-edge colour profiles).
// New colours are ranked with the old colour as the primary key, so the
// initial order (degree descending) survives refinement.
std::vector<int> refine(const Hypergraph& g, std::vector<int> colour) {
  const int n = g.n();
  int count = 0;
  for (int c : colour) count = std::max(count, c + 1);
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<std::vector<int>> profiles;
      for (int ei : g.incident_edges(v)) {
        std::vector<int> p;
        for (int u : g.edge(ei))
          if (u != v) p.push_back(colour[static_cast<size_t>(u)]);
        std::sort(p.begin(), p.end());
        profiles.push_back(std::move(p));
      }
      std::sort(profiles.begin(), profiles.end());
      std::vector<int>& s = sig[static_cast<size_t>(v)];
      s.push_back(colour[static_cast<size_t>(v)]);
      for (const auto& p : profiles) {
        s.push_back(-1);
        s.insert(s.end(), p.begin(), p.end());
      }
    }
    std::map<std::vector<int>, int> rank;
    for (int v = 0; v < n; ++v) rank[sig[static_cast<size_t>(v)]] = 0;
    int next = 0;
    for (auto& [key, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) colour[static_cast<size_t>(v)] = rank[sig[static_cast<size_t>(v)]];
    if (next == count) return colour;
    count = next;
  }
}

std::vector<int> initial_colour(const Hypergraph& g) {
  std::vector<int> degs;
  for (int v = 0; v < g.n(); ++v) degs.push_back(g.degree(v));
  std::vector<int> distinct = degs;
  std::sort(distinct.begin(), distinct.end(), std::greater<int>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<int> colour(static_cast<size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v)
    colour[static_cast<size_t>(v)] = static_cast<int>(
        std::lower_bound(distinct.begin(), distinct.end(), degs[static_cast<size_t>(v)],
                         std::greater<int>()) -
        distinct.begin());
  return colour;
}

void push_u32(std::string& s, unsigned v) {
  s.push_back(static_cast<char>((v >> 24) & 0xff));
  s.push_back(static_cast<char>((v >> 16) & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>(v & 0xff));
}

// label[v] = position of v in the canonical order
std::string encode(const Hypergraph& g, const std::vector<int>& label) {
  std::vector<Edge> relabeled;
  relabeled.reserve(static_cast<size_t>(g.m()));
  for (const Edge& e : g.edges()) {
    Edge f;
    f.reserve(e.size());
    for (int v : e) f.push_back(label[static_cast<size_t>(v)]);
    std::sort(f.begin(), f.end());
    relabeled.push_back(std::move(f));
  }
  std::sort(relabeled.begin(), relabeled.end());
  std::string out;
  push_u32(out, static_cast<unsigned>(g.k()));
  push_u32(out, static_cast<unsigned>(g.n()));
  push_u32(out, static_cast<unsigned>(g.m()));
  for (const Edge& e : relabeled)
    for (int v : e) push_u32(out, static_cast<unsigned>(v));
  return out;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

struct Search {
  const Hypergraph& g;
  std::string best;
  std::vector<int> best_label;
  std::vector<std::vector<int>> autos; // discovered automorphisms

  explicit Search(const Hypergraph& graph) : g(graph) {}

  void run(const std::vector<int>& colour, std::vector<int>& prefix) {
    const int n = g.n();
    // first colour class of size >= 2; colour values are dense ranks
    std::vector<int> size(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++size[static_cast<size_t>(colour[static_cast<size_t>(v)])];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (size[static_cast<size_t>(c)] >= 2) { target = c; break; }

    if (target < 0) {
      // discrete: colour is the labeling
      std::string enc = encode(g, colour);
      if (best.empty() || enc < best) {
        best = std::move(enc);
        best_label = colour;
      } else if (enc == best) {
        // best_label and colour agree as encodings, so position-matching
        // vertices correspond under an automorphism
        std::vector<int> pos_to_vertex(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
          pos_to_vertex[static_cast<size_t>(best_label[static_cast<size_t>(v)])] = v;
        std::vector<int> gamma(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v)
          gamma[static_cast<size_t>(v)] = pos_to_vertex[static_cast<size_t>(colour[static_cast<size_t>(v)])];
        if (autos.size() < 512) autos.push_back(std::move(gamma));
      }
      return;
    }

    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (colour[static_cast<size_t>(v)] == target) cell.push_back(v);

    std::vector<int> tried;
    for (int v : cell) {
      // skip v when a discovered automorphism fixing the whole prefix maps
      // an already-explored candidate onto it
      DisjointSet ds(n);
      for (const auto& gamma : autos) {
        bool fixes = true;
        for (int p : prefix)
          if (gamma[static_cast<size_t>(p)] != p) { fixes = false; break; }
        if (!fixes) continue;
        for (int u = 0; u < n; ++u) ds.unite(u, gamma[static_cast<size_t>(u)]);
      }
      bool skip = false;
      for (int u : tried)
        if (ds.find(u) == ds.find(v)) { skip = true; break; }
      if (skip) continue;
      tried.push_back(v);

      std::vector<int> split(colour);
      for (int u = 0; u < n; ++u)
        if (split[static_cast<size_t>(u)] > target) ++split[static_cast<size_t>(u)];
      for (int u : cell)
        if (u != v) ++split[static_cast<size_t>(u)];
      prefix.push_back(v);
      run(refine(g, std::move(split)), prefix);
      prefix.pop_back();
    }
  }
};

} // namespace

CanonicalForm canonical_form(const Hypergraph& g) {
  Search s(g);
  std::vector<int> prefix;
  s.run(refine(g, initial_colour(g)), prefix);
  return CanonicalForm{std::move(s.best)};
}

bool are_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.k() != b.k() || a.n() != b.n() || a.m() != b.m()) return false;
  return canonical_form(a) == canonical_form(b);
}

} // namespace hyperspec
