#include "hyperspec/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace hyperspec {
namespace {

// Shared exact solver: maximum independent set in a conflict graph of at
// most 64 nodes, with optional coverage constraints (pick at least one node
// from each requirement mask). Independence and matching both reduce to it.
struct ConflictGraph {
  int n = 0;
  std::vector<uint64_t> adj;
};

uint64_t bit(int v) { return uint64_t{1} << v; }

// Largest independent subset of `cand` covering all `reqs`; -1 when the
// requirements cannot be met.
int mis_bound(const ConflictGraph& cg, uint64_t cand,
              const std::vector<uint64_t>& reqs) {
  for (uint64_t r : reqs)
    if ((r & cand) == 0) return -1;
  int best = -1;

  auto rec = [&](auto&& self, uint64_t c, std::vector<uint64_t> pending, int size) -> void {
    if (size + std::popcount(c) <= best) return;
    for (uint64_t r : pending)
      if ((r & c) == 0) return;
    if (!pending.empty()) {
      // cover the tightest requirement first
      size_t pick = 0;
      int width = 65;
      for (size_t i = 0; i < pending.size(); ++i) {
        int w = std::popcount(pending[i] & c);
        if (w < width) { width = w; pick = i; }
      }
      uint64_t options = pending[pick] & c;
      while (options) {
        int v = std::countr_zero(options);
        options &= options - 1;
        std::vector<uint64_t> rest;
        for (size_t i = 0; i < pending.size(); ++i)
          if (i != pick && !(pending[i] & bit(v))) rest.push_back(pending[i]);
        self(self, c & ~(cg.adj[static_cast<size_t>(v)] | bit(v)), std::move(rest), size + 1);
      }
      return;
    }
    if (!c) {
      best = std::max(best, size);
      return;
    }
    // pivot on the most conflicted candidate; low-conflict nodes are taken greedily
    int pivot = -1, deg = -1;
    uint64_t scan = c;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      int d = std::popcount(cg.adj[static_cast<size_t>(v)] & c);
      if (d > deg) { deg = d; pivot = v; }
    }
    if (deg <= 1) {
      self(self, c & ~(cg.adj[static_cast<size_t>(pivot)] | bit(pivot)), {}, size + 1);
      return;
    }
    self(self, c & ~(cg.adj[static_cast<size_t>(pivot)] | bit(pivot)), {}, size + 1);
    self(self, c & ~bit(pivot), {}, size);
  };
  rec(rec, cand, reqs, 0);
  return best;
}

// Lexicographically smallest maximum solution, built by committing the
// smallest node whose inclusion still allows an optimal completion.
std::vector<int> lex_witness(const ConflictGraph& cg, const std::vector<uint64_t>& reqs,
                             int optimum) {
  std::vector<int> out;
  uint64_t cand = cg.n == 64 ? ~uint64_t{0} : bit(cg.n) - 1;
  std::vector<uint64_t> pending = reqs;
  int remaining = optimum;
  for (int v = 0; v < cg.n && remaining > 0; ++v) {
    if (!(cand & bit(v))) continue;
    uint64_t after = cand & ~(cg.adj[static_cast<size_t>(v)] | bit(v));
    std::vector<uint64_t> rest;
    for (uint64_t r : pending)
      if (!(r & bit(v))) rest.push_back(r);
    if (mis_bound(cg, after, rest) == remaining - 1) {
      out.push_back(v);
      cand = after;
      pending = std::move(rest);
      --remaining;
    } else {
      cand &= ~bit(v);
    }
  }
  return out;
}

ConflictGraph vertex_conflicts(const Hypergraph& g) {
  ConflictGraph cg;
  cg.n = g.n();
  cg.adj.assign(static_cast<size_t>(g.n()), 0);
  for (const Edge& e : g.edges())
    for (int u : e)
      for (int v : e)
        if (u != v) cg.adj[static_cast<size_t>(u)] |= bit(v);
  return cg;
}

ConflictGraph edge_conflicts(const Hypergraph& g) {
  ConflictGraph cg;
  cg.n = g.m();
  cg.adj.assign(static_cast<size_t>(g.m()), 0);
  for (int v = 0; v < g.n(); ++v)
    for (int a : g.incident_edges(v))
      for (int b : g.incident_edges(v))
        if (a != b) cg.adj[static_cast<size_t>(a)] |= bit(b);
  return cg;
}

void check_cap(int size, int cap, const char* what) {
  if (size > cap)
    throw error(errc::instance_too_large, std::string(what) + " solver capped at " +
                                              std::to_string(cap) + ", instance has " +
                                              std::to_string(size));
  if (size > 64)
    throw error(errc::instance_too_large, std::string(what) + " solver hard limit is 64");
}

} // namespace

IndependenceResult independence_number(const Hypergraph& g, int cap) {
  check_cap(g.n(), cap, "independence");
  ConflictGraph cg = vertex_conflicts(g);
  uint64_t all = g.n() == 64 ? ~uint64_t{0} : bit(g.n()) - 1;
  int beta = mis_bound(cg, all, {});
  return IndependenceResult{beta, lex_witness(cg, {}, beta)};
}

MatchingResult matching_number(const Hypergraph& g, int cap) {
  check_cap(g.m(), cap, "matching");
  if (g.m() == 0) return MatchingResult{0, {}};
  ConflictGraph cg = edge_conflicts(g);
  uint64_t all = g.m() == 64 ? ~uint64_t{0} : bit(g.m()) - 1;
  int mu = mis_bound(cg, all, {});
  return MatchingResult{mu, lex_witness(cg, {}, mu)};
}

IndependenceResult pendant_friendly_mis(const SupertreeCertificate& t, int cap) {
  const Hypergraph& g = t.host;
  check_cap(g.n(), cap, "independence");
  ConflictGraph cg = vertex_conflicts(g);
  std::vector<uint64_t> reqs;
  for (int ei : pendent_edges(g)) {
    uint64_t r = 0;
    for (int v : pendent_vertices_of_edge(g, ei)) r |= bit(v);
    reqs.push_back(r);
  }
  uint64_t all = g.n() == 64 ? ~uint64_t{0} : bit(g.n()) - 1;
  int size = mis_bound(cg, all, reqs);
  if (size < 0)
    throw error(errc::empty_class, "no independent set covers every pendent edge");
  return IndependenceResult{size, lex_witness(cg, reqs, size)};
}

int DegreeSequence::edge_count() const {
  long sum = 0;
  for (int d : entries) sum += d;
  if (k < 2 || sum % k != 0) return -1;
  return static_cast<int>(sum / k);
}

bool DegreeSequence::supertree_feasible() const {
  if (k < 2 || entries.empty()) return false;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 1) return false;
    if (i > 0 && entries[i] > entries[i - 1]) return false;
  }
  int m = edge_count();
  if (m < 1) return false;
  return static_cast<long>(entries.size()) == static_cast<long>(m) * (k - 1) + 1;
}

DegreeSequence degree_sequence(const Hypergraph& g) {
  DegreeSequence d;
  d.k = g.k();
  for (int v = 0; v < g.n(); ++v) d.entries.push_back(g.degree(v));
  std::sort(d.entries.begin(), d.entries.end(), std::greater<int>());
  return d;
}

namespace {

std::vector<int> heights_from(const Hypergraph& g, int root) {
  std::vector<int> h(static_cast<size_t>(g.n()), -1);
  std::queue<int> q;
  h[static_cast<size_t>(root)] = 0;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int ei : g.incident_edges(v))
      for (int u : g.edge(ei))
        if (h[static_cast<size_t>(u)] < 0) {
          h[static_cast<size_t>(u)] = h[static_cast<size_t>(v)] + 1;
          q.push(u);
        }
  }
  return h;
}

int anchor_of(const Hypergraph& g, int ei, const std::vector<int>& h) {
  const Edge& e = g.edge(ei);
  int best = e[0];
  for (int v : e)
    if (h[static_cast<size_t>(v)] < h[static_cast<size_t>(best)]) best = v;
  return best;
}

} // namespace

BfsLayout check_bfs_ordering(const SupertreeCertificate& t, const std::vector<int>& order) {
  const Hypergraph& g = t.host;
  const int n = g.n();
  if (static_cast<int>(order.size()) != n)
    throw error(errc::not_a_permutation, "order has wrong length");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw error(errc::not_a_permutation, "order is not a permutation of the vertices");
    seen[static_cast<size_t>(v)] = 1;
  }

  BfsLayout lay;
  lay.order = order;
  lay.heights = heights_from(g, order[0]);
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;

  for (int i = 0; i + 1 < n && lay.violated == 0; ++i)
    if (lay.heights[static_cast<size_t>(order[static_cast<size_t>(i)])] >
        lay.heights[static_cast<size_t>(order[static_cast<size_t>(i + 1)])])
      lay.violated = 1;
  for (int i = 0; i + 1 < n && lay.violated == 0; ++i)
    if (g.degree(order[static_cast<size_t>(i)]) < g.degree(order[static_cast<size_t>(i + 1)]))
      lay.violated = 2;

  if (lay.violated == 0) {
    // anchor position of every non-root vertex (each is a child in exactly one edge)
    std::vector<int> parent_pos(static_cast<size_t>(n), -1);
    for (int ei = 0; ei < g.m(); ++ei) {
      int a = anchor_of(g, ei, lay.heights);
      for (int v : g.edge(ei))
        if (v != a) parent_pos[static_cast<size_t>(v)] = pos[static_cast<size_t>(a)];
    }
    for (int i = 0; i < n && lay.violated == 0; ++i)
      for (int j = i + 1; j < n; ++j) {
        int u = order[static_cast<size_t>(i)];
        int v = order[static_cast<size_t>(j)];
        if (parent_pos[static_cast<size_t>(u)] < 0 || parent_pos[static_cast<size_t>(v)] < 0)
          continue;
        if (parent_pos[static_cast<size_t>(u)] > parent_pos[static_cast<size_t>(v)]) {
          lay.violated = 3;
          break;
        }
      }
  }

  if (lay.violated == 0) {
    for (int ei = 0; ei < g.m() && lay.violated == 0; ++ei) {
      std::vector<int> ps;
      for (int v : g.edge(ei)) ps.push_back(pos[static_cast<size_t>(v)]);
      std::sort(ps.begin(), ps.end());
      if (ps.back() - ps[1] != g.k() - 2) lay.violated = 4;
    }
  }

  lay.ok = (lay.violated == 0);
  return lay;
}

namespace {

// Layer-wise backtracking for find_bfs_ordering. Candidate orders place one
// layer at a time: the children of each edge stay together (condition 4),
// child blocks follow their anchors' order (condition 3), degrees never
// increase (condition 2). Branches that only permute vertices with equal
// rooted-subtree codes are skipped, so heavy symmetry stays cheap while the
// search remains exhaustive.
struct OrderSearch {
  const Hypergraph& g;
  std::vector<int> height;
  std::vector<std::vector<int>> anchored; // per vertex: edges anchored at it
  std::vector<std::string> vcode, ecode;  // rooted subtree codes
  std::vector<int> order;
  int root;

  OrderSearch(const Hypergraph& graph, int r) : g(graph), root(r) {
    height = heights_from(g, root);
    anchored.assign(static_cast<size_t>(g.n()), {});
    for (int ei = 0; ei < g.m(); ++ei)
      anchored[static_cast<size_t>(anchor_of(g, ei, height))].push_back(ei);

    vcode.assign(static_cast<size_t>(g.n()), "");
    ecode.assign(static_cast<size_t>(g.m()), "");
    std::vector<int> by_depth(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) by_depth[static_cast<size_t>(v)] = v;
    std::sort(by_depth.begin(), by_depth.end(), [&](int a, int b) {
      return height[static_cast<size_t>(a)] > height[static_cast<size_t>(b)];
    });
    for (int v : by_depth) {
      std::vector<std::string> parts;
      for (int ei : anchored[static_cast<size_t>(v)]) {
        std::vector<std::string> kids;
        for (int u : g.edge(ei))
          if (u != v) kids.push_back(vcode[static_cast<size_t>(u)]);
        std::sort(kids.begin(), kids.end());
        std::string ec = "(";
        for (auto& s : kids) ec += s;
        ec += ")";
        ecode[static_cast<size_t>(ei)] = ec;
        parts.push_back(std::move(ec));
      }
      std::sort(parts.begin(), parts.end());
      std::string vc = "<" + std::to_string(g.degree(v)) + "|";
      for (auto& s : parts) vc += s;
      vc += ">";
      vcode[static_cast<size_t>(v)] = std::move(vc);
    }
  }

  int last_degree() const { return g.degree(order.back()); }

  std::vector<int> block_degseq(int ei, int anchor) const {
    std::vector<int> d;
    for (int u : g.edge(ei))
      if (u != anchor) d.push_back(g.degree(u));
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
  }

  bool run() {
    order.clear();
    order.push_back(root);
    return next_layer(0, static_cast<size_t>(0));
  }

  // place the children of all edges anchored in [layer_from, order.size())
  bool next_layer(int /*layer*/, size_t layer_from) {
    std::vector<int> groups; // anchors in order
    size_t layer_to = order.size();
    for (size_t i = layer_from; i < layer_to; ++i)
      if (!anchored[static_cast<size_t>(order[i])].empty()) groups.push_back(order[i]);
    if (groups.empty()) return static_cast<int>(order.size()) == g.n();
    return place_group(groups, 0, {}, layer_to);
  }

  bool place_group(const std::vector<int>& groups, size_t gi, std::vector<char> used,
                   size_t layer_from) {
    if (gi == groups.size())
      return next_layer(0, layer_from);
    const auto& blocks = anchored[static_cast<size_t>(groups[gi])];
    used.resize(blocks.size(), 0);
    return choose_block(groups, gi, used, layer_from);
  }

  bool choose_block(const std::vector<int>& groups, size_t gi, std::vector<char>& used,
                    size_t layer_from) {
    const auto& blocks = anchored[static_cast<size_t>(groups[gi])];
    // next block must carry the lexicographically largest remaining degree
    // sequence, otherwise the layer cannot stay degree-monotone
    std::vector<int> maxseq;
    bool any = false;
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (used[i]) continue;
      std::vector<int> ds = block_degseq(blocks[i], groups[gi]);
      if (!any || ds > maxseq) { maxseq = ds; any = true; }
    }
    if (!any) return place_group(groups, gi + 1, {}, layer_from);

    std::set<std::string> tried;
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (used[i]) continue;
      if (block_degseq(blocks[i], groups[gi]) != maxseq) continue;
      if (!tried.insert(ecode[static_cast<size_t>(blocks[i])]).second) continue;
      used[i] = 1;
      std::vector<int> kids;
      for (int u : g.edge(blocks[i]))
        if (u != groups[gi]) kids.push_back(u);
      if (place_children(kids, 0, groups, gi, used, layer_from)) return true;
      used[i] = 0;
    }
    return false;
  }

  bool place_children(std::vector<int>& kids, size_t placed, const std::vector<int>& groups,
                      size_t gi, std::vector<char>& used, size_t layer_from) {
    if (placed == kids.size())
      return choose_block(groups, gi, used, layer_from);
    int maxdeg = -1;
    for (size_t i = placed; i < kids.size(); ++i)
      maxdeg = std::max(maxdeg, g.degree(kids[i]));
    if (maxdeg > last_degree()) return false;
    std::set<std::string> tried;
    for (size_t i = placed; i < kids.size(); ++i) {
      if (g.degree(kids[i]) != maxdeg) continue;
      if (!tried.insert(vcode[static_cast<size_t>(kids[i])]).second) continue;
      std::swap(kids[placed], kids[i]);
      order.push_back(kids[placed]);
      if (place_children(kids, placed + 1, groups, gi, used, layer_from)) return true;
      order.pop_back();
      std::swap(kids[placed], kids[i]);
    }
    return false;
  }
};

} // namespace

std::optional<BfsLayout> find_bfs_ordering(const SupertreeCertificate& t, int guard) {
  const Hypergraph& g = t.host;
  if (g.n() > guard)
    throw error(errc::instance_too_large, "ordering search capped at n=" + std::to_string(guard));
  int maxdeg = 0;
  for (int v = 0; v < g.n(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
  for (int r = 0; r < g.n(); ++r) {
    if (g.n() > 1 && g.degree(r) != maxdeg) continue; // condition 2 forces a max-degree root
    OrderSearch s(g, r);
    if (s.run()) {
      BfsLayout lay = check_bfs_ordering(t, s.order);
      if (lay.ok) return lay;
    }
  }
  return std::nullopt;
}

} // namespace hyperspec
