#include "hyperspec/transforms.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hyperspec {

Hypergraph move_edges(const Hypergraph& g, const EdgeMove& mv) {
  if (mv.relocations.empty())
    throw error(errc::bad_params, "edge move needs at least one relocation");
  if (mv.target < 0 || mv.target >= g.n())
    throw error(errc::vertex_out_of_range, "target " + std::to_string(mv.target));

  std::set<int> touched;
  for (auto [ei, pivot] : mv.relocations) {
    if (ei < 0 || ei >= g.m())
      throw error(errc::bad_params, "edge index " + std::to_string(ei));
    if (!touched.insert(ei).second)
      throw error(errc::bad_params, "edge " + std::to_string(ei) + " relocated twice");
    const Edge& e = g.edge(ei);
    if (std::binary_search(e.begin(), e.end(), mv.target))
      throw error(errc::target_inside_edge,
                  "target " + std::to_string(mv.target) + " already lies in edge " + std::to_string(ei));
    if (!std::binary_search(e.begin(), e.end(), pivot))
      throw error(errc::pivot_not_in_edge,
                  "pivot " + std::to_string(pivot) + " not in edge " + std::to_string(ei));
  }

  std::vector<Edge> edges = g.edges();
  for (auto [ei, pivot] : mv.relocations) {
    Edge& e = edges[static_cast<size_t>(ei)];
    e.erase(std::find(e.begin(), e.end(), pivot));
    e.push_back(mv.target);
    std::sort(e.begin(), e.end());
  }
  {
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i] == sorted[i + 1])
        throw error(errc::result_has_duplicate_edge, "relocation collides with an existing edge");
  }
  // Vertex set is kept; the constructor rejects any vertex stranded edgeless.
  return Hypergraph(g.k(), g.n(), std::move(edges));
}

Hypergraph edge_release(const Hypergraph& g, int edge_index, int u) {
  try {
    validate_supertree(g);
  } catch (const error& e) {
    throw error(errc::not_supertree, std::string("edge release requires a supertree (") +
                                         e.what() + ")");
  }
  if (edge_index < 0 || edge_index >= g.m())
    throw error(errc::bad_params, "edge index " + std::to_string(edge_index));
  const Edge& e = g.edge(edge_index);
  if (!std::binary_search(e.begin(), e.end(), u))
    throw error(errc::vertex_not_in_edge,
                "vertex " + std::to_string(u) + " not in edge " + std::to_string(edge_index));
  std::vector<int> pend = pendent_edges(g);
  if (std::binary_search(pend.begin(), pend.end(), edge_index))
    throw error(errc::pendent_edge, "edge " + std::to_string(edge_index) + " is pendent");

  EdgeMove mv;
  mv.target = u;
  for (int v : e) {
    if (v == u) continue;
    for (int fi : g.incident_edges(v)) {
      if (fi == edge_index) continue;
      const Edge& f = g.edge(fi);
      // f meets e exactly in v (two supertree edges share at most one vertex)
      if (!std::binary_search(f.begin(), f.end(), u)) mv.relocations.emplace_back(fi, v);
    }
  }
  if (mv.relocations.empty())
    throw error(errc::no_adjacent_edges, "no adjacent edge avoids vertex " + std::to_string(u));
  Hypergraph out = move_edges(g, mv);
  validate_supertree(out);
  return out;
}

Hypergraph two_switch(const Hypergraph& g, const TwoSwitchSpec& spec) {
  const int k = g.k();
  int r = static_cast<int>(spec.u_set.size());
  if (r != static_cast<int>(spec.v_set.size()))
    throw error(errc::bad_params, "swapped sets differ in size");
  if (r < 1 || r > k - 1)
    throw error(errc::bad_params, "swap size must lie in [1, k-1], got " + std::to_string(r));
  if (spec.edge_e < 0 || spec.edge_e >= g.m() || spec.edge_f < 0 || spec.edge_f >= g.m())
    throw error(errc::bad_params, "edge index out of range");
  if (spec.edge_e == spec.edge_f)
    throw error(errc::bad_params, "two-switch needs distinct edges");

  const Edge& e = g.edge(spec.edge_e);
  const Edge& f = g.edge(spec.edge_f);
  for (int v : spec.u_set)
    if (!std::binary_search(e.begin(), e.end(), v))
      throw error(errc::vertex_not_in_edge,
                  "vertex " + std::to_string(v) + " not in edge " + std::to_string(spec.edge_e));
  for (int v : spec.v_set)
    if (!std::binary_search(f.begin(), f.end(), v))
      throw error(errc::vertex_not_in_edge,
                  "vertex " + std::to_string(v) + " not in edge " + std::to_string(spec.edge_f));

  auto swap_sets = [k](const Edge& base, const std::vector<int>& out_set,
                       const std::vector<int>& in_set) {
    std::set<int> s(base.begin(), base.end());
    for (int v : out_set) s.erase(v);
    for (int v : in_set) s.insert(v);
    if (static_cast<int>(s.size()) != k)
      throw error(errc::overlap_violation, "swapped edge has fewer than k distinct vertices");
    return Edge(s.begin(), s.end());
  };
  Edge e2 = swap_sets(e, spec.u_set, spec.v_set);
  Edge f2 = swap_sets(f, spec.v_set, spec.u_set);
  if (e2 == f2)
    throw error(errc::result_edge_exists, "both swapped edges coincide");
  for (int i = 0; i < g.m(); ++i) {
    if (i == spec.edge_e || i == spec.edge_f) continue;
    if (g.edge(i) == e2 || g.edge(i) == f2)
      throw error(errc::result_edge_exists, "swapped edge already present");
  }
  if (e2 == e || e2 == f || f2 == e || f2 == f)
    throw error(errc::result_edge_exists, "swap reproduces an input edge");

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(g.m()));
  for (int i = 0; i < g.m(); ++i) {
    if (i == spec.edge_e) edges.push_back(e2);
    else if (i == spec.edge_f) edges.push_back(f2);
    else edges.push_back(g.edge(i));
  }
  return Hypergraph(k, g.n(), std::move(edges));
}

} // namespace hyperspec
