#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "hyperspec/canonical.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/transforms.hpp"

using namespace hyperspec;

namespace {

const Hypergraph& loose_path3() {
  static Hypergraph g(3, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  return g;
}

template <typename Fn>
errc code_of(Fn fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  return errc::empty_class; // sentinel: "no throw", unused by transforms
}

} // namespace

TEST_CASE("move_edges relocates pivots onto the target") {
  // move the far edge {4,5,6} from 4 to 0
  Hypergraph out = move_edges(loose_path3(), EdgeMove{0, {{2, 4}}});
  CHECK(out.contains_edge({0, 5, 6}));
  CHECK(out.contains_edge({0, 1, 2}));
  CHECK(out.contains_edge({2, 3, 4}));
  CHECK(out.m() == 3);

  // several edges at once, pivots need not be distinct vertices; note the
  // normalized edge order {0,1,2},{0,7,8},{2,3,4},{2,5,6}
  Hypergraph star_side(3, 9, {{0, 1, 2}, {2, 3, 4}, {2, 5, 6}, {0, 7, 8}});
  Hypergraph gathered = move_edges(star_side, EdgeMove{0, {{2, 2}, {3, 2}}});
  CHECK(gathered.contains_edge({0, 3, 4}));
  CHECK(gathered.contains_edge({0, 5, 6}));
  CHECK(gathered.degree(0) == 4);
}

TEST_CASE("move_edges validation") {
  const Hypergraph& g = loose_path3();
  CHECK(code_of([&] { move_edges(g, EdgeMove{0, {}}); }) == errc::bad_params);
  CHECK(code_of([&] { move_edges(g, EdgeMove{2, {{1, 3}}}); }) == errc::target_inside_edge);
  CHECK(code_of([&] { move_edges(g, EdgeMove{0, {{2, 3}}}); }) == errc::pivot_not_in_edge);
  CHECK(code_of([&] { move_edges(g, EdgeMove{0, {{2, 4}, {2, 5}}}); }) == errc::bad_params);
  CHECK(code_of([&] { move_edges(g, EdgeMove{7, {{2, 4}}}); }) == errc::vertex_out_of_range);
  CHECK(code_of([&] { move_edges(g, EdgeMove{0, {{5, 4}}}); }) == errc::bad_params);
}

TEST_CASE("move_edges rejects a duplicated result edge") {
  // {1,2,3} moved off 3 onto 0 would clone {0,1,2}
  Hypergraph g(3, 4, {{0, 1, 2}, {1, 2, 3}});
  CHECK(code_of([&] { move_edges(g, EdgeMove{0, {{1, 3}}}); }) ==
        errc::result_has_duplicate_edge);
}

TEST_CASE("move_edges surfaces stranded vertices") {
  // vertex 4 sits only in {2,3,4}; moving that edge off 4 isolates it
  Hypergraph g(3, 5, {{0, 1, 2}, {2, 3, 4}});
  CHECK(code_of([&] { move_edges(g, EdgeMove{0, {{1, 4}}}); }) == errc::isolated_vertex);
}

TEST_CASE("edge moving toward the Perron max strictly increases rho") {
  // by mirror symmetry x_2 == x_4 on the loose path, so moving {4,5,6} from 4
  // to 2 satisfies x_target >= x_pivot; the increase must be strict
  for (double a : {0.0, 0.25, 0.5, 0.75}) {
    double before = alpha_spectral_radius(loose_path3(), AlphaParam(a), {}).rho;
    Hypergraph out = move_edges(loose_path3(), EdgeMove{2, {{2, 4}}});
    double after = alpha_spectral_radius(out, AlphaParam(a), {}).rho;
    CHECK(after - before > 1e-8);
  }
}

TEST_CASE("edge_release on the middle edge of a loose path") {
  Hypergraph out = edge_release(loose_path3(), 1, 2);
  CHECK(out.contains_edge({0, 1, 2}));
  CHECK(out.contains_edge({2, 3, 4}));
  CHECK(out.contains_edge({2, 5, 6})); // {4,5,6} moved from 4 onto 2
  CHECK(validate_supertree(out).verified);

  // releasing at a pendent vertex of the middle edge gathers both neighbors
  Hypergraph out3 = edge_release(loose_path3(), 1, 3);
  CHECK(out3.contains_edge({0, 1, 3}));
  CHECK(out3.contains_edge({3, 5, 6}));
  CHECK(validate_supertree(out3).verified);
}

TEST_CASE("edge_release strictly increases rho at any vertex of the edge") {
  for (int u : {2, 3, 4})
    for (double a : {0.0, 0.5, 0.75}) {
      double before = alpha_spectral_radius(loose_path3(), AlphaParam(a), {}).rho;
      double after =
          alpha_spectral_radius(edge_release(loose_path3(), 1, u), AlphaParam(a), {}).rho;
      CHECK(after - before > 1e-8);
    }
}

TEST_CASE("releases at different vertices of one edge are isomorphic") {
  Hypergraph at2 = edge_release(loose_path3(), 1, 2);
  Hypergraph at3 = edge_release(loose_path3(), 1, 3);
  Hypergraph at4 = edge_release(loose_path3(), 1, 4);
  CHECK(are_isomorphic(at2, at3));
  CHECK(are_isomorphic(at3, at4));
}

TEST_CASE("edge_release validation") {
  CHECK(code_of([] { edge_release(loose_path3(), 0, 0); }) == errc::pendent_edge);
  CHECK(code_of([] { edge_release(loose_path3(), 1, 0); }) == errc::vertex_not_in_edge);
  CHECK(code_of([] { edge_release(loose_path3(), 9, 2); }) == errc::bad_params);
  CHECK(code_of([] {
          edge_release(Hypergraph(3, 6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}), 1, 2);
        }) == errc::not_supertree);
}

TEST_CASE("two_switch swaps subsets and preserves degrees") {
  // e = {0,1,2}, f = {4,5,6}; swap U1 = {1} with V1 = {5}
  Hypergraph out = two_switch(loose_path3(), TwoSwitchSpec{0, 2, {1}, {5}});
  CHECK(out.contains_edge({0, 2, 5}));
  CHECK(out.contains_edge({1, 4, 6}));
  for (int v = 0; v < out.n(); ++v) CHECK(out.degree(v) == loose_path3().degree(v));
}

TEST_CASE("two_switch validation") {
  const Hypergraph& g = loose_path3();
  CHECK(code_of([&] { two_switch(g, {0, 0, {1}, {1}}); }) == errc::bad_params);
  CHECK(code_of([&] { two_switch(g, {0, 2, {}, {}}); }) == errc::bad_params);
  CHECK(code_of([&] { two_switch(g, {0, 2, {0, 1, 2}, {4, 5, 6}}); }) == errc::bad_params);
  CHECK(code_of([&] { two_switch(g, {0, 2, {0, 1}, {5}}); }) == errc::bad_params);
  CHECK(code_of([&] { two_switch(g, {0, 2, {3}, {5}}); }) == errc::vertex_not_in_edge);
  // moving 2 into {2,3,4} collapses the edge below k vertices
  CHECK(code_of([&] { two_switch(g, {0, 1, {2}, {3}}); }) == errc::overlap_violation);
}

TEST_CASE("two_switch rejects recreating an existing edge") {
  Hypergraph g(3, 7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
  // e = {0,1,2} dropping {1,2} for {3,4} reproduces {0,3,4}
  CHECK(code_of([&] { two_switch(g, {0, 1, {1, 2}, {3, 4}}); }) == errc::result_edge_exists);
}

TEST_CASE("2-switch equality case: automorphic swap leaves rho unchanged") {
  // 4-edge loose path; mirror symmetry gives x_0 == x_7, x_{1,2} ~ x_{8,6}
  Hypergraph g(3, 9, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}});
  double before = alpha_spectral_radius(g, AlphaParam(0.5), {}).rho;
  Hypergraph out = two_switch(g, TwoSwitchSpec{0, 3, {0}, {7}});
  CHECK(are_isomorphic(g, out));
  double after = alpha_spectral_radius(out, AlphaParam(0.5), {}).rho;
  CHECK(std::abs(after - before) < 1e-9);
}

TEST_CASE("2-switch under product dominance never drops rho") {
  // scan every r=1 switch on a lopsided caterpillar; wherever the Perron
  // products satisfy x_{U1} >= x_{V1} and x_{U2} <= x_{V2} the switched graph
  // (when valid and connected) must not lose spectral radius
  Hypergraph g(3, 11, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {1, 7, 8}, {3, 9, 10}});
  AlphaParam alpha(0.5);
  auto base = alpha_spectral_radius(g, alpha, {});
  const auto& x = base.vector;
  int instances = 0;
  for (int e = 0; e < g.m(); ++e)
    for (int f = 0; f < g.m(); ++f) {
      if (e == f) continue;
      for (int u : g.edge(e))
        for (int v : g.edge(f)) {
          double pu1 = x[u], pv1 = x[v];
          double pu2 = 1, pv2 = 1;
          for (int w : g.edge(e))
            if (w != u) pu2 *= x[w];
          for (int w : g.edge(f))
            if (w != v) pv2 *= x[w];
          if (!(pu1 >= pv1 && pu2 <= pv2)) continue;
          Hypergraph out = g;
          try {
            out = two_switch(g, TwoSwitchSpec{e, f, {u}, {v}});
          } catch (const error&) {
            continue; // collision or duplicate: hypothesis not satisfiable
          }
          if (!is_connected(out)) continue;
          ++instances;
          double after = alpha_spectral_radius(out, alpha, {}).rho;
          CHECK(after >= base.rho - 1e-8);
        }
    }
  CHECK(instances > 0);
}
