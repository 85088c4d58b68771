#include "doctest.h"

#include "hyperspec/error.hpp"
#include "hyperspec/hypergraph.hpp"

using namespace hyperspec;

namespace {

bool throws_with(errc code, void (*fn)()) {
  try {
    fn();
  } catch (const error& e) {
    return e.code() == code;
  }
  return false;
}

} // namespace

TEST_CASE("construction normalizes and validates") {
  Hypergraph g(3, 5, {{4, 3, 0}, {2, 1, 0}});
  CHECK(g.k() == 3);
  CHECK(g.n() == 5);
  CHECK(g.m() == 2);
  // edges sorted internally and against each other
  CHECK(g.edge(0) == Edge{0, 1, 2});
  CHECK(g.edge(1) == Edge{0, 3, 4});
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(4) == 1);
  CHECK(g.incident_edges(0) == std::vector<int>{0, 1});
  CHECK(g.contains_edge({3, 4, 0}));
  CHECK_FALSE(g.contains_edge({1, 3, 4}));
}

TEST_CASE("constructor rejections") {
  CHECK(throws_with(errc::bad_params, [] { Hypergraph(1, 3, {}); }));
  CHECK(throws_with(errc::edge_wrong_size, [] { Hypergraph(3, 4, {{0, 1}}); }));
  CHECK(throws_with(errc::duplicate_vertex_in_edge, [] { Hypergraph(3, 4, {{0, 1, 1}}); }));
  CHECK(throws_with(errc::vertex_out_of_range, [] { Hypergraph(3, 3, {{0, 1, 3}}); }));
  CHECK(throws_with(errc::vertex_out_of_range, [] { Hypergraph(3, 3, {{-1, 1, 2}}); }));
  CHECK(throws_with(errc::duplicate_edge, [] { Hypergraph(3, 3, {{0, 1, 2}, {2, 1, 0}}); }));
  CHECK(throws_with(errc::isolated_vertex, [] { Hypergraph(3, 4, {{0, 1, 2}}); }));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(Hypergraph(3, 5, {{0, 1, 2}, {2, 3, 4}})));
  CHECK_FALSE(is_connected(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})));
  CHECK(is_connected(Hypergraph(2, 1, {}))); // single vertex
}

TEST_CASE("supertree certification") {
  auto cert = validate_supertree(Hypergraph(3, 5, {{0, 1, 2}, {2, 3, 4}}));
  CHECK(cert.verified);

  // disconnected
  CHECK(throws_with(errc::not_connected,
                    [] { validate_supertree(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})); }));
  // connected but cyclic: n != m(k-1)+1
  CHECK(throws_with(errc::has_cycle, [] {
    validate_supertree(Hypergraph(3, 6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}));
  }));
  // two edges sharing two vertices
  CHECK(throws_with(errc::has_cycle, [] {
    validate_supertree(Hypergraph(3, 4, {{0, 1, 2}, {1, 2, 3}}));
  }));
}

TEST_CASE("distance is edge count along the unique path") {
  // loose path on three edges: 0-1-2 | 2-3-4 | 4-5-6
  Hypergraph g(3, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  CHECK(distance(g, 0, 0) == 0);
  CHECK(distance(g, 0, 1) == 1);
  CHECK(distance(g, 0, 4) == 2);
  CHECK(distance(g, 1, 6) == 3);
  Hypergraph split(3, 6, {{0, 1, 2}, {3, 4, 5}});
  CHECK_FALSE(distance(split, 0, 5).has_value());
}

TEST_CASE("pendent edges and their free vertices") {
  // middle edge of a loose 3-path is the only non-pendent one
  Hypergraph g(3, 7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
  CHECK(pendent_edges(g) == std::vector<int>{0, 2});
  CHECK(pendent_vertices_of_edge(g, 0) == std::vector<int>{0, 1});
  CHECK(pendent_vertices_of_edge(g, 1) == std::vector<int>{3});
  CHECK(pendent_vertices_of_edge(g, 2) == std::vector<int>{5, 6});

  // a single edge counts as pendent
  Hypergraph one(3, 3, {{0, 1, 2}});
  CHECK(pendent_edges(one) == std::vector<int>{0});
}
