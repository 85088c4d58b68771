#include "doctest.h"

#include <random>

#include "hyperspec/canonical.hpp"
#include "hyperspec/constructions.hpp"
#include "hyperspec/hypergraph.hpp"
#include "support/oracles.hpp"

using namespace hyperspec;

namespace {

Hypergraph relabel(const Hypergraph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (Edge e : g.edges()) {
    for (int& v : e) v = perm[v];
    edges.push_back(std::move(e));
  }
  return Hypergraph(g.k(), g.n(), std::move(edges));
}

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

} // namespace

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 2 + (int)(rng() % 3);
    int m = 2 + (int)(rng() % 5);
    Hypergraph g = oracle::random_supertree(rng, m, k);
    Hypergraph h = relabel(g, random_perm(rng, g.n()));
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(are_isomorphic(g, h));
  }
}

TEST_CASE("agrees with brute-force permutation search on all small pairs") {
  std::mt19937_64 rng(7);
  std::vector<Hypergraph> pool;
  for (int trial = 0; trial < 12; ++trial)
    pool.push_back(oracle::random_supertree(rng, 2 + (int)(rng() % 3), 3));
  // throw in a cyclic pair the supertree grower cannot produce
  pool.push_back(Hypergraph(3, 6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}));
  pool.push_back(Hypergraph(3, 6, {{1, 2, 3}, {3, 4, 5}, {5, 0, 1}}));
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i; j < pool.size(); ++j) {
      if (pool[i].n() != pool[j].n() || pool[i].n() > 8) continue;
      CHECK(are_isomorphic(pool[i], pool[j]) == oracle::brute_isomorphic(pool[i], pool[j]));
    }
}

TEST_CASE("distinguishes same-degree-sequence non-isomorphic supertrees") {
  // both have degree sequence (2,2,2,1,1,1,1,1,1): a loose path versus a
  // central edge with one pendant edge at each of its vertices
  Hypergraph a(3, 9, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 8}});
  Hypergraph b(3, 9, {{0, 1, 2}, {0, 3, 4}, {1, 5, 6}, {2, 7, 8}});
  CHECK_FALSE(are_isomorphic(a, b));
  CHECK(canonical_form(a) != canonical_form(b));
  CHECK_FALSE(oracle::brute_isomorphic(a, b));
}

TEST_CASE("large star symmetry stays cheap") {
  // 41 leaves, |Aut| = 10! * 4!^10; must finish instantly
  auto s = hyperstar(10, 5);
  auto f = canonical_form(s.host);
  CHECK_FALSE(f.bytes.empty());
  // the canonical form of a star is stable under any leaf-heavy relabeling
  std::mt19937_64 rng(99);
  Hypergraph h = relabel(s.host, random_perm(rng, s.host.n()));
  CHECK(canonical_form(h) == f);
}

TEST_CASE("forms order k then n then edge structure") {
  CHECK(canonical_form(Hypergraph(2, 2, {{0, 1}})) < canonical_form(Hypergraph(3, 3, {{0, 1, 2}})));
  CHECK(canonical_form(hyperstar(2, 3).host) < canonical_form(hyperstar(3, 3).host));
}
