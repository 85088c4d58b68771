#include "hyperspec/enumeration.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hyperspec/canonical.hpp"
#include "hyperspec/combinatorics.hpp"

namespace hyperspec {

// Every supertree with m >= 2 edges has a pendent edge whose removal leaves
// a supertree, so growing by pendent-edge attachment from the single edge
// reaches every isomorphism class.
std::vector<SupertreeCertificate> enumerate_supertrees(const EnumerationQuery& q) {
  if (q.m < 1 || q.k < 2)
    throw error(errc::bad_params, "need m >= 1 and k >= 2");
  long n_final = static_cast<long>(q.m) * (q.k - 1) + 1;
  if (n_final > q.guard)
    throw error(errc::instance_too_large,
                "enumeration at m=" + std::to_string(q.m) + ", k=" + std::to_string(q.k) +
                    " needs n=" + std::to_string(n_final) + " > guard " + std::to_string(q.guard));

  std::map<CanonicalForm, Hypergraph> level;
  {
    Edge e0(static_cast<size_t>(q.k));
    for (int i = 0; i < q.k; ++i) e0[static_cast<size_t>(i)] = i;
    Hypergraph single(q.k, q.k, {e0});
    level.emplace(canonical_form(single), single);
  }
  for (int m = 2; m <= q.m; ++m) {
    std::map<CanonicalForm, Hypergraph> next;
    for (const auto& [form, g] : level) {
      for (int step = 0; step < g.n(); ++step) {
        int anchor = q.reverse_anchor_order ? g.n() - 1 - step : step;
        std::vector<Edge> edges = g.edges();
        Edge fresh{anchor};
        for (int i = 0; i < q.k - 1; ++i) fresh.push_back(g.n() + i);
        edges.push_back(std::move(fresh));
        Hypergraph child(q.k, g.n() + q.k - 1, std::move(edges));
        CanonicalForm cf = canonical_form(child);
        next.emplace(std::move(cf), std::move(child));
      }
    }
    level = std::move(next);
  }

  std::vector<SupertreeCertificate> out;
  for (const auto& [form, g] : level) {
    if (q.beta && independence_number(g, std::max(q.guard, g.n())).beta != *q.beta) continue;
    if (q.mu && matching_number(g, std::max(q.guard, g.m())).mu != *q.mu) continue;
    if (q.pi && degree_sequence(g).entries != *q.pi) continue;
    out.push_back(validate_supertree(g));
  }
  return out;
}

long count_supertrees(int m, int k, int guard) {
  EnumerationQuery q;
  q.m = m;
  q.k = k;
  q.guard = guard;
  return static_cast<long>(enumerate_supertrees(q).size());
}

} // namespace hyperspec
