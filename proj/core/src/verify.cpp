#include "hyperspec/verify.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hyperspec/canonical.hpp"
#include "hyperspec/constructions.hpp"
#include "hyperspec/enumeration.hpp"

namespace hyperspec {
namespace {

ExtremalReport judge(std::string theorem, int m, int k, std::string param, AlphaParam alpha,
                     const std::vector<SupertreeCertificate>& cls,
                     const SupertreeCertificate& predicted, const VerifyOptions& opts) {
  if (cls.empty())
    throw error(errc::empty_class, theorem + " class at " + param + " is empty");

  struct Scored {
    const Hypergraph* g;
    double rho;
    CanonicalForm form;
  };
  std::vector<Scored> scored;
  scored.reserve(cls.size());
  for (const auto& cert : cls) {
    PerronResult pr = alpha_spectral_radius(cert.host, alpha, opts.solver);
    scored.push_back(Scored{&cert.host, pr.rho, canonical_form(cert.host)});
  }
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.rho != b.rho) return a.rho > b.rho;
    return a.form < b.form;
  });

  ExtremalReport rep{std::move(theorem),
                     m,
                     k,
                     std::move(param),
                     alpha.value(),
                     static_cast<int>(cls.size()),
                     *scored.front().g,
                     scored.front().rho,
                     predicted.host,
                     alpha_spectral_radius(predicted.host, alpha, opts.solver).rho,
                     std::nullopt,
                     false,
                     opts.margin};
  bool matches = scored.front().form == canonical_form(predicted.host);
  if (scored.size() >= 2) {
    rep.gap = scored.front().rho - scored[1].rho;
    rep.unique = matches && *rep.gap > opts.margin;
  } else {
    rep.unique = matches;
  }
  return rep;
}

} // namespace

ExtremalReport verify_independence_extremal(int m, int k, int beta, AlphaParam alpha,
                                            const VerifyOptions& opts) {
  EnumerationQuery q;
  q.m = m;
  q.k = k;
  q.beta = beta;
  q.guard = opts.guard;
  std::vector<SupertreeCertificate> cls = enumerate_supertrees(q);
  if (cls.empty())
    throw error(errc::empty_class, "no supertree with m=" + std::to_string(m) +
                                       ", k=" + std::to_string(k) +
                                       " has independence number " + std::to_string(beta));
  return judge("independence", m, k, "beta=" + std::to_string(beta), alpha, cls,
               t_supertree(m, k, beta), opts);
}

ExtremalReport verify_degree_sequence_extremal(int k, const DegreeSequence& pi,
                                               AlphaParam alpha, const VerifyOptions& opts) {
  DegreeSequence seq{pi.entries, k};
  if (!seq.supertree_feasible())
    throw error(errc::infeasible_sequence, "degree sequence fits no supertree");
  int m = seq.edge_count();
  EnumerationQuery q;
  q.m = m;
  q.k = k;
  q.pi = pi.entries;
  q.guard = opts.guard;
  std::vector<SupertreeCertificate> cls = enumerate_supertrees(q);
  std::string param = "pi=";
  for (size_t i = 0; i < pi.entries.size(); ++i) {
    if (i) param += ',';
    param += std::to_string(pi.entries[static_cast<size_t>(i)]);
  }
  return judge("degree-sequence", m, k, std::move(param), alpha, cls, bfs_supertree(k, seq),
               opts);
}

ExtremalReport verify_matching_extremal(int m, int k, int mu, AlphaParam alpha,
                                        const VerifyOptions& opts) {
  EnumerationQuery q;
  q.m = m;
  q.k = k;
  q.mu = mu;
  q.guard = opts.guard;
  std::vector<SupertreeCertificate> cls = enumerate_supertrees(q);
  if (cls.empty())
    throw error(errc::empty_class, "no supertree with m=" + std::to_string(m) +
                                       ", k=" + std::to_string(k) + " has matching number " +
                                       std::to_string(mu));
  return judge("matching", m, k, "mu=" + std::to_string(mu), alpha, cls,
               h_supertree(m, k, mu), opts);
}

std::vector<ExtremalReport> sweep(const std::vector<double>& alpha_grid,
                                  const std::vector<std::pair<int, int>>& scales,
                                  const VerifyOptions& opts) {
  std::vector<ExtremalReport> rows;
  for (auto [m, k] : scales) {
    int beta_lo = static_cast<int>((static_cast<long>(m) * (k - 1) + 1 + k - 1) / k);
    int mu_hi = static_cast<int>((static_cast<long>(m) * (k - 1) + 1) / k);

    std::set<std::vector<int>> pis;
    {
      EnumerationQuery q;
      q.m = m;
      q.k = k;
      q.guard = opts.guard;
      for (const auto& cert : enumerate_supertrees(q)) pis.insert(degree_sequence(cert.host).entries);
    }

    for (double a : alpha_grid) {
      AlphaParam alpha(a);
      for (int beta = beta_lo; beta <= m; ++beta)
        rows.push_back(verify_independence_extremal(m, k, beta, alpha, opts));
      for (const auto& entries : pis)
        rows.push_back(verify_degree_sequence_extremal(k, DegreeSequence{entries, k}, alpha, opts));
      for (int mu = 1; mu <= mu_hi; ++mu)
        rows.push_back(verify_matching_extremal(m, k, mu, alpha, opts));
    }
  }
  return rows;
}

} // namespace hyperspec
