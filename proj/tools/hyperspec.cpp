// hyperspec: alpha-spectral radius toolkit for uniform supertrees.
//
// Exit codes: 0 success, 1 usage or parse error (including alpha out of
// range), 2 invalid graph or infeasible parameters or guard violation,
// 3 solver iteration exhaustion, 4 a verify row falsified the prediction.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperspec/canonical.hpp"
#include "hyperspec/constructions.hpp"
#include "hyperspec/enumeration.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/io.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/transforms.hpp"
#include "hyperspec/verify.hpp"

namespace {

using namespace hyperspec;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNoConverge = 3;
constexpr int kExitFalsified = 4;

std::string slurp(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// A source argument is inline JSON when it starts with '{', a file path
// otherwise; "-" reads stdin.
std::string read_source(const std::string& arg) {
  if (!arg.empty() && arg[0] == '{') return arg;
  if (arg == "-") return slurp(std::cin);
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw error(errc::parse_error, "cannot read " + arg);
  return slurp(in);
}

void emit(const std::string& payload, const std::string& output_path) {
  std::string body = payload;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (output_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw error(errc::parse_error, "cannot write " + output_path);
  out << body;
}

std::vector<double> parse_alpha_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    double v = std::stod(item, &used);
    while (used < item.size() && std::isspace((unsigned char)item[used])) ++used;
    if (used != item.size()) throw CLI::ValidationError("--alpha", "bad number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("--alpha", "empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& csv, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = std::stoi(item, &used);
    while (used < item.size() && std::isspace((unsigned char)item[used])) ++used;
    if (used != item.size()) throw CLI::ValidationError(flag, "bad integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

// "3x3,4x3,5x3" -> {(3,3),(4,3),(5,3)} as (m,k)
std::vector<std::pair<int, int>> parse_scales(const std::string& csv) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t x = item.find('x');
    if (x == std::string::npos) throw CLI::ValidationError("--scales", "expected MxK pairs");
    out.emplace_back(std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1)));
  }
  if (out.empty()) throw CLI::ValidationError("--scales", "empty list");
  return out;
}

void require_alpha_range(const std::vector<double>& alphas) {
  for (double a : alphas)
    if (!(a >= 0.0 && a < 1.0)) {
      std::cerr << "hyperspec: alpha must be in [0, 1), got " << a << "\n";
      std::exit(kExitUsage);
    }
}

int resolve_guard(const std::optional<int>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("HYPERSPEC_GUARD")) {
    try {
      return std::stoi(env);
    } catch (...) {
      std::cerr << "hyperspec: HYPERSPEC_GUARD is not an integer: " << env << "\n";
      std::exit(kExitUsage);
    }
  }
  return 25;
}

struct RhoArgs {
  std::string input;
  std::string output;
  std::string alpha = "0";
  double tolerance = 1e-10;
  long max_iterations = 1000000;
  std::optional<double> shift;
};

int run_rho(const RhoArgs& a) {
  std::vector<double> alphas = parse_alpha_list(a.alpha);
  if (alphas.size() != 1) {
    std::cerr << "hyperspec: rho takes a single alpha\n";
    return kExitUsage;
  }
  require_alpha_range(alphas);
  Hypergraph g = hypergraph_from_string(read_source(a.input));
  SolverOptions opts;
  opts.tolerance = a.tolerance;
  opts.max_iterations = a.max_iterations;
  opts.shift = a.shift;
  PerronResult r = alpha_spectral_radius(g, AlphaParam(alphas[0]), opts);
  emit(to_json(r), a.output);
  if (!r.converged) {
    std::cerr << "hyperspec: bracket width above tolerance after " << r.iterations
              << " iterations\n";
    return kExitNoConverge;
  }
  return kExitOk;
}

struct ConstructArgs {
  std::string family;
  int m = 0;
  int k = 0;
  std::optional<int> beta;
  std::optional<int> mu;
  std::string pi;
  std::string output;
};

int run_construct(const ConstructArgs& a) {
  SupertreeCertificate cert = [&] {
    if (a.family == "star") return hyperstar(a.m, a.k);
    if (a.family == "t") {
      if (!a.beta) throw CLI::ValidationError("--beta", "required for t");
      return t_supertree(a.m, a.k, *a.beta);
    }
    if (a.family == "h") {
      if (!a.mu) throw CLI::ValidationError("--mu", "required for h");
      return h_supertree(a.m, a.k, *a.mu);
    }
    // bfs
    if (a.pi.empty()) throw CLI::ValidationError("--pi", "required for bfs");
    return bfs_supertree(a.k, DegreeSequence{parse_int_list(a.pi, "--pi"), a.k});
  }();
  emit(to_json(cert.host), a.output);
  return kExitOk;
}

struct TransformArgs {
  std::string op;
  std::string graph;
  std::string spec;
  std::string output;
};

int run_transform(const TransformArgs& a) {
  Hypergraph g = hypergraph_from_string(read_source(a.graph));
  TransformSpec spec = transform_spec_from_json(read_source(a.spec), a.op);
  Hypergraph out = std::visit(
      [&](const auto& s) -> Hypergraph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EdgeMove>) {
          if (a.op != "move") throw error(errc::parse_error, "spec is a move, subcommand is not");
          return move_edges(g, s);
        } else if constexpr (std::is_same_v<T, ReleaseSpec>) {
          if (a.op != "release")
            throw error(errc::parse_error, "spec is a release, subcommand is not");
          return edge_release(g, s.edge_index, s.vertex);
        } else {
          if (a.op != "switch")
            throw error(errc::parse_error, "spec is a switch, subcommand is not");
          return two_switch(g, s);
        }
      },
      spec);
  emit(to_json(out), a.output);
  return kExitOk;
}

struct EnumerateArgs {
  int m = 1;
  int k = 3;
  std::optional<int> beta;
  std::optional<int> mu;
  std::string pi;
  std::optional<int> guard;
  bool reverse = false;
  bool count_only = false;
  std::string output;
};

int run_enumerate(const EnumerateArgs& a) {
  EnumerationQuery q;
  q.m = a.m;
  q.k = a.k;
  q.beta = a.beta;
  q.mu = a.mu;
  if (!a.pi.empty()) q.pi = parse_int_list(a.pi, "--pi");
  q.guard = resolve_guard(a.guard);
  q.reverse_anchor_order = a.reverse;
  std::vector<SupertreeCertificate> all = enumerate_supertrees(q);
  if (a.count_only) {
    emit(std::to_string(all.size()), a.output);
    return kExitOk;
  }
  std::string body;
  for (const auto& cert : all) body += to_json(cert.host) + "\n";
  emit(body, a.output);
  return kExitOk;
}

struct VerifyArgs {
  std::string theorem;
  int m = 0;
  int k = 3;
  std::optional<int> beta;
  std::optional<int> mu;
  std::string pi;
  std::string scales;
  std::string alpha = "0";
  std::string format = "json";
  std::string output;
  std::string counterexample = "counterexample.json";
  std::optional<int> guard;
  double tolerance = 1e-10;
  double margin = 1e-8;
};

int run_verify(const VerifyArgs& a) {
  std::vector<double> alphas = parse_alpha_list(a.alpha);
  require_alpha_range(alphas);
  VerifyOptions opts;
  opts.solver.tolerance = a.tolerance;
  opts.margin = a.margin;
  opts.guard = resolve_guard(a.guard);

  std::vector<ExtremalReport> rows;
  if (a.theorem == "sweep") {
    if (a.scales.empty()) throw CLI::ValidationError("--scales", "required for sweep");
    rows = sweep(alphas, parse_scales(a.scales), opts);
  } else if (a.theorem == "independence") {
    int lo = (a.m * (a.k - 1) + 1 + a.k - 1) / a.k;
    for (double al : alphas)
      for (int b = a.beta ? *a.beta : lo; b <= (a.beta ? *a.beta : a.m); ++b)
        rows.push_back(verify_independence_extremal(a.m, a.k, b, AlphaParam(al), opts));
  } else if (a.theorem == "matching") {
    int hi = (a.m * (a.k - 1) + 1) / a.k;
    for (double al : alphas)
      for (int u = a.mu ? *a.mu : 1; u <= (a.mu ? *a.mu : hi); ++u)
        rows.push_back(verify_matching_extremal(a.m, a.k, u, AlphaParam(al), opts));
  } else { // degree-sequence
    if (a.pi.empty()) throw CLI::ValidationError("--pi", "required for degree-sequence");
    DegreeSequence pi{parse_int_list(a.pi, "--pi"), a.k};
    for (double al : alphas)
      rows.push_back(verify_degree_sequence_extremal(a.k, pi, AlphaParam(al), opts));
  }

  emit(a.format == "csv" ? report_csv(rows) : report_json(rows), a.output);

  std::vector<ExtremalReport> falsified;
  for (const auto& r : rows)
    if (!r.unique) falsified.push_back(r);
  if (!falsified.empty()) {
    emit(report_json(falsified), a.counterexample);
    std::cerr << "hyperspec: " << falsified.size() << " row(s) falsified; counterexample report: "
              << a.counterexample << "\n";
    return kExitFalsified;
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"alpha-spectral radius toolkit for k-uniform supertrees"};
  app.require_subcommand(1);

  RhoArgs rho;
  CLI::App* rho_cmd = app.add_subcommand("rho", "Perron value and vector of A_alpha");
  rho_cmd->add_option("input", rho.input, "graph file, inline JSON, or - for stdin")->required();
  rho_cmd->add_option("--alpha", rho.alpha, "convex weight in [0,1)");
  rho_cmd->add_option("--tolerance", rho.tolerance, "bracket width target");
  rho_cmd->add_option("--max-iterations", rho.max_iterations, "iteration budget");
  double rho_shift = 0;
  CLI::Option* shift_opt = rho_cmd->add_option("--shift", rho_shift, "diagonal shift override");
  rho_cmd->add_option("--output", rho.output, "write here instead of stdout");

  ConstructArgs con;
  CLI::App* con_cmd = app.add_subcommand("construct", "emit an extremal family member");
  con_cmd->add_option("family", con.family, "star | t | h | bfs")
      ->required()
      ->check(CLI::IsMember({"star", "t", "h", "bfs"}));
  con_cmd->add_option("--m", con.m, "edge count");
  con_cmd->add_option("--k", con.k, "edge size")->required();
  int con_beta = 0, con_mu = 0;
  CLI::Option* beta_opt = con_cmd->add_option("--beta", con_beta, "independence number (t)");
  CLI::Option* mu_opt = con_cmd->add_option("--mu", con_mu, "matching number (h)");
  con_cmd->add_option("--pi", con.pi, "degree sequence, comma separated (bfs)");
  con_cmd->add_option("--output", con.output, "write here instead of stdout");

  TransformArgs tr;
  CLI::App* tr_cmd = app.add_subcommand("transform", "apply a rewriting operation");
  tr_cmd->add_option("op", tr.op, "move | release | switch")
      ->required()
      ->check(CLI::IsMember({"move", "release", "switch"}));
  tr_cmd->add_option("--graph", tr.graph, "graph file, inline JSON, or -")->required();
  tr_cmd->add_option("--spec", tr.spec, "operation spec file or inline JSON")->required();
  tr_cmd->add_option("--output", tr.output, "write here instead of stdout");

  EnumerateArgs en;
  CLI::App* en_cmd = app.add_subcommand("enumerate", "all non-isomorphic supertrees");
  en_cmd->add_option("--m", en.m, "edge count")->required();
  en_cmd->add_option("--k", en.k, "edge size")->required();
  int en_beta = 0, en_mu = 0, en_guard = 0;
  CLI::Option* en_beta_opt = en_cmd->add_option("--beta", en_beta, "filter: independence number");
  CLI::Option* en_mu_opt = en_cmd->add_option("--mu", en_mu, "filter: matching number");
  en_cmd->add_option("--pi", en.pi, "filter: degree sequence, comma separated");
  CLI::Option* en_guard_opt = en_cmd->add_option("--guard", en_guard, "max vertex count");
  en_cmd->add_flag("--reverse-anchors", en.reverse, "grow with anchors high-to-low");
  en_cmd->add_flag("--count", en.count_only, "print only the class count");
  en_cmd->add_option("--output", en.output, "write here instead of stdout");

  VerifyArgs ver;
  CLI::App* ver_cmd = app.add_subcommand("verify", "exhaustive extremal comparison");
  ver_cmd->add_option("theorem", ver.theorem, "independence | degree-sequence | matching | sweep")
      ->required()
      ->check(CLI::IsMember({"independence", "degree-sequence", "matching", "sweep"}));
  ver_cmd->add_option("--m", ver.m, "edge count");
  ver_cmd->add_option("--k", ver.k, "edge size");
  int ver_beta = 0, ver_mu = 0, ver_guard = 0;
  CLI::Option* ver_beta_opt = ver_cmd->add_option("--beta", ver_beta, "single beta (else all)");
  CLI::Option* ver_mu_opt = ver_cmd->add_option("--mu", ver_mu, "single mu (else all)");
  ver_cmd->add_option("--pi", ver.pi, "degree sequence, comma separated");
  ver_cmd->add_option("--scales", ver.scales, "MxK pairs, e.g. 3x3,4x3 (sweep)");
  ver_cmd->add_option("--alpha", ver.alpha, "comma-separated grid in [0,1)");
  ver_cmd->add_option("--format", ver.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  ver_cmd->add_option("--output", ver.output, "write here instead of stdout");
  ver_cmd->add_option("--counterexample", ver.counterexample,
                      "falsified-row report path (on exit 4)");
  CLI::Option* ver_guard_opt = ver_cmd->add_option("--guard", ver_guard, "max vertex count");
  ver_cmd->add_option("--tolerance", ver.tolerance, "solver bracket width target");
  ver_cmd->add_option("--margin", ver.margin, "uniqueness gap threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*shift_opt) rho.shift = rho_shift;
  if (*beta_opt) con.beta = con_beta;
  if (*mu_opt) con.mu = con_mu;
  if (*en_beta_opt) en.beta = en_beta;
  if (*en_mu_opt) en.mu = en_mu;
  if (*en_guard_opt) en.guard = en_guard;
  if (*ver_beta_opt) ver.beta = ver_beta;
  if (*ver_mu_opt) ver.mu = ver_mu;
  if (*ver_guard_opt) ver.guard = ver_guard;

  try {
    if (rho_cmd->parsed()) return run_rho(rho);
    if (con_cmd->parsed()) return run_construct(con);
    if (tr_cmd->parsed()) return run_transform(tr);
    if (en_cmd->parsed()) return run_enumerate(en);
    return run_verify(ver);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "hyperspec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const error& e) {
    std::cerr << "hyperspec: " << e.what() << "\n";
    return e.code() == errc::parse_error ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "hyperspec: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
