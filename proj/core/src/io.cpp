#include "hyperspec/io.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace hyperspec {
namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw error(errc::parse_error, "malformed JSON");
  return j;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw error(errc::parse_error, std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> as_int_list(const json& j, const char* what) {
  if (!j.is_array()) throw error(errc::parse_error, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

// writers are hand-rolled: fixed key order, no float re-formatting
void append_edges(std::string& s, const std::vector<Edge>& edges) {
  s += '[';
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ',';
    s += '[';
    for (size_t j = 0; j < edges[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(edges[i][j]);
    }
    s += ']';
  }
  s += ']';
}

std::string quote(const std::string& raw) { return json(raw).dump(); }

} // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const Hypergraph& g) {
  std::string s = "{\"k\":" + std::to_string(g.k()) + ",\"n\":" + std::to_string(g.n()) +
                  ",\"edges\":";
  append_edges(s, g.edges());
  s += '}';
  return s;
}

Hypergraph hypergraph_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("k") || !j.contains("n") || !j.contains("edges"))
    throw error(errc::parse_error, "expected {\"k\":...,\"n\":...,\"edges\":[...]}");
  int k = as_int(j["k"], "k");
  int n = as_int(j["n"], "n");
  if (!j["edges"].is_array()) throw error(errc::parse_error, "edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) edges.push_back(as_int_list(e, "edge entry"));
  return Hypergraph(k, n, std::move(edges));
}

std::string to_text(const Hypergraph& g) {
  std::string s = std::to_string(g.k()) + " " + std::to_string(g.n()) + " " +
                  std::to_string(g.m()) + "\n";
  for (const Edge& e : g.edges()) {
    for (size_t j = 0; j < e.size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(e[j]);
    }
    s += '\n';
  }
  return s;
}

Hypergraph hypergraph_from_text(const std::string& text) {
  std::istringstream in(text);
  long k, n, m;
  if (!(in >> k >> n >> m)) throw error(errc::parse_error, "expected header 'k n m'");
  if (k < 2 || n < 0 || m < 0 || k > 1000000 || n > 1000000 || m > 1000000)
    throw error(errc::parse_error, "implausible header values");
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    Edge e;
    for (long j = 0; j < k; ++j) {
      long v;
      if (!(in >> v)) throw error(errc::parse_error, "truncated edge list");
      e.push_back(static_cast<int>(v));
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(k), static_cast<int>(n), std::move(edges));
}

Hypergraph hypergraph_from_string(const std::string& text) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') return hypergraph_from_json(text);
  return hypergraph_from_text(text);
}

std::string to_json(const PerronResult& r) {
  std::string s = "{\"rho\":" + format_double(r.rho) + ",\"vector\":[";
  for (size_t i = 0; i < r.vector.size(); ++i) {
    if (i) s += ',';
    s += format_double(r.vector[i]);
  }
  s += "],\"residual\":" + format_double(r.residual) +
       ",\"iterations\":" + std::to_string(r.iterations) +
       ",\"converged\":" + (r.converged ? "true" : "false") + "}";
  return s;
}

std::string to_json(const IndependenceResult& r) {
  std::string s = "{\"beta\":" + std::to_string(r.beta) + ",\"witness\":[";
  for (size_t i = 0; i < r.witness.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(r.witness[i]);
  }
  return s + "]}";
}

std::string to_json(const MatchingResult& r) {
  std::string s = "{\"mu\":" + std::to_string(r.mu) + ",\"witness\":[";
  for (size_t i = 0; i < r.witness.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(r.witness[i]);
  }
  return s + "]}";
}

std::string to_json(const DegreeSequence& d) {
  std::string s = "[";
  for (size_t i = 0; i < d.entries.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d.entries[i]);
  }
  return s + "]";
}

TransformSpec transform_spec_from_json(const std::string& text, const std::string& expect) {
  json j = parse(text);
  if (!j.is_object()) throw error(errc::parse_error, "transform spec must be an object");
  std::string op = expect;
  json inner = j;
  for (const char* name : {"move", "release", "switch"})
    if (j.contains(name)) {
      op = name;
      inner = j[name];
      break;
    }
  if (op == "move") {
    if (!inner.contains("target") || !inner.contains("relocations"))
      throw error(errc::parse_error, "move spec needs target and relocations");
    EdgeMove mv;
    mv.target = as_int(inner["target"], "target");
    if (!inner["relocations"].is_array())
      throw error(errc::parse_error, "relocations must be an array of [edge, pivot] pairs");
    for (const auto& p : inner["relocations"]) {
      std::vector<int> pair = as_int_list(p, "relocation");
      if (pair.size() != 2) throw error(errc::parse_error, "relocation must be [edge, pivot]");
      mv.relocations.emplace_back(pair[0], pair[1]);
    }
    return mv;
  }
  if (op == "release") {
    if (!inner.contains("e") || !inner.contains("u"))
      throw error(errc::parse_error, "release spec needs e and u");
    return ReleaseSpec{as_int(inner["e"], "e"), as_int(inner["u"], "u")};
  }
  if (op == "switch") {
    for (const char* key : {"e", "f", "U1", "V1"})
      if (!inner.contains(key))
        throw error(errc::parse_error, std::string("switch spec needs ") + key);
    TwoSwitchSpec sw;
    sw.edge_e = as_int(inner["e"], "e");
    sw.edge_f = as_int(inner["f"], "f");
    sw.u_set = as_int_list(inner["U1"], "U1");
    sw.v_set = as_int_list(inner["V1"], "V1");
    return sw;
  }
  throw error(errc::parse_error, "unknown transform spec; expected move, release or switch");
}

std::string certification_scope_note() {
  return "certified for the listed finite alpha grid and (m,k) scales only; "
         "the underlying extremal statements quantify over all alpha in [0,1) "
         "and all m, which no finite sweep can establish";
}

namespace {

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

} // namespace

std::string report_csv(const std::vector<ExtremalReport>& rows) {
  std::string s = "m,k,param,alpha,class_size,champion_rho,gap,unique\n";
  for (const auto& r : rows) {
    s += std::to_string(r.m) + ',' + std::to_string(r.k) + ',' + csv_field(r.param) + ',' +
         format_double(r.alpha) + ',' + std::to_string(r.class_size) + ',' +
         format_double(r.champion_rho) + ',' + (r.gap ? format_double(*r.gap) : "") + ',' +
         (r.unique ? "true" : "false") + '\n';
  }
  return s;
}

std::string report_json(const std::vector<ExtremalReport>& rows) {
  std::string s = "{\"note\":" + quote(certification_scope_note()) + ",\"rows\":[";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i) s += ',';
    s += "{\"theorem\":" + quote(r.theorem) + ",\"m\":" + std::to_string(r.m) +
         ",\"k\":" + std::to_string(r.k) + ",\"param\":" + quote(r.param) +
         ",\"alpha\":" + format_double(r.alpha) +
         ",\"class_size\":" + std::to_string(r.class_size) +
         ",\"champion\":" + to_json(r.champion) +
         ",\"champion_rho\":" + format_double(r.champion_rho) +
         ",\"predicted\":" + to_json(r.predicted) +
         ",\"predicted_rho\":" + format_double(r.predicted_rho) + ",\"gap\":" +
         (r.gap ? format_double(*r.gap) : "null") +
         ",\"unique\":" + (r.unique ? "true" : "false") +
         ",\"margin\":" + format_double(r.margin) + "}";
  }
  return s + "]}";
}

} // namespace hyperspec
