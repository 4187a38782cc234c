#include "fracbound/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fracbound/errors.hpp"

namespace fracbound {

namespace {

using json = nlohmann::ordered_json;

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(std::string("missing field '") + key + "'");
  return *it;
}

int int_value(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

double double_value(const json& j, const char* what) {
  if (!j.is_number())
    throw parse_error(std::string(what) + " must be a number");
  return j.get<double>();
}

Rational rational_value(const json& j, const char* what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_number_float()) {
    Rational r(j.get<double>());  // exact binary expansion
    r.canonicalize();
    return r;
  }
  throw parse_error(std::string(what) + " must be a rational string or number");
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(int_value(v, what));
  return out;
}

std::vector<std::vector<Rational>> rational_matrix(const json& j, const char* what) {
  if (!j.is_array()) throw parse_error(std::string(what) + " must be an array");
  std::vector<std::vector<Rational>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw parse_error(std::string(what) + " rows must be arrays");
    std::vector<Rational> r;
    r.reserve(row.size());
    for (const auto& v : row) r.push_back(rational_value(v, what));
    out.push_back(std::move(r));
  }
  return out;
}

json distribution_to_json_value(const JointDistribution& dist) {
  json pmf = json::array();
  for (const auto& [x, p] : dist.support())
    pmf.push_back({{"x", x}, {"p", rational_to_string(p)}});
  return {{"alphabet_sizes", dist.alphabet_sizes()}, {"pmf", std::move(pmf)}};
}

JointDistribution distribution_from_json_value(const json& j) {
  if (!j.is_object()) throw parse_error("distribution must be an object");
  auto sizes = int_list(field(j, "alphabet_sizes"), "alphabet size");
  const json& pmf = field(j, "pmf");
  if (!pmf.is_array()) throw parse_error("pmf must be an array");
  std::vector<std::pair<std::vector<int>, Rational>> entries;
  entries.reserve(pmf.size());
  for (const auto& entry : pmf) {
    if (!entry.is_object()) throw parse_error("pmf entries must be objects");
    entries.emplace_back(int_list(field(entry, "x"), "outcome symbol"),
                         rational_value(field(entry, "p"), "probability"));
  }
  return JointDistribution(std::move(sizes), std::move(entries));
}

json marginals_to_json_value(const std::vector<std::vector<Rational>>& q) {
  json rows = json::array();
  for (const auto& m : q) {
    json row = json::array();
    for (const auto& v : m) row.push_back(rational_to_string(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Hypergraph hypergraph_from_json(const std::string& text) {
  json j = parse_document(text);
  int n = int_value(field(j, "n"), "n");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw parse_error("edges must be an array");
  std::vector<std::vector<int>> lists;
  lists.reserve(edges.size());
  for (const auto& e : edges) lists.push_back(int_list(e, "edge element"));
  return Hypergraph::from_lists(n, lists);
}

std::string to_json(const Hypergraph& h) {
  json edges = json::array();
  for (Subset s : h.edges()) edges.push_back(subset_elements(s));
  json j{{"n", h.ground_size()}, {"edges", std::move(edges)}};
  return j.dump();
}

Weighting weighting_from_json(const std::string& text) {
  json j = parse_document(text);
  const json& weights = field(j, "weights");
  if (!weights.is_array()) throw parse_error("weights must be an array");
  std::vector<Rational> values;
  values.reserve(weights.size());
  for (const auto& v : weights) values.push_back(rational_value(v, "weight"));
  return Weighting(std::move(values));
}

std::string to_json(const Weighting& w) {
  json weights = json::array();
  for (const auto& v : w.values()) weights.push_back(rational_to_string(v));
  json j{{"weights", std::move(weights)}};
  return j.dump();
}

JointDistribution distribution_from_json(const std::string& text) {
  return distribution_from_json_value(parse_document(text));
}

std::string to_json(const JointDistribution& dist) {
  return distribution_to_json_value(dist).dump();
}

MeasurePair measure_pair_from_json(const std::string& text) {
  json j = parse_document(text);
  JointDistribution p = distribution_from_json_value(field(j, "p"));
  auto q = rational_matrix(field(j, "q_marginals"), "q_marginals");
  return MeasurePair(std::move(p), std::move(q));
}

std::string to_json(const MeasurePair& pair) {
  json j{{"p", distribution_to_json_value(pair.p())},
         {"q_marginals", marginals_to_json_value(pair.q_marginals())}};
  return j.dump();
}

PosDefMatrix matrix_from_json(const std::string& text) {
  json j = parse_document(text);
  int n = int_value(field(j, "n"), "n");
  const json& rows = field(j, "rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw parse_error("rows must be an array of n rows");
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw parse_error("each row must hold n numbers");
    for (const auto& v : row) flat.push_back(double_value(v, "matrix entry"));
  }
  return PosDefMatrix(n, std::move(flat));
}

std::string to_json(const PosDefMatrix& k) {
  json rows = json::array();
  for (int i = 0; i < k.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < k.size(); ++j) row.push_back(k(i, j));
    rows.push_back(std::move(row));
  }
  json j{{"n", k.size()}, {"rows", std::move(rows)}};
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  json j = parse_document(text);
  int n = int_value(field(j, "n"), "n");
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw parse_error("edges must be an array");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) {
    auto uv = int_list(e, "edge endpoint");
    if (uv.size() != 2) throw parse_error("graph edges must be pairs");
    pairs.push_back({uv[0], uv[1]});
  }
  std::vector<int> loops;
  if (auto it = j.find("loops"); it != j.end())
    loops = int_list(*it, "loop vertex");
  return Graph(n, std::move(pairs), std::move(loops));
}

std::string to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  json loops = json::array();
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (g.has_loop(v)) loops.push_back(v);
  json j{{"n", g.vertex_count()}, {"edges", std::move(edges)}, {"loops", std::move(loops)}};
  return j.dump();
}

TensorizationInput tensorization_input_from_json(const std::string& text) {
  json j = parse_document(text);
  TensorizationInput input;
  input.q_marginals = rational_matrix(field(j, "q_marginals"), "q_marginals");
  const json& g = field(j, "g");
  if (!g.is_array()) throw parse_error("g must be an array of numbers");
  input.g.reserve(g.size());
  for (const auto& v : g) input.g.push_back(to_double(rational_value(v, "g entry")));
  return input;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fracbound
