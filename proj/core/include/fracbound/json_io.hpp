#pragma once

#include <string>
#include <vector>

#include "fracbound/counting.hpp"
#include "fracbound/detineq.hpp"
#include "fracbound/entropy.hpp"
#include "fracbound/hypergraph.hpp"
#include "fracbound/relent.hpp"

namespace fracbound {

// JSON text <-> core objects.  Shape problems (bad JSON, wrong types, missing
// keys) raise parse_error; mathematically invalid content (negative weights,
// probabilities off 1, ...) surfaces as precondition_error from the object
// constructors.  Serialization is canonical, so round-trips are stable and
// byte-identical.
//
// Formats (all indices 1-based, outcome symbols 0-based):
//   hypergraph   {"n": 3, "edges": [[1,2],[2,3]]}
//   weighting    {"weights": ["1/2", "1/2", 1]}
//   distribution {"alphabet_sizes": [2,2],
//                 "pmf": [{"x": [0,0], "p": "1/3"}, ...]}
//   pair         {"p": <distribution>, "q_marginals": [["1/2","1/2"], ...]}
//   matrix       {"n": 2, "rows": [[2.0,1.0],[1.0,2.0]]}
//   graph        {"n": 4, "edges": [[1,2],[2,3]], "loops": [1]}
//   tensorization{"q_marginals": [...], "g": [0.5, 1.25, ...]}

Hypergraph hypergraph_from_json(const std::string& text);
std::string to_json(const Hypergraph& h);

Weighting weighting_from_json(const std::string& text);
std::string to_json(const Weighting& w);

JointDistribution distribution_from_json(const std::string& text);
std::string to_json(const JointDistribution& dist);

MeasurePair measure_pair_from_json(const std::string& text);
std::string to_json(const MeasurePair& pair);

PosDefMatrix matrix_from_json(const std::string& text);
std::string to_json(const PosDefMatrix& k);

Graph graph_from_json(const std::string& text);
std::string to_json(const Graph& g);

struct TensorizationInput {
  std::vector<std::vector<Rational>> q_marginals;
  std::vector<double> g;
};

TensorizationInput tensorization_input_from_json(const std::string& text);

// Reads a whole file; parse_error when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace fracbound
