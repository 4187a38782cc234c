#include "specs.hpp"

#include <sstream>

#include "fracbound/errors.hpp"
#include "fracbound/json_io.hpp"

namespace fracbound::cli {

namespace {

// Splits "name:arg" into the name and the raw argument (empty if absent).
std::pair<std::string, std::string> split_spec(const std::string& spec) {
  auto pos = spec.find(':');
  if (pos == std::string::npos) return {spec, ""};
  return {spec.substr(0, pos), spec.substr(pos + 1)};
}

int parse_int_arg(const std::string& arg, const std::string& what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(arg, &used);
    if (used != arg.size()) throw std::invalid_argument(arg);
    return value;
  } catch (const std::exception&) {
    throw parse_error(what + " needs an integer argument, got '" + arg + "'");
  }
}

}  // namespace

Hypergraph parse_collection(const std::string& spec, int n) {
  auto [name, arg] = split_spec(spec);
  if (name == "singletons") return singletons(n);
  if (name == "leave-one-out") return leave_one_out(n);
  if (name == "k-sets") return k_sets(n, parse_int_arg(arg, "k-sets"));
  if (name == "consecutive") return consecutive_sets(n, parse_int_arg(arg, "consecutive"));
  if (name == "file") {
    Hypergraph h = hypergraph_from_json(read_text_file(arg));
    if (h.ground_size() != n)
      throw precondition_error("collection file has ground size " +
                               std::to_string(h.ground_size()) + ", expected " +
                               std::to_string(n));
    return h;
  }
  throw parse_error("unknown collection spec '" + spec + "'");
}

WeightingSpec parse_weighting_spec(const std::string& spec) {
  auto [name, arg] = split_spec(spec);
  if (name == "unit") return {WeightingKind::Unit, ""};
  if (name == "degree-covering") return {WeightingKind::DegreeCovering, ""};
  if (name == "degree-packing") return {WeightingKind::DegreePacking, ""};
  if (name == "lp-optimal") return {WeightingKind::LpOptimal, ""};
  if (name == "file") return {WeightingKind::File, arg};
  throw parse_error("unknown weighting spec '" + spec + "'");
}

Weighting resolve_weighting(const WeightingSpec& spec, const Hypergraph& h) {
  switch (spec.kind) {
    case WeightingKind::Unit:
      return Weighting(std::vector<Rational>(h.edge_count(), Rational(1)));
    case WeightingKind::DegreeCovering:
      return degree_covering(h);
    case WeightingKind::DegreePacking:
      return degree_packing(h);
    case WeightingKind::File: {
      Weighting w = weighting_from_json(read_text_file(spec.path));
      if (w.size() != h.edge_count())
        throw precondition_error("weighting file has " + std::to_string(w.size()) +
                                 " weights for " + std::to_string(h.edge_count()) +
                                 " edges");
      return w;
    }
    case WeightingKind::LpOptimal:
      throw precondition_error("lp-optimal weighting is resolved per bound side");
  }
  throw parse_error("unhandled weighting spec");
}

GroundOrder parse_order(const std::string& spec, int n) {
  if (spec == "natural") return GroundOrder::natural(n);
  std::vector<int> perm;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ','))
    perm.push_back(parse_int_arg(item, "order entry"));
  if (static_cast<int>(perm.size()) != n)
    throw precondition_error("order lists " + std::to_string(perm.size()) +
                             " elements, expected " + std::to_string(n));
  return GroundOrder(std::move(perm));
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational list");
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

Subset parse_subset_list(const std::string& text, int n) {
  Subset s = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int i = parse_int_arg(item, "subset element");
    if (i < 1 || i > n)
      throw precondition_error("subset element " + std::to_string(i) +
                               " outside 1.." + std::to_string(n));
    s |= singleton(i);
  }
  if (s == 0) throw parse_error("empty subset list");
  return s;
}

}  // namespace fracbound::cli
