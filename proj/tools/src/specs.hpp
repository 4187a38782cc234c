#pragma once

#include <string>
#include <vector>

#include "fracbound/hypergraph.hpp"
#include "fracbound/order.hpp"
#include "fracbound/rational.hpp"
#include "fracbound/subset.hpp"

// Mini-languages for the CLI:
//   collection: "k-sets:K" | "singletons" | "leave-one-out" | "consecutive:K"
//               | "file:PATH"
//   weighting:  "unit" | "degree-covering" | "degree-packing" | "lp-optimal"
//               | "file:PATH"
//   order:      "natural" | comma-separated permutation like "3,1,2"
namespace fracbound::cli {

Hypergraph parse_collection(const std::string& spec, int n);

enum class WeightingKind { Unit, DegreeCovering, DegreePacking, LpOptimal, File };

struct WeightingSpec {
  WeightingKind kind = WeightingKind::Unit;
  std::string path;  // for File
};

WeightingSpec parse_weighting_spec(const std::string& spec);

// Resolves every kind except LpOptimal (which needs per-side costs).
Weighting resolve_weighting(const WeightingSpec& spec, const Hypergraph& h);

GroundOrder parse_order(const std::string& spec, int n);

// "1,1/2,3" -> rationals; "1,3" -> subset (1-based elements).
std::vector<Rational> parse_rational_list(const std::string& text);
Subset parse_subset_list(const std::string& text, int n);

}  // namespace fracbound::cli
