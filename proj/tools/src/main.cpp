// fracbound: fractional covering/packing bounds for submodular set functions
// (joint entropy, log-determinants, divergences) plus the derived counting
// and determinant inequalities, with exact-rational weight handling.
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracbound/counting.hpp"
#include "fracbound/detineq.hpp"
#include "fracbound/entropy.hpp"
#include "fracbound/errors.hpp"
#include "fracbound/json_io.hpp"
#include "fracbound/lp.hpp"
#include "fracbound/relent.hpp"
#include "fracbound/setfn.hpp"
#include "report.hpp"
#include "specs.hpp"

namespace fracbound::cli {
namespace {

struct BoundsOpts {
  std::string file, collection = "singletons", weighting = "unit";
  std::string order = "natural", form = "strong", log_base = "e";
  std::optional<std::string> json_path;
};

struct LpCoverOpts {
  std::string file, costs;
  std::optional<std::string> json_path;
};

struct CountOpts {
  std::string file, target = "independent-sets";
  bool with_exact = false;
  std::optional<std::string> json_path;
};

struct DetineqOpts {
  std::string file, collection = "singletons", weighting = "degree-covering";
  std::string split;
  int level = 0;
  std::optional<std::string> json_path;
};

struct CheckOpts {
  std::string kind, file, collection, weighting = "unit";
  std::optional<std::string> json_path;
};

std::string join_rationals(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j) out += ",";
    out += rational_to_string(values[j]);
  }
  return out;
}

std::string subset_to_string(Subset s) {
  std::string out;
  for (int i : subset_elements(s)) {
    if (!out.empty()) out += ",";
    out += std::to_string(i);
  }
  return out.empty() ? "-" : out;
}

// Clamp the harmless negative rounding residue of a conditional entropy
// before it becomes an (invalid) negative LP cost.
Rational nonnegative_cost(double value) {
  if (value < 0 && value > -kTolerance) value = 0;
  Rational r(value);
  r.canonicalize();
  return r;
}

void explain_neither(const Hypergraph& h, const Weighting& w) {
  const auto sums = incident_sums(h, w);
  int below = 0, above = 0;
  for (int i = 1; i <= h.ground_size(); ++i) {
    if (!below && sums[i - 1] < 1) below = i;
    if (!above && sums[i - 1] > 1) above = i;
  }
  throw precondition_error(
      "weighting is neither a covering nor a packing: element " +
      std::to_string(below) + " has incident weight " +
      rational_to_string(sums[below - 1]) + " < 1 while element " +
      std::to_string(above) + " has " + rational_to_string(sums[above - 1]) +
      " > 1");
}

int run_bounds(const BoundsOpts& opts) {
  const JointDistribution dist = distribution_from_json(read_text_file(opts.file));
  const int n = dist.n();
  const Hypergraph h = parse_collection(opts.collection, n);
  const GroundOrder order = parse_order(opts.order, n);
  const auto f = entropy_set_function(dist);
  const double factor =
      units_factor(opts.log_base == "2" ? EntropyUnits::Bits : EntropyUnits::Nats);
  if (opts.log_base != "e" && opts.log_base != "2")
    throw parse_error("--log-base must be e or 2");

  Report rep("bounds");
  rep.add_input("distribution", opts.file);
  rep.add_input("collection", opts.collection);
  rep.add_input("weighting", opts.weighting);
  rep.add_input("order", opts.order);
  rep.add_input("form", opts.form);
  rep.add_input("log_base", opts.log_base);

  const double exact = f(full_set(n));
  std::optional<double> lower, upper;
  const bool strong = opts.form == "strong";

  if (opts.form == "degree") {
    const auto db = degree_form_bounds(f, h, order);
    lower = db.lower;
    upper = db.upper;
    rep.add_result("lower-weighting", join_rationals(db.lower_weighting.values()));
    rep.add_result("upper-weighting", join_rationals(db.upper_weighting.values()));
    rep.add_result("quasiregular", std::string(is_quasiregular(h) ? "yes" : "no"));
  } else if (opts.form == "weak" || strong) {
    const WeightingSpec spec = parse_weighting_spec(opts.weighting);
    if (spec.kind == WeightingKind::LpOptimal) {
      // Per-side optimum: the bound value itself is the LP objective, so
      // minimizing (maximizing) it over coverings (packings) is exactly the
      // best bound this form can produce on this collection.
      std::vector<Rational> up_costs, lo_costs;
      for (std::size_t j = 0; j < h.edge_count(); ++j) {
        const Subset s = h.edge(j);
        const Subset t = complement_in(s, n) & ~order.after(s);
        up_costs.push_back(nonnegative_cost(
            strong ? conditional(f, s, order.before(s)) : f(s)));
        lo_costs.push_back(nonnegative_cost(
            strong ? conditional(f, s, t) : conditional(f, s, complement_in(s, n))));
      }
      const auto [wu, up_value] = optimal_fractional_covering(h, up_costs);
      const auto [wl, lo_value] = optimal_fractional_packing(h, lo_costs);
      upper = strong ? strong_upper_bound(f, h, wu, order) : weak_upper_bound(f, h, wu);
      lower = strong ? strong_lower_bound(f, h, wl, order) : weak_lower_bound(f, h, wl);
      rep.add_result("upper-weighting", join_rationals(wu.values()));
      rep.add_result("lower-weighting", join_rationals(wl.values()));
    } else {
      const Weighting w = resolve_weighting(spec, h);
      const WeightingClass cls = classify_weighting(h, w);
      rep.add_result("classification", std::string(to_string(cls)));
      rep.add_result("total-weight", rational_to_string(w.total()));
      switch (cls) {
        case WeightingClass::Partition:
          upper = strong ? strong_upper_bound(f, h, w, order) : weak_upper_bound(f, h, w);
          lower = strong ? strong_lower_bound(f, h, w, order) : weak_lower_bound(f, h, w);
          break;
        case WeightingClass::Covering:
          upper = strong ? strong_upper_bound(f, h, w, order) : weak_upper_bound(f, h, w);
          break;
        case WeightingClass::Packing:
          lower = strong ? strong_lower_bound(f, h, w, order) : weak_lower_bound(f, h, w);
          break;
        case WeightingClass::Neither:
          explain_neither(h, w);
      }
    }
  } else {
    throw parse_error("--form must be weak, strong, or degree");
  }

  rep.add_result("exact", exact * factor);
  if (lower) {
    rep.add_result("lower", *lower * factor);
    rep.add_result("lower-gap", (exact - *lower) * factor);
  }
  if (upper) {
    rep.add_result("upper", *upper * factor);
    rep.add_result("upper-gap", (*upper - exact) * factor);
  }
  if (lower) rep.assert_le("lower<=exact", *lower, exact);
  if (upper) rep.assert_le("exact<=upper", exact, *upper);

  rep.emit(opts.json_path);
  return rep.exit_code();
}

int run_lp_cover(const LpCoverOpts& opts) {
  const Hypergraph h = hypergraph_from_json(read_text_file(opts.file));
  std::vector<Rational> costs = opts.costs.empty()
                                    ? std::vector<Rational>(h.edge_count(), Rational(1))
                                    : parse_rational_list(opts.costs);
  if (costs.size() != h.edge_count())
    throw precondition_error("got " + std::to_string(costs.size()) + " costs for " +
                             std::to_string(h.edge_count()) + " edges");

  const auto [w, total] = optimal_fractional_covering(h, costs);

  Report rep("lp-cover");
  rep.add_input("hypergraph", opts.file);
  rep.add_input("costs", opts.costs.empty() ? "unit" : opts.costs);
  rep.add_result("status", std::string("optimal"));
  rep.add_result("optimal-cost", rational_to_string(total));
  rep.add_result("weighting", join_rationals(w.values()));
  const WeightingClass cls = classify_weighting(h, w);
  rep.add_result("classification", std::string(to_string(cls)));
  rep.assert_true("result-is-covering", cls == WeightingClass::Covering ||
                                            cls == WeightingClass::Partition);
  rep.emit(opts.json_path);
  return rep.exit_code();
}

int run_count(const CountOpts& opts) {
  const Graph g = graph_from_json(read_text_file(opts.file));

  Report rep("count");
  rep.add_input("graph", opts.file);
  rep.add_input("target", opts.target);
  rep.add_input("with_exact", opts.with_exact ? "true" : "false");

  CountBound bound;
  std::optional<std::uint64_t> exact;
  const auto colon = opts.target.find(':');
  const std::string kind = opts.target.substr(0, colon == std::string::npos ? opts.target.size() : colon);
  const std::string arg = colon == std::string::npos ? "" : opts.target.substr(colon + 1);

  if (kind == "independent-sets") {
    bound = independent_set_bound(g);
    if (opts.with_exact) exact = independent_sets_exact(g);
  } else if (kind == "colorings") {
    int r = 0;
    try {
      r = std::stoi(arg);
    } catch (const std::exception&) {
      throw parse_error("colorings needs an integer color count");
    }
    if (r < 2) throw precondition_error("coloring bound needs at least 2 colors");
    bound = coloring_bound(g, r);
    if (opts.with_exact) exact = hom_count_exact(g, complete_graph(r));
  } else if (kind == "hom") {
    const Graph f = graph_from_json(read_text_file(arg));
    bound = hom_bound(g, f);
    if (opts.with_exact) exact = hom_count_exact(g, f);
  } else {
    throw parse_error("unknown count target '" + opts.target + "'");
  }

  rep.add_result("bound-log2", bound.log2_value);
  rep.add_result("bound", bound.value);
  if (exact) {
    rep.add_result("exact", static_cast<double>(*exact));
    if (*exact > 0) {
      rep.add_result("ratio-bound-over-exact",
                     std::exp2(bound.log2_value - std::log2(static_cast<double>(*exact))));
      rep.assert_le("exact<=bound (log2)", std::log2(static_cast<double>(*exact)),
                    bound.log2_value);
    } else {
      rep.assert_true("exact<=bound (log2)", true);
    }
  }
  rep.emit(opts.json_path);
  return rep.exit_code();
}

int run_detineq(const DetineqOpts& opts) {
  const PosDefMatrix k = matrix_from_json(read_text_file(opts.file));
  const int n = k.size();
  const Hypergraph h = parse_collection(opts.collection, n);
  const Weighting w = resolve_weighting(parse_weighting_spec(opts.weighting), h);

  Report rep("detineq");
  rep.add_input("matrix", opts.file);
  rep.add_input("collection", opts.collection);
  rep.add_input("weighting", opts.weighting);

  const auto bounds = determinant_bounds(k, h, w);
  rep.add_result("log-lower", bounds.log_lower);
  rep.add_result("log-det", bounds.log_det);
  rep.add_result("log-upper", bounds.log_upper);
  rep.add_result("lower", bounds.lower);
  rep.add_result("det", bounds.det);
  rep.add_result("upper", bounds.upper);
  rep.assert_le("lower<=det (log)", bounds.log_lower, bounds.log_det);
  rep.assert_le("det<=upper (log)", bounds.log_det, bounds.log_upper);

  if (n >= 2 && n <= kEnumerationGuard) {
    const Subset split = opts.split.empty() ? full_set((n + 1) / 2)
                                            : parse_subset_list(opts.split, n);
    const int level = opts.level > 0 ? opts.level : std::min(2, n);
    const auto classical = classical_determinant_inequalities(k, split, level);
    rep.add_result("diagonal-product (log)", classical.diagonal_rhs);
    rep.add_result("split-subset", subset_to_string(classical.split_subset));
    rep.add_result("split-product (log)", classical.split_rhs);
    rep.add_result("level", static_cast<double>(classical.level));
    rep.add_result("level-sum (log)", classical.level_rhs);
    rep.assert_le("det<=diagonal-product", classical.log_det, classical.diagonal_rhs);
    rep.assert_le("det<=split-product", classical.log_det, classical.split_rhs);
    rep.assert_le("level-bound", classical.level_lhs, classical.level_rhs);
  } else {
    rep.add_result("classical", std::string("skipped (size beyond enumeration guard)"));
  }
  rep.emit(opts.json_path);
  return rep.exit_code();
}

int run_check(const CheckOpts& opts) {
  Report rep("check");
  rep.add_input("kind", opts.kind);
  if (!opts.file.empty()) rep.add_input("input", opts.file);

  if (opts.kind == "submodular:distribution" || opts.kind == "submodular:matrix" ||
      opts.kind == "supermodular:pair") {
    SetFunction<double> f;
    std::string property;
    if (opts.kind == "submodular:distribution") {
      f = entropy_set_function(distribution_from_json(read_text_file(opts.file)));
      property = "submodular";
    } else if (opts.kind == "submodular:matrix") {
      f = logdet_set_function(matrix_from_json(read_text_file(opts.file)));
      property = "submodular";
    } else {
      f = negated_divergence_set_function(
          measure_pair_from_json(read_text_file(opts.file)));
      property = "supermodular";  // of the divergence = submodular of its negation
    }
    const auto witness = is_submodular(f);
    if (!witness.submodular) {
      rep.add_result("witness-s", subset_to_string(witness.s));
      rep.add_result("witness-t", subset_to_string(witness.t));
      rep.add_result("violation", witness.violation);
    }
    rep.assert_true(property, witness.submodular);
  } else if (opts.kind == "witness") {
    const auto wit = non_submodular_conditional_entropy_example();
    const auto f = prefix_conditional_entropy_set_function(wit.dist, wit.order);
    const double given_rest =
        conditional_entropy(wit.dist, make_subset({4}), make_subset({1, 2, 3}));
    const double given_pair =
        conditional_entropy(wit.dist, make_subset({4}), make_subset({1, 3}));
    const double delta = f(wit.s | wit.t) + f(wit.s & wit.t) - f(wit.s) - f(wit.t);
    rep.add_result("H(x4|x1x2x3)", given_rest);
    rep.add_result("H(x4|x1x3)", given_pair);
    rep.add_result("witness-s", subset_to_string(wit.s));
    rep.add_result("witness-t", subset_to_string(wit.t));
    rep.add_result("witness-violation", delta);
    rep.assert_eq("H(x4|x1x2x3)==0", given_rest, 0.0);
    rep.assert_eq("H(x4|x1x3)==ln2", given_pair, std::log(2.0));
    rep.assert_true("witness-pair-violates", delta > kTolerance);
    rep.assert_true("non-submodularity-found",
                    !is_submodular(f).submodular);
  } else if (opts.kind == "duality") {
    const JointDistribution dist = distribution_from_json(read_text_file(opts.file));
    const Hypergraph h =
        parse_collection(opts.collection.empty() ? "singletons" : opts.collection,
                         dist.n());
    const Weighting w = resolve_weighting(parse_weighting_spec(opts.weighting), h);
    const auto pair = gap_duality_pair(entropy_set_function(dist), h, w);
    rep.add_result("normalized-upper-gap", pair.upper_side);
    rep.add_result("normalized-lower-gap-dual", pair.lower_side);
    rep.assert_eq("gap-duality", pair.upper_side, pair.lower_side);
  } else if (opts.kind == "monotonicity") {
    const JointDistribution dist = distribution_from_json(read_text_file(opts.file));
    const auto seqs = uniform_gap_sequences(entropy_set_function(dist));
    rep.add_result("upper-gaps", nlohmann::ordered_json(seqs.upper));
    rep.add_result("lower-gaps", nlohmann::ordered_json(seqs.lower));
    bool upper_mono = true, lower_mono = true;
    for (std::size_t i = 1; i < seqs.upper.size(); ++i) {
      upper_mono = upper_mono && seqs.upper[i] <= seqs.upper[i - 1] + kTolerance;
      lower_mono = lower_mono && seqs.lower[i] <= seqs.lower[i - 1] + kTolerance;
    }
    rep.assert_true("upper-gaps-nonincreasing", upper_mono);
    rep.assert_true("lower-gaps-nonincreasing", lower_mono);
    rep.assert_eq("upper-terminal-zero", seqs.upper.back(), 0.0);
    rep.assert_eq("lower-terminal-zero", seqs.lower.back(), 0.0);
  } else if (opts.kind == "tensorization") {
    const TensorizationInput input =
        tensorization_input_from_json(read_text_file(opts.file));
    const int n = static_cast<int>(input.q_marginals.size());
    const Hypergraph h = parse_collection(
        opts.collection.empty() ? "leave-one-out" : opts.collection, n);
    const auto check = tensorization_check(input.q_marginals, input.g, h);
    rep.add_result("lhs (Ent)", check.lhs);
    rep.add_result("rhs (averaged partial Ent)", check.rhs);
    rep.add_result("regularity", static_cast<double>(check.regularity));
    rep.assert_le("tensorization", check.lhs, check.rhs);
  } else {
    throw parse_error("unknown check kind '" + opts.kind + "'");
  }

  rep.emit(opts.json_path);
  return rep.exit_code();
}

int dispatch(int argc, char** argv) {
  CLI::App app{"fractional covering/packing bounds for submodular set functions"};
  app.require_subcommand(1);

  BoundsOpts bounds;
  auto* cmd_bounds = app.add_subcommand(
      "bounds", "entropy sandwich for a joint distribution");
  cmd_bounds->add_option("distribution", bounds.file, "distribution JSON file")
      ->required();
  cmd_bounds->add_option("--collection", bounds.collection, "collection spec");
  cmd_bounds->add_option("--weighting", bounds.weighting, "weighting spec");
  cmd_bounds->add_option("--order", bounds.order, "order spec");
  cmd_bounds->add_option("--form", bounds.form, "weak | strong | degree");
  cmd_bounds->add_option("--log-base", bounds.log_base, "e | 2");
  cmd_bounds->add_option("--json", bounds.json_path, "write JSON report (- for stdout)");

  LpCoverOpts lp;
  auto* cmd_lp = app.add_subcommand("lp-cover", "optimal fractional covering (exact)");
  cmd_lp->add_option("hypergraph", lp.file, "hypergraph JSON file")->required();
  cmd_lp->add_option("--costs", lp.costs, "comma-separated rational edge costs");
  cmd_lp->add_option("--json", lp.json_path, "write JSON report (- for stdout)");

  CountOpts count;
  auto* cmd_count = app.add_subcommand("count", "counting bounds via entropy");
  cmd_count->add_option("graph", count.file, "graph JSON file")->required();
  cmd_count->add_option("--target", count.target,
                        "independent-sets | colorings:R | hom:FILE");
  cmd_count->add_flag("--with-exact", count.with_exact, "also run the exact oracle");
  cmd_count->add_option("--json", count.json_path, "write JSON report (- for stdout)");

  DetineqOpts det;
  auto* cmd_det = app.add_subcommand("detineq", "determinant sandwich and classics");
  cmd_det->add_option("matrix", det.file, "matrix JSON file")->required();
  cmd_det->add_option("--collection", det.collection, "collection spec");
  cmd_det->add_option("--weighting", det.weighting, "weighting spec");
  cmd_det->add_option("--split", det.split, "subset for the split inequality");
  cmd_det->add_option("--level", det.level, "subset size for the level inequality");
  cmd_det->add_option("--json", det.json_path, "write JSON report (- for stdout)");

  CheckOpts check;
  auto* cmd_check = app.add_subcommand("check", "structural verifications");
  cmd_check
      ->add_option("kind", check.kind,
                   "submodular:distribution | submodular:matrix | supermodular:pair"
                   " | witness | duality | monotonicity | tensorization")
      ->required();
  cmd_check->add_option("input", check.file, "input JSON file (kind-dependent)");
  cmd_check->add_option("--collection", check.collection, "collection spec");
  cmd_check->add_option("--weighting", check.weighting, "weighting spec");
  cmd_check->add_option("--json", check.json_path, "write JSON report (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (app.got_subcommand(cmd_bounds)) return run_bounds(bounds);
  if (app.got_subcommand(cmd_lp)) return run_lp_cover(lp);
  if (app.got_subcommand(cmd_count)) return run_count(count);
  if (app.got_subcommand(cmd_det)) return run_detineq(det);
  if (app.got_subcommand(cmd_check)) return run_check(check);
  return 2;
}

}  // namespace
}  // namespace fracbound::cli

int main(int argc, char** argv) {
  try {
    return fracbound::cli::dispatch(argc, argv);
  } catch (const fracbound::parse_error& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const fracbound::precondition_error& e) {
    std::fprintf(stderr, "precondition violated: %s\n", e.what());
    return 3;
  } catch (const fracbound::guard_error& e) {
    std::fprintf(stderr, "resource guard: %s\n", e.what());
    return 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
