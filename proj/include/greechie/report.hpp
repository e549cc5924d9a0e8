#pragma once

// One-shot analysis of a diagram, rendered as text or JSON. The report only
// carries verdicts computed by the measures and bounds code.

#include "greechie/bounds.hpp"
#include "greechie/hypergraph.hpp"
#include "greechie/measures.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace greechie {

struct AnalysisReport {
  std::string input;
  std::size_t n = 0;
  std::size_t m = 0;
  Classification classification;
  bool square = false;
  std::optional<Integer> determinant;
  SnfResult snf;
  std::size_t unknowns = 0;
  std::optional<ProbabilityMeasure> state;
  std::optional<GroupMeasureWitness> group_measure;
  std::map<std::uint64_t, bool> range_profile;  // empty unless primes were requested
  std::optional<BoundReport> bounds;
};

inline AnalysisReport analyze(const Hypergraph& h, std::string input, const std::vector<std::uint64_t>& primes = {}) {
  AnalysisReport r;
  r.input = std::move(input);
  r.n = h.vertex_count();
  r.m = h.edge_count();
  r.classification = classify(h);
  r.square = r.m == r.n + 1;
  if (r.square) r.determinant = square_system_determinant(h);
  auto analysis = analyze_group_measures(h);
  r.snf = std::move(analysis.snf);
  r.unknowns = analysis.unknowns;
  r.group_measure = std::move(analysis.witness);
  r.state = find_probability_measure(h);
  if (!primes.empty()) r.range_profile = nonconstant_range_profile(h, primes);
  if (r.classification.kind != StructureKind::not_greechie && r.n >= 3) r.bounds = check_bounds(h);
  return r;
}

namespace detail {

// Invariant factors other than 1, as strings.
inline std::vector<std::string> nontrivial_factors(const SnfResult& snf) {
  std::vector<std::string> out;
  for (const Integer& d : snf.invariant_factors)
    if (d != 1) out.push_back(to_string(d));
  return out;
}

}  // namespace detail

/// Big integers and rationals are emitted as strings so no precision is lost.
inline nlohmann::ordered_json to_json(const AnalysisReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["input"] = r.input;
  j["vertices"] = r.n;
  j["edges"] = r.m;

  ordered_json cls;
  cls["kind"] = std::string(to_string(r.classification.kind));
  cls["min_cycle_order"] =
      r.classification.min_cycle_order ? ordered_json(*r.classification.min_cycle_order) : ordered_json(nullptr);
  ordered_json violations = ordered_json::array();
  for (const auto& v : r.classification.violations) violations.push_back(v.describe());
  cls["violations"] = violations;
  j["classification"] = cls;

  j["square"] = r.square;
  j["determinant"] = r.determinant ? ordered_json(to_string(*r.determinant)) : ordered_json(nullptr);

  ordered_json snf;
  snf["rank"] = r.snf.rank;
  snf["unknowns"] = r.unknowns;
  snf["all_units"] = r.snf.all_units();
  snf["nontrivial_factors"] = detail::nontrivial_factors(r.snf);
  j["smith_normal_form"] = snf;

  ordered_json state;
  state["exists"] = r.state.has_value();
  if (r.state) {
    ordered_json values = ordered_json::array();
    for (const Rational& x : r.state->values) values.push_back(to_string(x));
    state["values"] = values;
  }
  j["state"] = state;

  ordered_json gm;
  gm["exists"] = r.group_measure.has_value();
  if (r.group_measure) {
    gm["modulus"] = to_string(r.group_measure->p);
    gm["sum"] = to_string(r.group_measure->g);
    ordered_json values = ordered_json::array();
    for (const Integer& x : r.group_measure->values) values.push_back(to_string(x));
    gm["values"] = values;
  }
  j["group_measure"] = gm;

  if (!r.range_profile.empty()) {
    ordered_json profile;
    for (const auto& [p, nonconstant] : r.range_profile) profile[std::to_string(p)] = nonconstant;
    j["nonconstant_range"] = profile;
  }

  if (r.bounds) {
    ordered_json b;
    b["satisfied"] = r.bounds->satisfied;
    ordered_json checks = ordered_json::array();
    for (const BoundCheck& c : r.bounds->checks) {
      ordered_json x;
      x["kind"] = std::string(to_string(c.kind));
      x["limit"] = c.limit ? ordered_json(*c.limit) : ordered_json(nullptr);
      x["applicable"] = c.applicable;
      x["satisfied"] = c.satisfied;
      checks.push_back(x);
    }
    b["checks"] = checks;
    if (!r.bounds->applicability_note.empty()) b["note"] = r.bounds->applicability_note;
    j["bounds"] = b;
  }
  return j;
}

inline void print_report(const AnalysisReport& r, std::ostream& out) {
  out << "input: " << r.input << "\n";
  out << "vertices: " << r.n << "  edges: " << r.m << "\n";
  out << "class: " << to_string(r.classification.kind);
  if (r.classification.min_cycle_order)
    out << " (min cycle order " << *r.classification.min_cycle_order << ")";
  else
    out << " (no cycles)";
  out << "\n";
  for (const auto& v : r.classification.violations) out << "  violation: " << v.describe() << "\n";
  if (r.determinant) out << "determinant: " << to_string(*r.determinant) << "\n";
  out << "smith form: rank " << r.snf.rank << " of " << r.unknowns;
  const auto factors = detail::nontrivial_factors(r.snf);
  if (factors.empty()) {
    out << ", all invariant factors 1\n";
  } else {
    out << ", nontrivial factors";
    for (const auto& f : factors) out << " " << f;
    out << "\n";
  }
  if (r.state) {
    out << "state: yes [";
    for (std::size_t i = 0; i < r.state->values.size(); ++i) out << (i ? " " : "") << to_string(r.state->values[i]);
    out << "]\n";
  } else {
    out << "state: none\n";
  }
  if (r.group_measure) {
    out << "group-valued measure: yes, Z_" << to_string(r.group_measure->p) << " with sum "
        << to_string(r.group_measure->g) << " [";
    for (std::size_t i = 0; i < r.group_measure->values.size(); ++i)
      out << (i ? " " : "") << to_string(r.group_measure->values[i]);
    out << "]\n";
  } else {
    out << "group-valued measure: none\n";
  }
  for (const auto& [p, nonconstant] : r.range_profile)
    out << "nonconstant measure mod " << p << ": " << (nonconstant ? "yes" : "no") << "\n";
  if (r.bounds) {
    for (const BoundCheck& c : r.bounds->checks) {
      out << "bound " << to_string(c.kind) << ": ";
      if (!c.applicable)
        out << "not applicable";
      else
        out << (c.satisfied ? "ok" : "violated");
      if (c.limit) out << " (m <= " << *c.limit << ")";
      out << "\n";
    }
    if (!r.bounds->applicability_note.empty()) out << "  " << r.bounds->applicability_note << "\n";
  }
}

}  // namespace greechie
