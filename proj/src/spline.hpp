#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace splinez {

// Integer vector indexed by vertices, entry i at vertex v_{i+1}.
using Spline = std::vector<Int>;

struct SplineCheck {
  bool ok = true;
  std::string message;  // names the first violated constraint when !ok
};

// Membership f_i in m_i*Z for every vertex, then f_u == f_v (mod r_e) for
// every edge (exact equality when r_e == 0). Throws errc::length_mismatch.
SplineCheck check_spline(const EdgeLabeledGraph& g, const Spline& f);
bool is_spline(const EdgeLabeledGraph& g, const Spline& f);

// A spline with index-many leading zeros and a nonzero entry right after.
struct FlowUpClass {
  Spline values;
  int index = 0;  // 0-based position of the leading entry

  static FlowUpClass make(Spline values);                  // derives the index
  static FlowUpClass make(Spline values, int index);       // enforces it
  const Int& leading_value() const { return values[static_cast<size_t>(index)]; }
};

struct LeadingTerm {
  int index;  // 0-based
  Int value;
};
LeadingTerm leading_term(const FlowUpClass& f);

// n flow-up classes, class k leading at position k (lower-triangular).
struct FlowUpBasis {
  std::vector<FlowUpClass> classes;
  std::vector<Int> leading_values() const;
};

FlowUpBasis make_flowup_basis(std::vector<Spline> rows);
SplineCheck check_flowup_basis(const EdgeLabeledGraph& g, const FlowUpBasis& b);

// (f_1, 0, ..., 0) with f_1 = lcm(m_1, moduli at v_1); when an equality edge
// at v_1 forces that to 0, falls back to the constant spline lcm(all m).
Spline nontrivial_spline(const EdgeLabeledGraph& g);

// Constant value a = lcm({r_e : e crosses below index}, {m_k : k >= index})
// at every vertex from index on, zeros below. Throws errc::zero_modulus_cut
// when an equality edge crosses the cut.
FlowUpClass constant_flowup(const EdgeLabeledGraph& g, int index);

struct CriterionResult {
  bool ok = true;
  bool inconclusive = false;  // window smaller than the provably sufficient default
  std::optional<Spline> counterexample;
  std::string message;
};

// Bounded check of the basis divisibility criterion: every flow-up spline
// found by exhaustive enumeration with entries up to oracle_bound must have
// its leading entry divisible by the basis leading term at that index.
CriterionResult verify_basis_criterion(const EdgeLabeledGraph& g, const FlowUpBasis& b,
                                       const Int& oracle_bound);

// Coefficients a with f = sum a_k * B_k, by forward substitution on leading
// entries. Inexact division throws errc::not_in_span.
std::vector<Int> express_in_basis(const EdgeLabeledGraph& g, const FlowUpBasis& b, const Spline& f);

}  // namespace splinez
