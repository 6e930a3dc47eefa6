#pragma once

#include <optional>

#include "spline.hpp"

namespace splinez {

// A path graph v_1 - v_2 - ... - v_n given by its vertex multipliers and the
// n-1 edge moduli, with the convention r_0 = 1 where the formulas refer to it.
struct PathSpec {
  std::vector<Int> m;
  std::vector<Int> r;

  static PathSpec make(std::vector<Int> m, std::vector<Int> r);
  // Accepts a graph that is exactly the path v_1-...-v_n in vertex order.
  static std::optional<PathSpec> from_graph(const EdgeLabeledGraph& g);
  EdgeLabeledGraph to_graph() const;
  int size() const { return static_cast<int>(m.size()); }
};

// lcm(m_i, r_{i-1}, gcd(m_{i+1}, r_i), gcd(m_{i+2}, r_i, r_{i+1}), ...,
// gcd(m_n, r_i, ..., r_{n-1})): the minimal leading entry of a flow-up class
// at index (0-based). A result of 0 means the entry is forced to zero by an
// equality edge and no flow-up class exists there.
Int path_leading_value(const PathSpec& p, int index);

// The same lcm without the r_{i-1} term: every spline's entry at index is a
// multiple of this value.
Int path_entry_divisor(const PathSpec& p, int index);

// One congruence-solving step of the construction: entry `value` at vertex t
// satisfies value == 0 (mod s) and value == carry (mod r_prev), value = l * s.
struct PathStep {
  int vertex;  // 0-based t
  Int s;
  Int r_prev;
  Int carry;
  Int l;
  Int value;
};

struct PathFlowUp {
  FlowUpClass flowup;
  std::vector<PathStep> trace;
};

// The flow-up class at index with the minimal leading entry; later entries
// solve the two-congruence systems with the least nonnegative choice.
// Throws errc::no_flowup_found when the leading entry is forced to zero.
PathFlowUp path_flowup(const PathSpec& p, int index);

struct PathBasisResult {
  FlowUpBasis basis;
  std::vector<std::vector<PathStep>> traces;
};

PathBasisResult path_basis(const PathSpec& p);

}  // namespace splinez
