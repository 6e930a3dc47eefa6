#pragma once

#include <map>

#include "path_basis.hpp"

namespace splinez {

// gcds of the edge moduli over all trails between two vertices, and their lcm.
// The lcm is 0 when some trail consists of equality edges only (that trail
// forces exact equality of the two entries).
struct TrailGcdProfile {
  std::vector<Int> gcds;  // one per trail, in trail enumeration order
  Int lcm_value = 1;      // lcm of gcds; 1 when no trail exists
};

TrailGcdProfile trail_gcd_profile(const EdgeLabeledGraph& g, int a, int b,
                                  const TrailLimits& limits = {});

// Memoizes the per-pair trail-gcd lcms of one graph.
class TrailGcdCache {
public:
  TrailGcdCache(const EdgeLabeledGraph& g, const TrailLimits& limits = {}) : g_(g), limits_(limits) {}
  const Int& pair_lcm(int a, int b);

private:
  const EdgeLabeledGraph& g_;
  TrailLimits limits_;
  std::map<std::pair<int, int>, Int> cache_;
};

// k_v = lcm(m_v, { gcd(m_j, lcm of trail gcds between j and v) : j in the
// component of v }): divides the v-entry of every spline.
Int k_value(const EdgeLabeledGraph& g, int vertex, const TrailLimits& limits = {});
Int k_value(const EdgeLabeledGraph& g, int vertex, TrailGcdCache& cache);

// Minimal leading entry of a flow-up class at index: reduce the vertices
// below index to zero, then take the lcm of the path leading values along all
// maximal simple paths ending at the reduced vertex. Returns 0 when the entry
// is forced to zero (no flow-up class exists).
Int flowup_leading(const EdgeLabeledGraph& g, int index, const TrailLimits& limits = {});

struct CrtTerm {
  int source;  // 0-based original vertex already assigned, or -1 for the k_t term
  Int modulus;
  Int residue;
};

struct CrtStep {
  int vertex;  // 0-based original vertex being assigned
  std::vector<CrtTerm> congruences;
  Int value;
};

struct BuiltFlowUp {
  FlowUpClass flowup;
  std::vector<CrtStep> trace;
};

// Flow-up class at index: zeros below index and on reduced components away
// from it; entries assigned in increasing vertex order, each solving the
// congruences against all previously assigned entries (moduli = per-pair
// trail-gcd lcms of the reduced graph) plus divisibility by the reduced k_t.
// Throws errc::no_flowup_found when no class exists at this index.
BuiltFlowUp build_flowup(const EdgeLabeledGraph& g, int index, const TrailLimits& limits = {});

struct GeneralBasisResult {
  FlowUpBasis basis;
  std::vector<std::vector<CrtStep>> traces;
};

GeneralBasisResult general_basis(const EdgeLabeledGraph& g, const TrailLimits& limits = {});

// Cycle v_1 - v_2 - ... - v_n - v_1 with r_i on edge v_i v_{i+1} and the
// closing modulus r_n on v_n v_1.
struct CycleSpec {
  std::vector<Int> m;
  std::vector<Int> r;  // same length as m

  static CycleSpec make(std::vector<Int> m, std::vector<Int> r);
  EdgeLabeledGraph to_graph() const;
  int size() const { return static_cast<int>(m.size()); }
};

// Closed-form minimal leading values on a cycle: both directional path
// formulas at index 1, reduced-path formulas beyond. Entries of 0 mark
// indices where no flow-up class exists.
std::vector<Int> cycle_closed_form(const CycleSpec& c);

}  // namespace splinez
