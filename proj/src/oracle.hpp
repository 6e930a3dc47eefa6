#pragma once

#include <functional>

#include "spline.hpp"

namespace splinez {

// Inclusive per-vertex entry bounds for exhaustive enumeration. The default
// bound, lcm of all vertex multipliers and nonzero edge moduli, suffices for
// minimality checks: every spline reduces entrywise mod that lcm and the
// constructed minimal leading values divide it.
struct EnumerationWindow {
  std::vector<Int> bounds;

  static EnumerationWindow defaults(const EdgeLabeledGraph& g);
  static EnumerationWindow uniform(const EdgeLabeledGraph& g, const Int& bound);
};

Int default_window_bound(const EdgeLabeledGraph& g);

struct OracleLimits {
  long long max_candidates = 10000000;  // entry assignments tried before SizeExceeded
};

struct EnumerateOptions {
  int zeros_below = 0;     // pin the first k entries to zero
  int positive_at = -1;    // skip splines whose entry there is zero
};

// Visits every spline with entries in {0, m_v, 2 m_v, ...} up to the window
// bounds, in lexicographic order. Entries are generated vertex by vertex from
// the congruences against already-assigned neighbours, so only consistent
// prefixes are explored. Return false from the callback to stop early.
void for_each_spline(const EdgeLabeledGraph& g, const EnumerationWindow& w,
                     const std::function<bool(const Spline&)>& fn,
                     const OracleLimits& limits = {}, const EnumerateOptions& opts = {});

std::vector<Spline> enumerate_splines(const EdgeLabeledGraph& g, const EnumerationWindow& w,
                                      const OracleLimits& limits = {});

// Minimum positive entry at index over splines with zeros before index.
// Throws errc::no_flowup_found when the window holds no such spline.
Int minimal_leading(const EdgeLabeledGraph& g, int index, const EnumerationWindow& w,
                    const OracleLimits& limits = {});

struct CheckOutcome {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  Int window_bound;
  std::vector<CheckOutcome> checks;
};

// Runs the full battery against the constructive algorithms on one graph:
// entry divisibility by k_v, oracle minima vs the closed-form leading values,
// pairwise k divisibility, reduction equivalence, the basis criterion for the
// constructed basis, and flow-up span vs GKM kernel span.
// bound <= 0 selects the default window.
ValidationReport validate_all(const EdgeLabeledGraph& g, const Int& bound = 0,
                              const OracleLimits& limits = {});

}  // namespace splinez
