#include "oracle.hpp"

#include <algorithm>

#include "gkm.hpp"
#include "longest_basis.hpp"

namespace splinez {

Int default_window_bound(const EdgeLabeledGraph& g) {
  Int l = lcm_list(g.multipliers());
  for (const Edge& e : g.edges())
    if (e.r != 0) l = lcm(l, e.r);
  return l;
}

EnumerationWindow EnumerationWindow::defaults(const EdgeLabeledGraph& g) {
  return uniform(g, default_window_bound(g));
}

EnumerationWindow EnumerationWindow::uniform(const EdgeLabeledGraph& g, const Int& bound) {
  EnumerationWindow w;
  w.bounds.assign(static_cast<size_t>(g.vertex_count()), bound);
  return w;
}

namespace {

struct Enumerator {
  const EdgeLabeledGraph& g;
  const EnumerationWindow& w;
  const std::function<bool(const Spline&)>& fn;
  const OracleLimits& limits;
  const EnumerateOptions& opts;
  Spline current;
  long long tried = 0;

  void budget() {
    if (++tried > limits.max_candidates)
      fail(errc::size_exceeded, "spline enumeration exceeded the candidate budget of " +
                                    std::to_string(limits.max_candidates));
  }

  // Returns false to abort the whole search (callback asked to stop).
  bool recurse(int v) {
    const int n = g.vertex_count();
    if (v == n) return fn(current);
    if (v < opts.zeros_below) {
      // Pinned to zero; earlier neighbours are pinned too, so no edge check.
      current[static_cast<size_t>(v)] = 0;
      return recurse(v + 1);
    }

    Congruence c = Congruence::make(0, g.multiplier(v));
    for (int e : g.incident_edges(v)) {
      int u = g.other_end(e, v);
      if (u >= v) continue;
      auto next = try_crt_pair(c, Congruence::make(current[static_cast<size_t>(u)], g.edge(e).r));
      if (!next) return true;  // inconsistent prefix
      c = *next;
    }

    const Int& bound = w.bounds[static_cast<size_t>(v)];
    if (c.modulus == 0) {
      if (c.residue < 0 || c.residue > bound) return true;
      if (v == opts.positive_at && c.residue == 0) return true;
      budget();
      current[static_cast<size_t>(v)] = c.residue;
      return recurse(v + 1);
    }
    Int x = c.residue;
    if (v == opts.positive_at && x == 0) x = c.modulus;
    for (; x <= bound; x += c.modulus) {
      budget();
      current[static_cast<size_t>(v)] = x;
      if (!recurse(v + 1)) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_spline(const EdgeLabeledGraph& g, const EnumerationWindow& w,
                     const std::function<bool(const Spline&)>& fn, const OracleLimits& limits,
                     const EnumerateOptions& opts) {
  if (static_cast<int>(w.bounds.size()) != g.vertex_count())
    fail(errc::bad_argument, "enumeration window size differs from the vertex count");
  Enumerator e{g, w, fn, limits, opts, Spline(static_cast<size_t>(g.vertex_count()), Int(0)), 0};
  e.recurse(0);
}

std::vector<Spline> enumerate_splines(const EdgeLabeledGraph& g, const EnumerationWindow& w,
                                      const OracleLimits& limits) {
  std::vector<Spline> out;
  for_each_spline(
      g, w,
      [&](const Spline& f) {
        out.push_back(f);
        return true;
      },
      limits);
  return out;
}

Int minimal_leading(const EdgeLabeledGraph& g, int index, const EnumerationWindow& w,
                    const OracleLimits& limits) {
  if (index < 0 || index >= g.vertex_count())
    fail(errc::bad_argument, "minimal_leading: index out of range");
  // Lexicographic order tries the leading entry in ascending order, so the
  // first completed spline carries the minimum.
  Int best = -1;
  for_each_spline(
      g, w,
      [&](const Spline& f) {
        best = f[static_cast<size_t>(index)];
        return false;
      },
      limits, EnumerateOptions{index, index});
  if (best < 0)
    fail(errc::no_flowup_found, "no flow-up spline at position " + std::to_string(index + 1) +
                                    " within the enumeration window");
  return best;
}

namespace {

std::string vec_str(const Spline& f) {
  std::string s = "(";
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += f[i].get_str();
  }
  return s + ")";
}

CheckOutcome check_entry_divisibility(const EdgeLabeledGraph& g, const EnumerationWindow& w,
                                      const OracleLimits& limits) {
  CheckOutcome out{"entry_divisibility", true, ""};
  const int n = g.vertex_count();
  std::vector<Int> k(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) k[static_cast<size_t>(i)] = k_value(g, i);
  for_each_spline(
      g, w,
      [&](const Spline& f) {
        for (int i = 0; i < n; ++i) {
          if (!Congruence{0, k[static_cast<size_t>(i)]}.holds(f[static_cast<size_t>(i)])) {
            out.ok = false;
            out.detail = "entry " + f[static_cast<size_t>(i)].get_str() + " of spline " + vec_str(f) +
                         " at position " + std::to_string(i + 1) + " is not a multiple of k = " +
                         k[static_cast<size_t>(i)].get_str();
            return false;
          }
        }
        return true;
      },
      limits);
  return out;
}

CheckOutcome check_minimal_leading(const EdgeLabeledGraph& g, const EnumerationWindow& w,
                                   const OracleLimits& limits) {
  CheckOutcome out{"minimal_leading_matches", true, ""};
  for (int i = 0; i < g.vertex_count(); ++i) {
    Int expected = flowup_leading(g, i);
    if (expected == 0) {
      try {
        Int got = minimal_leading(g, i, w, limits);
        out.ok = false;
        out.detail = "position " + std::to_string(i + 1) +
                     ": no flow-up class predicted, but the oracle found leading entry " +
                     got.get_str();
        return out;
      } catch (const Error& e) {
        if (e.code() != errc::no_flowup_found) throw;
        continue;
      }
    }
    try {
      Int got = minimal_leading(g, i, w, limits);
      if (got != expected) {
        out.ok = false;
        out.detail = "position " + std::to_string(i + 1) + ": oracle minimum " + got.get_str() +
                     " != constructed leading value " + expected.get_str();
        return out;
      }
    } catch (const Error& e) {
      if (e.code() != errc::no_flowup_found) throw;
      // A window below the default may hold no witness at all.
      out.ok = false;
      out.detail = "inconclusive: position " + std::to_string(i + 1) +
                   " has no flow-up spline within the window " +
                   w.bounds[static_cast<size_t>(i)].get_str() +
                   "; enlarge the bound (default " + default_window_bound(g).get_str() + ")";
      return out;
    }
  }
  return out;
}

CheckOutcome check_pair_divisibility(const EdgeLabeledGraph& g) {
  CheckOutcome out{"pair_divisibility", true, ""};
  TrailGcdCache cache(g);
  for (const auto& comp : connected_components(g)) {
    for (size_t a = 0; a < comp.size(); ++a) {
      for (size_t b = a + 1; b < comp.size(); ++b) {
        int i = comp[a], t = comp[b];
        Int ki = k_value(g, i, cache), kt = k_value(g, t, cache);
        Int d = gcd(cache.pair_lcm(i, t), kt);
        if (!Congruence{0, d}.holds(ki)) {
          out.ok = false;
          out.detail = "k(" + std::to_string(i + 1) + ") = " + ki.get_str() +
                       " is not a multiple of gcd(pair lcm, k(" + std::to_string(t + 1) +
                       ")) = " + d.get_str();
          return out;
        }
      }
    }
  }
  return out;
}

CheckOutcome check_reduction_equivalence(const EdgeLabeledGraph& g, const EnumerationWindow& w,
                                         const OracleLimits& limits) {
  CheckOutcome out{"reduction_equivalence", true, ""};
  const int n = g.vertex_count();
  for (int z = 1; z < n; ++z) {
    std::vector<int> zeros(static_cast<size_t>(z));
    for (int i = 0; i < z; ++i) zeros[static_cast<size_t>(i)] = i;
    Reduction red = zero_reduce(g, zeros);

    std::vector<Spline> projected;
    for_each_spline(
        g, w,
        [&](const Spline& f) {
          projected.emplace_back(f.begin() + z, f.end());
          return true;
        },
        limits, EnumerateOptions{z, -1});

    EnumerationWindow wr;
    wr.bounds.assign(red.graph.vertex_count(), Int(0));
    for (int v = 0; v < red.graph.vertex_count(); ++v)
      wr.bounds[static_cast<size_t>(v)] = w.bounds[static_cast<size_t>(red.new_to_old[static_cast<size_t>(v)])];
    std::vector<Spline> reduced = enumerate_splines(red.graph, wr, limits);

    if (projected != reduced) {
      out.ok = false;
      out.detail = "reducing " + std::to_string(z) +
                   " zero vertices changes the spline set within the window (" +
                   std::to_string(projected.size()) + " vs " + std::to_string(reduced.size()) +
                   " splines)";
      return out;
    }
  }
  return out;
}

CheckOutcome check_basis_criterion(const EdgeLabeledGraph& g, const Int& bound,
                                   const OracleLimits& limits) {
  CheckOutcome out{"basis_criterion", true, ""};
  try {
    FlowUpBasis basis = general_basis(g).basis;
    (void)limits;
    CriterionResult res = verify_basis_criterion(g, basis, bound);
    if (!res.ok) {
      out.ok = false;
      out.detail = res.message;
    }
  } catch (const Error& e) {
    if (e.code() != errc::no_flowup_found) throw;
    out.name = "basis_criterion";
    out.detail = std::string("skipped: ") + e.what();
  }
  return out;
}

CheckOutcome check_lattice_match(const EdgeLabeledGraph& g) {
  CheckOutcome out{"lattice_match", true, ""};
  try {
    FlowUpBasis basis = general_basis(g).basis;
    if (!lattice_equal(basis_lattice(basis), spline_lattice(g))) {
      out.ok = false;
      out.detail = "flow-up span differs from the GKM kernel projection span";
    }
  } catch (const Error& e) {
    if (e.code() != errc::no_flowup_found) throw;
    out.detail = std::string("skipped: ") + e.what();
  }
  return out;
}

}  // namespace

ValidationReport validate_all(const EdgeLabeledGraph& g, const Int& bound,
                              const OracleLimits& limits) {
  ValidationReport report;
  report.window_bound = bound > 0 ? bound : default_window_bound(g);
  EnumerationWindow w = EnumerationWindow::uniform(g, report.window_bound);

  report.checks.push_back(check_entry_divisibility(g, w, limits));
  report.checks.push_back(check_minimal_leading(g, w, limits));
  report.checks.push_back(check_pair_divisibility(g));
  report.checks.push_back(check_reduction_equivalence(g, w, limits));
  report.checks.push_back(check_basis_criterion(g, report.window_bound, limits));
  report.checks.push_back(check_lattice_match(g));
  for (const CheckOutcome& c : report.checks) report.ok = report.ok && c.ok;
  return report;
}

}  // namespace splinez
