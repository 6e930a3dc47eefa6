#include "spline.hpp"

#include "oracle.hpp"

namespace splinez {

SplineCheck check_spline(const EdgeLabeledGraph& g, const Spline& f) {
  const int n = g.vertex_count();
  if (static_cast<int>(f.size()) != n)
    fail(errc::length_mismatch, "spline has " + std::to_string(f.size()) + " entries, graph has " +
                                    std::to_string(n) + " vertices");
  for (int v = 0; v < n; ++v) {
    if (!mpz_divisible_p(f[static_cast<size_t>(v)].get_mpz_t(), g.multiplier(v).get_mpz_t()))
      return {false, "vertex " + std::to_string(v + 1) + ": entry " +
                         f[static_cast<size_t>(v)].get_str() + " is not a multiple of " +
                         g.multiplier(v).get_str()};
  }
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    const Int &fu = f[static_cast<size_t>(e.u)], &fv = f[static_cast<size_t>(e.v)];
    std::string where = "edge " + std::to_string(k + 1) + " (v" + std::to_string(e.u + 1) + ",v" +
                        std::to_string(e.v + 1) + ")";
    if (e.r == 0) {
      if (fu != fv)
        return {false, where + ": entries " + fu.get_str() + " and " + fv.get_str() +
                           " must be equal (modulus 0)"};
    } else if (!mpz_congruent_p(fu.get_mpz_t(), fv.get_mpz_t(), e.r.get_mpz_t())) {
      return {false, where + ": entries " + fu.get_str() + " and " + fv.get_str() +
                         " are not congruent mod " + e.r.get_str()};
    }
  }
  return {};
}

bool is_spline(const EdgeLabeledGraph& g, const Spline& f) { return check_spline(g, f).ok; }

FlowUpClass FlowUpClass::make(Spline values) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] != 0) return FlowUpClass{std::move(values), static_cast<int>(i)};
  }
  fail(errc::validation, "a flow-up class must have a nonzero entry");
}

FlowUpClass FlowUpClass::make(Spline values, int index) {
  FlowUpClass f = make(std::move(values));
  if (f.index != index)
    fail(errc::validation, "flow-up class leads at position " + std::to_string(f.index + 1) +
                               ", expected " + std::to_string(index + 1));
  return f;
}

LeadingTerm leading_term(const FlowUpClass& f) { return {f.index, f.leading_value()}; }

std::vector<Int> FlowUpBasis::leading_values() const {
  std::vector<Int> out;
  out.reserve(classes.size());
  for (const FlowUpClass& c : classes) out.push_back(c.leading_value());
  return out;
}

FlowUpBasis make_flowup_basis(std::vector<Spline> rows) {
  FlowUpBasis b;
  for (size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].size() != rows.size())
      fail(errc::validation, "basis row " + std::to_string(k + 1) + " has " +
                                 std::to_string(rows[k].size()) + " entries, expected " +
                                 std::to_string(rows.size()));
    b.classes.push_back(FlowUpClass::make(std::move(rows[k]), static_cast<int>(k)));
  }
  return b;
}

SplineCheck check_flowup_basis(const EdgeLabeledGraph& g, const FlowUpBasis& b) {
  if (static_cast<int>(b.classes.size()) != g.vertex_count())
    return {false, "basis has " + std::to_string(b.classes.size()) + " classes, graph has " +
                       std::to_string(g.vertex_count()) + " vertices"};
  for (size_t k = 0; k < b.classes.size(); ++k) {
    if (b.classes[k].index != static_cast<int>(k))
      return {false, "class " + std::to_string(k + 1) + " leads at position " +
                         std::to_string(b.classes[k].index + 1)};
    SplineCheck c = check_spline(g, b.classes[k].values);
    if (!c.ok) return {false, "class " + std::to_string(k + 1) + ": " + c.message};
  }
  return {};
}

Spline nontrivial_spline(const EdgeLabeledGraph& g) {
  const int n = g.vertex_count();
  if (n < 1) fail(errc::bad_argument, "nontrivial_spline: graph has no vertices");
  Int f1 = g.multiplier(0);
  for (int e : g.incident_edges(0)) f1 = lcm(f1, g.edge(e).r);
  if (f1 != 0) {
    Spline f(static_cast<size_t>(n), Int(0));
    f[0] = f1;
    return f;
  }
  // An equality edge at v_1 zeroes the lcm; the constant spline survives.
  Int a = lcm_list(g.multipliers());
  return Spline(static_cast<size_t>(n), a);
}

FlowUpClass constant_flowup(const EdgeLabeledGraph& g, int index) {
  const int n = g.vertex_count();
  if (index < 0 || index >= n) fail(errc::bad_argument, "constant_flowup: index out of range");
  Int a = 1;
  for (int k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
    if (lo < index && hi >= index) {
      if (e.r == 0)
        fail(errc::zero_modulus_cut, "edge " + std::to_string(k + 1) +
                                         " has modulus 0 and crosses below position " +
                                         std::to_string(index + 1) +
                                         "; no constant flow-up class exists");
      a = lcm(a, e.r);
    }
  }
  for (int v = index; v < n; ++v) a = lcm(a, g.multiplier(v));
  Spline f(static_cast<size_t>(n), Int(0));
  for (int v = index; v < n; ++v) f[static_cast<size_t>(v)] = a;
  return FlowUpClass::make(std::move(f), index);
}

CriterionResult verify_basis_criterion(const EdgeLabeledGraph& g, const FlowUpBasis& b,
                                       const Int& oracle_bound) {
  if (oracle_bound < 1) fail(errc::bad_argument, "verify_basis_criterion: bound must be positive");
  SplineCheck sc = check_flowup_basis(g, b);
  if (!sc.ok) fail(errc::validation, "verify_basis_criterion: " + sc.message);

  CriterionResult res;
  res.inconclusive = oracle_bound < default_window_bound(g);
  EnumerationWindow w = EnumerationWindow::uniform(g, oracle_bound);
  for_each_spline(g, w, [&](const Spline& f) {
    for (size_t i = 0; i < f.size(); ++i) {
      if (f[i] == 0) continue;
      if (!mpz_divisible_p(f[i].get_mpz_t(), b.classes[i].leading_value().get_mpz_t())) {
        res.ok = false;
        res.counterexample = f;
        res.message = "flow-up spline with leading entry " + f[i].get_str() + " at position " +
                      std::to_string(i + 1) + " is not a multiple of " +
                      b.classes[i].leading_value().get_str();
        return false;
      }
      break;
    }
    return true;
  });
  return res;
}

std::vector<Int> express_in_basis(const EdgeLabeledGraph& g, const FlowUpBasis& b, const Spline& f) {
  const int n = g.vertex_count();
  if (static_cast<int>(f.size()) != n)
    fail(errc::length_mismatch, "express_in_basis: vector length mismatch");
  SplineCheck sc = check_flowup_basis(g, b);
  if (!sc.ok) fail(errc::validation, "express_in_basis: " + sc.message);

  Spline rem = f;
  std::vector<Int> coeff(static_cast<size_t>(n), Int(0));
  for (int k = 0; k < n; ++k) {
    const Int& lt = b.classes[static_cast<size_t>(k)].leading_value();
    const Int& top = rem[static_cast<size_t>(k)];
    if (!mpz_divisible_p(top.get_mpz_t(), lt.get_mpz_t()))
      fail(errc::not_in_span, "entry " + top.get_str() + " at position " + std::to_string(k + 1) +
                                  " is not a multiple of the leading term " + lt.get_str());
    Int a;
    mpz_divexact(a.get_mpz_t(), top.get_mpz_t(), lt.get_mpz_t());
    if (a != 0) {
      for (int t = k; t < n; ++t)
        rem[static_cast<size_t>(t)] -= a * b.classes[static_cast<size_t>(k)].values[static_cast<size_t>(t)];
    }
    coeff[static_cast<size_t>(k)] = a;
  }
  for (const Int& x : rem) {
    if (x != 0) fail(errc::internal_contradiction, "nonzero remainder after back-substitution");
  }
  return coeff;
}

}  // namespace splinez
