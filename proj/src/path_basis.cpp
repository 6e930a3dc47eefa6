#include "path_basis.hpp"

#include <algorithm>

namespace splinez {

PathSpec PathSpec::make(std::vector<Int> m, std::vector<Int> r) {
  if (m.empty()) fail(errc::validation, "a path needs at least one vertex");
  if (r.size() + 1 != m.size())
    fail(errc::validation, "a path with " + std::to_string(m.size()) + " vertices needs " +
                               std::to_string(m.size() - 1) + " edge moduli");
  for (const Int& v : m)
    if (v < 0) fail(errc::validation, "vertex multiplier must be >= 0, got " + v.get_str());
  for (const Int& v : r)
    if (v < 0) fail(errc::validation, "edge modulus must be >= 0, got " + v.get_str());
  return PathSpec{std::move(m), std::move(r)};
}

std::optional<PathSpec> PathSpec::from_graph(const EdgeLabeledGraph& g) {
  const int n = g.vertex_count();
  if (n < 1 || g.edge_count() != n - 1) return std::nullopt;
  std::vector<Int> r(static_cast<size_t>(n > 0 ? n - 1 : 0));
  std::vector<char> seen(r.size(), 0);
  for (const Edge& e : g.edges()) {
    int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
    if (hi != lo + 1 || seen[static_cast<size_t>(lo)]) return std::nullopt;
    seen[static_cast<size_t>(lo)] = 1;
    r[static_cast<size_t>(lo)] = e.r;
  }
  return PathSpec{g.multipliers(), std::move(r)};
}

EdgeLabeledGraph PathSpec::to_graph() const {
  std::vector<Edge> edges;
  for (size_t i = 0; i < r.size(); ++i)
    edges.push_back(Edge{static_cast<int>(i), static_cast<int>(i) + 1, r[i]});
  return EdgeLabeledGraph::make(m, std::move(edges));
}

static Int tail_terms_lcm(const PathSpec& p, int index, Int acc) {
  const int n = p.size();
  Int rg = 0;  // gcd of r_index .. r_{j-1}, extended one edge per term
  for (int j = index + 1; j < n; ++j) {
    rg = gcd(rg, p.r[static_cast<size_t>(j - 1)]);
    acc = lcm(acc, gcd(p.m[static_cast<size_t>(j)], rg));
  }
  return acc;
}

Int path_leading_value(const PathSpec& p, int index) {
  const int n = p.size();
  if (index < 0 || index >= n) fail(errc::bad_argument, "path_leading_value: index out of range");
  Int acc = p.m[static_cast<size_t>(index)];
  if (index > 0) acc = lcm(acc, p.r[static_cast<size_t>(index - 1)]);
  return tail_terms_lcm(p, index, std::move(acc));
}

Int path_entry_divisor(const PathSpec& p, int index) {
  const int n = p.size();
  if (index < 0 || index >= n) fail(errc::bad_argument, "path_entry_divisor: index out of range");
  return tail_terms_lcm(p, index, p.m[static_cast<size_t>(index)]);
}

PathFlowUp path_flowup(const PathSpec& p, int index) {
  const int n = p.size();
  Int lead = path_leading_value(p, index);
  if (lead == 0)
    fail(errc::no_flowup_found, "no flow-up class at position " + std::to_string(index + 1) +
                                    ": the leading entry is forced to zero by an equality edge");
  Spline f(static_cast<size_t>(n), Int(0));
  f[static_cast<size_t>(index)] = lead;

  PathFlowUp out;
  for (int t = index + 1; t < n; ++t) {
    const Int& carry = f[static_cast<size_t>(t - 1)];
    const Int& rp = p.r[static_cast<size_t>(t - 1)];
    Int s = path_entry_divisor(p, t);
    Int value;
    if (rp == 0) {
      value = carry;  // equality edge
      if (s != 0 && !mpz_divisible_p(value.get_mpz_t(), s.get_mpz_t()))
        fail(errc::internal_contradiction,
             "carried entry " + value.get_str() + " is not a multiple of " + s.get_str());
      if (s == 0 && value != 0)
        fail(errc::internal_contradiction, "entry pinned to zero but carries " + value.get_str());
    } else if (s == 0) {
      // Entry pinned to zero further down the path; the carry must allow it.
      if (!mpz_divisible_p(carry.get_mpz_t(), rp.get_mpz_t()))
        fail(errc::internal_contradiction,
             "carry " + carry.get_str() + " is incompatible with a zero-pinned entry");
      value = 0;
    } else {
      // l = ((s/g)^-1 mod r/g) * carry/g mod r/g, value = l*s: the least
      // nonnegative solution of value == 0 (mod s), value == carry (mod r).
      Int gd = gcd(rp, s);
      if (!mpz_divisible_p(carry.get_mpz_t(), gd.get_mpz_t()))
        fail(errc::internal_contradiction, "two-congruence step unexpectedly unsolvable: carry " +
                                               carry.get_str() + ", moduli " + rp.get_str() + ", " +
                                               s.get_str());
      Int rg = rp / gd;
      if (rg != 1) {
        Int l = mod_inverse((s / gd) % rg, rg) * ((carry / gd) % rg);
        mpz_mod(l.get_mpz_t(), l.get_mpz_t(), rg.get_mpz_t());
        value = l * s;
      }
    }
    Int l = 0;
    if (s != 0) mpz_divexact(l.get_mpz_t(), value.get_mpz_t(), s.get_mpz_t());
    out.trace.push_back(PathStep{t, s, rp, carry, l, value});
    f[static_cast<size_t>(t)] = value;
  }

  SplineCheck check = check_spline(p.to_graph(), f);
  if (!check.ok) fail(errc::internal_contradiction, "constructed class is not a spline: " + check.message);
  out.flowup = FlowUpClass::make(std::move(f), index);
  return out;
}

PathBasisResult path_basis(const PathSpec& p) {
  PathBasisResult out;
  for (int i = 0; i < p.size(); ++i) {
    PathFlowUp f = path_flowup(p, i);
    out.basis.classes.push_back(std::move(f.flowup));
    out.traces.push_back(std::move(f.trace));
  }
  return out;
}

}  // namespace splinez
