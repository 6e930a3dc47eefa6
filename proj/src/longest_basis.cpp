#include "longest_basis.hpp"

#include <algorithm>
#include <numeric>

namespace splinez {

TrailGcdProfile trail_gcd_profile(const EdgeLabeledGraph& g, int a, int b,
                                  const TrailLimits& limits) {
  TrailGcdProfile out;
  for (const Trail& t : trails_between(g, a, b, limits)) {
    out.gcds.push_back(trail_gcd(g, t));
    out.lcm_value = lcm(out.lcm_value, out.gcds.back());
  }
  return out;
}

const Int& TrailGcdCache::pair_lcm(int a, int b) {
  auto key = std::minmax(a, b);
  auto it = cache_.find(key);
  if (it == cache_.end())
    it = cache_.emplace(key, trail_gcd_profile(g_, key.first, key.second, limits_).lcm_value).first;
  return it->second;
}

Int k_value(const EdgeLabeledGraph& g, int vertex, TrailGcdCache& cache) {
  if (vertex < 0 || vertex >= g.vertex_count()) fail(errc::bad_argument, "k_value: vertex out of range");
  for (const auto& comp : connected_components(g)) {
    if (!std::binary_search(comp.begin(), comp.end(), vertex)) continue;
    Int acc = g.multiplier(vertex);
    for (int j : comp) {
      if (j == vertex) continue;
      acc = lcm(acc, gcd(g.multiplier(j), cache.pair_lcm(vertex, j)));
    }
    return acc;
  }
  fail(errc::internal_contradiction, "vertex missing from its component");
}

Int k_value(const EdgeLabeledGraph& g, int vertex, const TrailLimits& limits) {
  TrailGcdCache cache(g, limits);
  return k_value(g, vertex, cache);
}

// Path spec read along a trail, starting from its target endpoint.
static PathSpec trail_path_spec(const EdgeLabeledGraph& g, const Trail& t) {
  std::vector<Int> m, r;
  for (auto it = t.vertices.rbegin(); it != t.vertices.rend(); ++it) m.push_back(g.multiplier(*it));
  for (auto it = t.edges.rbegin(); it != t.edges.rend(); ++it) r.push_back(g.edge(*it).r);
  return PathSpec::make(std::move(m), std::move(r));
}

static Int leading_on_reduction(const EdgeLabeledGraph& gr, int target, const TrailLimits& limits) {
  Int acc = gr.multiplier(target);
  for (const Trail& t : longest_trails_to(gr, target, limits))
    acc = lcm(acc, path_leading_value(trail_path_spec(gr, t), 0));
  return acc;
}

static std::vector<int> below(int index) {
  std::vector<int> zeros(static_cast<size_t>(index));
  std::iota(zeros.begin(), zeros.end(), 0);
  return zeros;
}

Int flowup_leading(const EdgeLabeledGraph& g, int index, const TrailLimits& limits) {
  if (index < 0 || index >= g.vertex_count())
    fail(errc::bad_argument, "flowup_leading: index out of range");
  Reduction red = zero_reduce(g, below(index));
  return leading_on_reduction(red.graph, red.old_to_new[static_cast<size_t>(index)], limits);
}

BuiltFlowUp build_flowup(const EdgeLabeledGraph& g, int index, const TrailLimits& limits) {
  const int n = g.vertex_count();
  if (index < 0 || index >= n) fail(errc::bad_argument, "build_flowup: index out of range");
  Reduction red = zero_reduce(g, below(index));
  const EdgeLabeledGraph& gr = red.graph;
  const int ri = red.old_to_new[static_cast<size_t>(index)];

  Int leading = leading_on_reduction(gr, ri, limits);
  if (leading == 0)
    fail(errc::no_flowup_found, "no flow-up class at position " + std::to_string(index + 1) +
                                    ": the leading entry is forced to zero by an equality edge");

  std::vector<int> comp;
  for (const auto& c : connected_components(gr)) {
    if (std::binary_search(c.begin(), c.end(), ri)) {
      comp = c;
      break;
    }
  }

  TrailGcdCache cache(gr, limits);
  std::vector<Int> f_red(static_cast<size_t>(gr.vertex_count()), Int(0));
  f_red[static_cast<size_t>(ri)] = leading;

  BuiltFlowUp out;
  for (int t : comp) {
    if (t == ri) continue;
    CrtStep step;
    step.vertex = red.new_to_old[static_cast<size_t>(t)];
    std::vector<Congruence> system;
    system.push_back(Congruence::make(0, k_value(gr, t, cache)));
    step.congruences.push_back(CrtTerm{-1, system.back().modulus, system.back().residue});
    for (int s : comp) {
      if (s >= t) break;
      Congruence c = Congruence::make(f_red[static_cast<size_t>(s)], cache.pair_lcm(s, t));
      system.push_back(c);
      step.congruences.push_back(CrtTerm{red.new_to_old[static_cast<size_t>(s)], c.modulus, c.residue});
    }
    Congruence combined{0, 1};
    try {
      combined = crt_system(system);
    } catch (const Error& e) {
      if (e.code() != errc::incompatible) throw;
      fail(errc::internal_contradiction,
           std::string("congruence system for vertex ") + std::to_string(step.vertex + 1) +
               " unexpectedly unsolvable: " + e.what());
    }
    f_red[static_cast<size_t>(t)] = combined.residue;
    step.value = combined.residue;
    out.trace.push_back(std::move(step));
  }

  Spline f(static_cast<size_t>(n), Int(0));
  for (size_t v = 0; v < f_red.size(); ++v) f[static_cast<size_t>(red.new_to_old[v])] = f_red[v];
  SplineCheck check = check_spline(g, f);
  if (!check.ok) fail(errc::internal_contradiction, "constructed class is not a spline: " + check.message);
  out.flowup = FlowUpClass::make(std::move(f), index);
  return out;
}

GeneralBasisResult general_basis(const EdgeLabeledGraph& g, const TrailLimits& limits) {
  GeneralBasisResult out;
  for (int i = 0; i < g.vertex_count(); ++i) {
    BuiltFlowUp f = build_flowup(g, i, limits);
    out.basis.classes.push_back(std::move(f.flowup));
    out.traces.push_back(std::move(f.trace));
  }
  return out;
}

CycleSpec CycleSpec::make(std::vector<Int> m, std::vector<Int> r) {
  if (m.size() < 3) fail(errc::validation, "a cycle needs at least three vertices");
  if (r.size() != m.size())
    fail(errc::validation, "a cycle needs as many edge moduli as vertices");
  for (const Int& v : m)
    if (v < 1) fail(errc::validation, "vertex multiplier must be >= 1, got " + v.get_str());
  for (const Int& v : r)
    if (v < 0) fail(errc::validation, "edge modulus must be >= 0, got " + v.get_str());
  return CycleSpec{std::move(m), std::move(r)};
}

EdgeLabeledGraph CycleSpec::to_graph() const {
  std::vector<Edge> edges;
  const int n = size();
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1, r[static_cast<size_t>(i)]});
  edges.push_back(Edge{n - 1, 0, r[static_cast<size_t>(n - 1)]});
  return EdgeLabeledGraph::make(m, std::move(edges));
}

std::vector<Int> cycle_closed_form(const CycleSpec& c) {
  const int n = c.size();
  std::vector<Int> out(static_cast<size_t>(n));

  // Both directions around the cycle meet at v_1.
  PathSpec forward = PathSpec::make(c.m, {c.r.begin(), c.r.end() - 1});
  std::vector<Int> mb{c.m.front()}, rb;
  for (int j = n - 1; j >= 1; --j) {
    mb.push_back(c.m[static_cast<size_t>(j)]);
    rb.push_back(c.r[static_cast<size_t>(j)]);
  }
  PathSpec backward = PathSpec::make(std::move(mb), std::move(rb));
  out[0] = lcm(path_entry_divisor(forward, 0), path_entry_divisor(backward, 0));

  // Reducing v_1..v_{i-1} leaves the path v_i...v_n with end relabels.
  for (int i = 1; i + 1 < n; ++i) {
    std::vector<Int> m, r;
    m.push_back(lcm(c.m[static_cast<size_t>(i)], c.r[static_cast<size_t>(i - 1)]));
    for (int j = i + 1; j < n - 1; ++j) m.push_back(c.m[static_cast<size_t>(j)]);
    m.push_back(lcm(c.m[static_cast<size_t>(n - 1)], c.r[static_cast<size_t>(n - 1)]));
    for (int j = i; j < n - 1; ++j) r.push_back(c.r[static_cast<size_t>(j)]);
    out[static_cast<size_t>(i)] = path_leading_value(PathSpec::make(std::move(m), std::move(r)), 0);
  }
  out[static_cast<size_t>(n - 1)] =
      lcm(lcm(c.m[static_cast<size_t>(n - 1)], c.r[static_cast<size_t>(n - 2)]),
          c.r[static_cast<size_t>(n - 1)]);
  return out;
}

}  // namespace splinez
