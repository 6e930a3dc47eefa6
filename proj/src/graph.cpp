#include "graph.hpp"

#include <algorithm>
#include <functional>

#include "report.hpp"

namespace splinez {

EdgeLabeledGraph EdgeLabeledGraph::make(std::vector<Int> multipliers, std::vector<Edge> edges) {
  const int n = static_cast<int>(multipliers.size());
  // Multiplier 0 is legal here: zero_reduce folds an equality edge into the
  // surviving neighbour as lcm(m, 0) = 0, pinning that vertex to zero.
  // Input documents are held to m >= 1 by parse_graph.
  for (int i = 0; i < n; ++i) {
    if (multipliers[static_cast<size_t>(i)] < 0)
      fail(errc::validation, "vertex " + std::to_string(i + 1) + ": multiplier must be >= 0, got " +
                                 multipliers[static_cast<size_t>(i)].get_str());
  }
  for (size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      fail(errc::validation,
           "edge " + std::to_string(k + 1) + ": vertex index out of range 1.." + std::to_string(n));
    if (e.u == e.v) fail(errc::validation, "edge " + std::to_string(k + 1) + ": self-loops are not allowed");
    if (e.r < 0)
      fail(errc::validation,
           "edge " + std::to_string(k + 1) + ": modulus must be >= 0, got " + e.r.get_str());
  }
  EdgeLabeledGraph g;
  g.m_ = std::move(multipliers);
  g.edges_ = std::move(edges);
  g.incident_.assign(static_cast<size_t>(n), {});
  for (size_t k = 0; k < g.edges_.size(); ++k) {
    g.incident_[static_cast<size_t>(g.edges_[k].u)].push_back(static_cast<int>(k));
    g.incident_[static_cast<size_t>(g.edges_[k].v)].push_back(static_cast<int>(k));
  }
  return g;
}

int EdgeLabeledGraph::other_end(int e, int v) const {
  const Edge& ed = edges_[static_cast<size_t>(e)];
  return ed.u == v ? ed.v : ed.u;
}

EdgeLabeledGraph parse_graph(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(errc::parse_error, "$: expected an object");
  if (!doc.contains("m")) fail(errc::parse_error, "$.m: missing");
  if (!doc["m"].is_array()) fail(errc::parse_error, "$.m: expected an array");

  std::vector<Int> m;
  for (size_t i = 0; i < doc["m"].size(); ++i) {
    const std::string path = "$.m[" + std::to_string(i) + "]";
    Int v = int_from_json(doc["m"][i], path);
    if (v < 1) fail(errc::validation, path + ": vertex multiplier must be >= 1, got " + v.get_str());
    m.push_back(std::move(v));
  }

  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) fail(errc::parse_error, "$.edges: expected an array");
    for (size_t k = 0; k < doc["edges"].size(); ++k) {
      const auto& row = doc["edges"][k];
      const std::string path = "$.edges[" + std::to_string(k) + "]";
      if (!row.is_array() || row.size() != 3)
        fail(errc::parse_error, path + ": expected a [u, v, r] triple");
      Int u = int_from_json(row[0], path + "[0]");
      Int v = int_from_json(row[1], path + "[1]");
      Int r = int_from_json(row[2], path + "[2]");
      if (!u.fits_sint_p() || !v.fits_sint_p())
        fail(errc::parse_error, path + ": vertex index out of range");
      edges.push_back(Edge{static_cast<int>(u.get_si()) - 1, static_cast<int>(v.get_si()) - 1, r});
    }
  }
  return EdgeLabeledGraph::make(std::move(m), std::move(edges));
}

namespace {

struct TrailSearch {
  const EdgeLabeledGraph& g;
  const TrailLimits& limits;
  std::vector<Trail>& out;
  std::vector<char> used_edge;
  Trail cur;
  long long steps = 0;

  void record(Trail t) {
    if (static_cast<long long>(out.size()) >= limits.max_trails)
      fail(errc::size_exceeded,
           "trail enumeration exceeded the cap of " + std::to_string(limits.max_trails));
    out.push_back(std::move(t));
  }

  void step_budget() {
    if (++steps > limits.max_steps)
      fail(errc::size_exceeded,
           "trail search exceeded the step budget of " + std::to_string(limits.max_steps));
  }
};

}  // namespace

std::vector<Trail> trails_between(const EdgeLabeledGraph& g, int source, int target,
                                  const TrailLimits& limits) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n || target < 0 || target >= n)
    fail(errc::bad_argument, "trails_between: vertex index out of range");
  if (source == target) fail(errc::bad_argument, "trails_between: source and target must differ");

  std::vector<Trail> out;
  TrailSearch s{g, limits, out, std::vector<char>(static_cast<size_t>(g.edge_count()), 0), {}, 0};
  s.cur.vertices.push_back(source);

  std::function<void(int)> dfs = [&](int v) {
    s.step_budget();
    if (v == target && !s.cur.edges.empty()) s.record(s.cur);
    for (int e : g.incident_edges(v)) {
      if (s.used_edge[static_cast<size_t>(e)]) continue;
      int w = g.other_end(e, v);
      s.used_edge[static_cast<size_t>(e)] = 1;
      s.cur.edges.push_back(e);
      s.cur.vertices.push_back(w);
      dfs(w);
      s.cur.vertices.pop_back();
      s.cur.edges.pop_back();
      s.used_edge[static_cast<size_t>(e)] = 0;
    }
  };
  dfs(source);
  return out;
}

std::vector<Trail> longest_trails_to(const EdgeLabeledGraph& g, int target,
                                     const TrailLimits& limits) {
  const int n = g.vertex_count();
  if (target < 0 || target >= n) fail(errc::bad_argument, "longest_trails_to: vertex index out of range");

  std::vector<Trail> out;
  TrailSearch s{g, limits, out, std::vector<char>(static_cast<size_t>(g.edge_count()), 0), {}, 0};
  std::vector<char> visited(static_cast<size_t>(n), 0);
  visited[static_cast<size_t>(target)] = 1;
  s.cur.vertices.push_back(target);

  // Grows simple paths outward from the target; a path is maximal exactly
  // when every edge at its far end leads back into the path.
  std::function<void(int)> dfs = [&](int v) {
    s.step_budget();
    bool extended = false;
    for (int e : g.incident_edges(v)) {
      int w = g.other_end(e, v);
      if (visited[static_cast<size_t>(w)]) continue;
      extended = true;
      visited[static_cast<size_t>(w)] = 1;
      s.cur.edges.push_back(e);
      s.cur.vertices.push_back(w);
      dfs(w);
      s.cur.vertices.pop_back();
      s.cur.edges.pop_back();
      visited[static_cast<size_t>(w)] = 0;
    }
    if (!extended && !s.cur.edges.empty()) {
      Trail t = s.cur;
      std::reverse(t.vertices.begin(), t.vertices.end());
      std::reverse(t.edges.begin(), t.edges.end());
      s.record(std::move(t));
    }
  };
  dfs(target);
  return out;
}

Int trail_gcd(const EdgeLabeledGraph& g, const Trail& t) {
  if (t.vertices.size() != t.edges.size() + 1 || t.edges.empty())
    fail(errc::bad_argument, "trail_gcd: malformed trail");
  Int acc = 0;
  for (size_t i = 0; i < t.edges.size(); ++i) {
    int e = t.edges[i];
    if (e < 0 || e >= g.edge_count()) fail(errc::bad_argument, "trail_gcd: edge index out of range");
    const Edge& ed = g.edge(e);
    int a = t.vertices[i], b = t.vertices[i + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
      fail(errc::bad_argument, "trail_gcd: edge does not join consecutive trail vertices");
    acc = gcd(acc, ed.r);
  }
  return acc;
}

Reduction zero_reduce(const EdgeLabeledGraph& g, const std::vector<int>& zeros) {
  const int n = g.vertex_count();
  std::vector<char> removed(static_cast<size_t>(n), 0);
  for (int z : zeros) {
    if (z < 0 || z >= n) fail(errc::bad_argument, "zero_reduce: vertex index out of range");
    removed[static_cast<size_t>(z)] = 1;
  }

  Reduction red;
  red.old_to_new.assign(static_cast<size_t>(n), -1);
  std::vector<Int> m;
  for (int v = 0; v < n; ++v) {
    if (removed[static_cast<size_t>(v)]) continue;
    red.old_to_new[static_cast<size_t>(v)] = static_cast<int>(red.new_to_old.size());
    red.new_to_old.push_back(v);
    m.push_back(g.multiplier(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    bool ru = removed[static_cast<size_t>(e.u)], rv = removed[static_cast<size_t>(e.v)];
    if (ru && rv) continue;
    if (!ru && !rv) {
      edges.push_back(Edge{red.old_to_new[static_cast<size_t>(e.u)],
                           red.old_to_new[static_cast<size_t>(e.v)], e.r});
      continue;
    }
    int survivor = ru ? e.v : e.u;
    Int& mw = m[static_cast<size_t>(red.old_to_new[static_cast<size_t>(survivor)])];
    mw = lcm(mw, e.r);
  }
  red.graph = EdgeLabeledGraph::make(std::move(m), std::move(edges));
  return red;
}

std::vector<std::vector<int>> connected_components(const EdgeLabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<size_t>(start)] != -1) continue;
    std::vector<int> members, stack{start};
    comp[static_cast<size_t>(start)] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int e : g.incident_edges(v)) {
        int w = g.other_end(e, v);
        if (comp[static_cast<size_t>(w)] == -1) {
          comp[static_cast<size_t>(w)] = static_cast<int>(out.size());
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace splinez
