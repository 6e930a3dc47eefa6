#pragma once

#include <string>
#include <vector>

#include "arith.hpp"

namespace splinez {

// Undirected edge between distinct vertices; r is the edge modulus, with
// r == 0 meaning the edge forces equality. Parallel edges are allowed.
struct Edge {
  int u;
  int v;
  Int r;
};

// The pair (G, beta): vertex v_i carries multiplier m_i (its module is m_i*Z)
// and each edge carries a modulus. Vertex order is part of the data; flow-up
// classes are defined relative to it. Vertices are 0-based internally and
// 1-based in every external document and message.
class EdgeLabeledGraph {
public:
  EdgeLabeledGraph() = default;  // the empty graph

  // Validates multipliers >= 0, endpoint ranges and the no-self-loop rule.
  static EdgeLabeledGraph make(std::vector<Int> multipliers, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(m_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Int& multiplier(int v) const { return m_[static_cast<size_t>(v)]; }
  const std::vector<Int>& multipliers() const { return m_; }
  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident_edges(int v) const { return incident_[static_cast<size_t>(v)]; }
  int other_end(int e, int v) const;

private:
  std::vector<Int> m_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
};

// Parses {"m": [int,...], "edges": [[u,v,r],...]} with 1-based vertex
// indices. Labels may also be decimal strings when they outgrow int64.
EdgeLabeledGraph parse_graph(const std::string& json_text);

// A walk that never repeats an edge. vertices[i], vertices[i+1] are the
// endpoints of edges[i]; at least one edge.
struct Trail {
  std::vector<int> vertices;
  std::vector<int> edges;
};

struct TrailLimits {
  long long max_trails = 10000;   // per endpoint pair / per target
  long long max_steps = 1000000;  // search-step safety budget
};

// All trails from source to target, in lexicographic order of their edge
// index sequences. Vertices may repeat; edges may not.
std::vector<Trail> trails_between(const EdgeLabeledGraph& g, int source, int target,
                                  const TrailLimits& limits = {});

// The maximal simple paths ending at target: no repeated vertex, and the far
// end cannot be extended along an edge to an unvisited vertex. Isolated
// targets yield the empty set.
std::vector<Trail> longest_trails_to(const EdgeLabeledGraph& g, int target,
                                     const TrailLimits& limits = {});

// gcd of the edge moduli along the trail.
Int trail_gcd(const EdgeLabeledGraph& g, const Trail& t);

struct Reduction {
  EdgeLabeledGraph graph;
  std::vector<int> old_to_new;  // -1 for removed vertices
  std::vector<int> new_to_old;
};

// Removes the given vertices and their incident edges; every surviving
// neighbour w picks up lcm(m_w, r_e) over the removed edges e at w.
// Surviving vertices keep their relative order.
Reduction zero_reduce(const EdgeLabeledGraph& g, const std::vector<int>& zeros);

// Vertex sets of the connected components, each sorted ascending, components
// ordered by smallest member.
std::vector<std::vector<int>> connected_components(const EdgeLabeledGraph& g);

}  // namespace splinez
