#pragma once

#include <random>

#include "graph.hpp"
#include "longest_basis.hpp"
#include "path_basis.hpp"

namespace splinez::fixtures {

// P3 with m = (9, 12, 8) and moduli (20, 8).
inline EdgeLabeledGraph p3_ex() {
  return EdgeLabeledGraph::make({9, 12, 8}, {{0, 1, 20}, {1, 2, 8}});
}

inline PathSpec p3_ex_spec() { return PathSpec::make({9, 12, 8}, {20, 8}); }

// P2 with m = (3, 2) and modulus 7: minimal spline (3, 10), constant (6, 6).
inline EdgeLabeledGraph p2_smallest() { return EdgeLabeledGraph::make({3, 2}, {{0, 1, 7}}); }

// P2 with m = (2, 3) and an equality edge: the module is generated by (6, 6).
inline EdgeLabeledGraph p2_equality() { return EdgeLabeledGraph::make({2, 3}, {{0, 1, 0}}); }

// P3 with m = (3, 5, 7) and moduli (5, 7): the minimal second flow-up class
// is (0, 35, 0).
inline EdgeLabeledGraph p3_trail() {
  return EdgeLabeledGraph::make({3, 5, 7}, {{0, 1, 5}, {1, 2, 7}});
}

// Tree on nine vertices, m = (4,15,9,8,12,3,2,5,6), leading values
// (12, 30, 360, 8, 60, 12, 6, 45, 12).
inline EdgeLabeledGraph t9() {
  return EdgeLabeledGraph::make({4, 15, 9, 8, 12, 3, 2, 5, 6}, {{5, 4, 4},
                                                                {4, 0, 3},
                                                                {0, 7, 9},
                                                                {0, 6, 6},
                                                                {0, 8, 12},
                                                                {4, 3, 5},
                                                                {3, 2, 8},
                                                                {2, 1, 10}});
}

// Six-vertex graph whose vertex v1 has exactly four maximal simple paths:
// edges r1..r6 join (1,2),(2,3),(3,4),(2,4),(3,5),(4,6).
inline EdgeLabeledGraph six_vertex(const std::vector<Int>& m, const std::vector<Int>& r) {
  return EdgeLabeledGraph::make(
      m, {{0, 1, r[0]}, {1, 2, r[1]}, {2, 3, r[2]}, {1, 3, r[3]}, {2, 4, r[4]}, {3, 5, r[5]}});
}

inline EdgeLabeledGraph six_vertex_default() {
  return six_vertex({4, 6, 10, 15, 9, 14}, {8, 12, 5, 9, 21, 10});
}

// P3 with m = (16, 18, 12) and moduli (20, 35): the worked GKM example.
inline EdgeLabeledGraph gkm_p3() {
  return EdgeLabeledGraph::make({16, 18, 12}, {{0, 1, 20}, {1, 2, 35}});
}

// Star with centre multiplier 15 and leaves (7, 15, 18, 12, 21, 9) on edges
// (3, 8, 16, 15, 24, 12).
inline EdgeLabeledGraph s7_star() {
  return EdgeLabeledGraph::make({15, 7, 15, 18, 12, 21, 9}, {{0, 1, 3},
                                                             {0, 2, 8},
                                                             {0, 3, 16},
                                                             {0, 4, 15},
                                                             {0, 5, 24},
                                                             {0, 6, 12}});
}

inline EdgeLabeledGraph cycle(const std::vector<Int>& m, const std::vector<Int>& r) {
  return CycleSpec::make(m, r).to_graph();
}

// Random labels drawn as divisors of a small universe so that enumeration
// windows stay desk-sized.
class LabelSampler {
public:
  LabelSampler(std::mt19937_64& rng, long universe, long max_label)
      : rng_(rng), max_label_(max_label) {
    for (long d = 1; d <= universe && d <= max_label; ++d)
      if (universe % d == 0) divisors_.push_back(d);
  }

  Int pick() {
    std::uniform_int_distribution<size_t> dist(0, divisors_.size() - 1);
    return Int(divisors_[dist(rng_)]);
  }

private:
  std::mt19937_64& rng_;
  long max_label_;
  std::vector<long> divisors_;
};

inline long pick_universe(std::mt19937_64& rng) {
  static const long universes[] = {6, 8, 12, 18, 20, 24, 30, 36, 40, 48, 56, 60, 66, 72, 84, 90, 120};
  std::uniform_int_distribution<size_t> dist(0, std::size(universes) - 1);
  return universes[dist(rng)];
}

}  // namespace splinez::fixtures
