#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "whl/collection.hpp"
#include "whl/graph.hpp"
#include "whl/harmonic.hpp"
#include "whl/total.hpp"

namespace testutil {

using whl::LabeledGraph;
using whl::LabeledMultigraph;
using whl::TotalLabeling;

inline LabeledGraph cycle_graph(int n) {
  std::vector<LabeledGraph::Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return LabeledGraph(n, std::move(edges));
}

inline LabeledGraph complete_graph(int n) {
  std::vector<LabeledGraph::Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return LabeledGraph(n, std::move(edges));
}

inline LabeledGraph complete_bipartite(int m, int k) {
  std::vector<LabeledGraph::Edge> edges;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < k; ++b) edges.emplace_back(a, m + b);
  return LabeledGraph(m + k, std::move(edges));
}

// Cartesian product of P_m and P_2: an m-by-2 grid.
inline LabeledGraph ladder_graph(int m) {
  std::vector<LabeledGraph::Edge> edges;
  for (int i = 0; i + 1 < m; ++i) {
    edges.emplace_back(i, i + 1);
    edges.emplace_back(m + i, m + i + 1);
  }
  for (int i = 0; i < m; ++i) edges.emplace_back(i, m + i);
  return LabeledGraph(2 * m, std::move(edges));
}

// Does any bijective relabeling of g onto [0,n-1] verify? Exhaustive over
// all n! permutations; independent of the collection machinery.
inline bool admits_weak_labeling(const LabeledGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  do {
    std::vector<LabeledGraph::Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& [a, b] : g.edges()) edges.emplace_back(label[a], label[b]);
    if (whl::verify_weak(LabeledGraph(n, std::move(edges))).ok()) return true;
  } while (std::next_permutation(label.begin(), label.end()));
  return false;
}

inline LabeledGraph random_graph(std::mt19937& rng, int n, double edge_prob) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<LabeledGraph::Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  return LabeledGraph(n, std::move(edges));
}

// Star with one sixfold edge: 0 =6= 1, plus 1-2, 1-3, 1-4.
inline LabeledMultigraph heavy_star_multigraph() {
  return LabeledMultigraph(5, {{0, 1, 6}, {1, 2, 1}, {1, 3, 1}, {1, 4, 1}});
}

// Eight-vertex multigraph with multiplicities up to 13 along a chain.
inline LabeledMultigraph chained_multigraph() {
  return LabeledMultigraph(8, {{0, 1, 13},
                               {1, 2, 2},
                               {1, 3, 1},
                               {1, 5, 1},
                               {1, 6, 1},
                               {2, 4, 1},
                               {3, 4, 2},
                               {4, 5, 4},
                               {5, 6, 8},
                               {6, 7, 13}});
}

// Five vertices: a 4-cycle-with-chord core and two weight-3 pendant edges.
inline TotalLabeling weighted_diamond() {
  LabeledGraph g(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  // edges sorted: (0,1) (1,2) (1,3) (2,3) (3,4)
  return TotalLabeling(g, {3, 1, 1, 1, 3});
}

// K_4 core on 1..4 with pendants 0 and 5.
inline TotalLabeling weighted_k4_core() {
  LabeledGraph g(6, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {4, 5}});
  // sorted: (0,1) (1,2) (1,3) (1,4) (2,3) (2,4) (3,4) (4,5)
  return TotalLabeling(g, {18, 3, 3, 3, 1, 1, 7, 18});
}

// K_5 core on 1..5 with pendants 0 and 6.
inline TotalLabeling weighted_k5_core() {
  LabeledGraph g(7, {{0, 1},
                     {1, 2},
                     {1, 3},
                     {1, 4},
                     {1, 5},
                     {2, 3},
                     {2, 4},
                     {2, 5},
                     {3, 4},
                     {3, 5},
                     {4, 5},
                     {5, 6}});
  // sorted: (0,1) (1,2) (1,3) (1,4) (1,5) (2,3) (2,4) (2,5) (3,4) (3,5) (4,5) (5,6)
  return TotalLabeling(g, {60, 6, 6, 6, 6, 1, 1, 1, 1, 6, 21, 60});
}

}  // namespace testutil
