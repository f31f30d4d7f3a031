#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "whl/numeric.hpp"

namespace whl {

// Finite simple graph whose vertices are exactly 0..n-1. The vertex id is
// the label: translation-normalized labelings never store a separate map.
class LabeledGraph {
 public:
  using Edge = std::pair<int, int>;  // stored with first < second

  LabeledGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(int a, int b) const;

  bool operator==(const LabeledGraph&) const = default;

 private:
  int n_;
  std::vector<Edge> edges_;            // sorted lexicographically
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

// Loopless multigraph on 0..n-1 with a positive multiplicity per vertex pair.
class LabeledMultigraph {
 public:
  struct Edge {
    int a;
    int b;       // a < b after normalization
    Int mult;    // >= 1
    bool operator==(const Edge&) const = default;
  };

  LabeledMultigraph(int n, std::vector<Edge> edges);
  static LabeledMultigraph from_simple(const LabeledGraph& g);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<int, Int>>& neighbors(int v) const { return adj_.at(v); }
  // Number of distinct vertices adjacent to v.
  int neighbor_count(int v) const { return static_cast<int>(adj_.at(v).size()); }
  Int degree(int v) const;  // sum of incident multiplicities
  Int multiplicity(int a, int b) const;

  // The simple graph with the same adjacencies, multiplicities dropped.
  LabeledGraph simplification() const;
  bool all_unit() const;

  bool operator==(const LabeledMultigraph&) const = default;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, Int>>> adj_;
};

std::vector<int> leaves(const LabeledGraph& g);
std::vector<int> leaves(const LabeledMultigraph& g);
bool is_connected(const LabeledGraph& g);
bool is_connected(const LabeledMultigraph& g);
// Sizes of connected components (vertex counts), ascending.
std::vector<int> component_sizes(const LabeledGraph& g);

// Relabels v -> (n-1)-v. An involution.
LabeledGraph invert(const LabeledGraph& g);

bool labeled_equal(const LabeledGraph& a, const LabeledGraph& b);
bool labeled_equal(const LabeledMultigraph& a, const LabeledMultigraph& b);

// [lo,hi] with nullopt meaning unbounded on that side.
struct IntegerInterval {
  std::optional<long long> lo;
  std::optional<long long> hi;

  bool contains(long long x) const {
    return (!lo || x >= *lo) && (!hi || x <= *hi);
  }
  bool bounded() const { return lo && hi; }
};

}  // namespace whl
