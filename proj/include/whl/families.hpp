#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "whl/graph.hpp"
#include "whl/harmonic.hpp"

namespace whl {

// P_n with identity labels.
LabeledGraph path_graph(int n);

// K_{1,leaf_count} with the center labeled leaf_count/2. Requires an even
// leaf count (otherwise the center's average is not an integer).
LabeledGraph star_graph(int leaf_count);

// Path through the multiples of m from k*m to (n-k-1)*m, every remaining
// label of [0,(n-1)m] attached as a leaf to the central vertex (n-1)m/2.
// Requires m >= 1, odd n >= 3 and 0 <= k <= (n-1)/2. The extremal cases are
// path_graph(n) (m=1, k=0) and star_graph(n-1) (m=1, k=(n-1)/2).
LabeledGraph star_path(int m, int n, int k);

// Grid-like family on [0,(h+1)k-2]: the snake edges {a,a+1} for
// k-1 <= a <= hk-2 and the rungs {a,a+k} for 0 <= a <= hk-2 with
// a mod k != k-1. Requires k,h >= 2.
LabeledGraph c_grid(int k, int h);

enum class CoalesceError { left_end_not_leaf, right_start_not_leaf, label_sum_mismatch };

class coalesce_error : public std::runtime_error {
 public:
  coalesce_error(CoalesceError code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  CoalesceError code() const { return code_; }

 private:
  CoalesceError code_;
};

// Identifies left's vertex n-1 (a leaf) with right's vertex 0 (a leaf) and
// shifts right's labels by n-1. Requires the neighbor labels v, w of the two
// glued leaves to satisfy v + w = n-1.
LabeledGraph coalesce(const LabeledGraph& left, const LabeledGraph& right);

// A spanning-edge pair (i,k): chords of span k chained along labels = i mod k.
struct SpanPair {
  long long residue = 0;
  long long span = 2;
  auto operator<=>(const SpanPair&) const = default;
};

// Infinite labeled graph given by a lazy neighbor oracle. Never materialized
// beyond finite windows.
class WindowedFamily {
 public:
  enum class Kind {
    pb,              // Z-path plus all chord translates of the base pairs
    inner_cylinder,  // layered copies of a finite base, vertical edges above non-leaves
    extended,        // finite head glued to the half-infinite ray at label n-1
  };

  static WindowedFamily pb(std::vector<SpanPair> base, bool half_line = false);
  static WindowedFamily inner_cylinder(LabeledGraph base);
  static WindowedFamily extended(LabeledGraph head);

  Kind kind() const { return kind_; }
  IntegerInterval domain() const;
  const std::vector<SpanPair>& base_pairs() const { return base_; }
  const LabeledGraph* base_graph() const { return graph_ ? &*graph_ : nullptr; }

  // Sorted distinct neighbor labels, restricted to the domain.
  std::vector<long long> neighbor_labels(long long label) const;

 private:
  WindowedFamily() = default;
  Kind kind_ = Kind::pb;
  bool half_line_ = false;
  std::vector<SpanPair> base_;
  std::shared_ptr<const LabeledGraph> graph_;  // cylinder base or extended head
};

// Gluing a finite weakly labeled graph onto a half-infinite family whose
// vertex 0 is a leaf. Supported right-hand sides: the bare ray (pb with empty
// base on [0,inf)) and extended families (folds by associativity).
WindowedFamily coalesce(const LabeledGraph& left, const WindowedFamily& right);

struct LabelEquation {
  long long label;
  Int lhs;
  Int rhs;
  bool holds() const { return lhs == rhs; }
};

struct WindowReport {
  std::vector<LabelEquation> equations;
  bool ok() const;
  std::vector<LabelEquation> failures() const;
};

// Checks the harmonicity equation at every non-leaf label of [lo,hi] within
// the family's domain. Neighborhoods come from the oracle, so no boundary
// truncation occurs at the window edges.
WindowReport verify_window(const WindowedFamily& f, long long lo, long long hi);

struct FamilyWindow {
  std::vector<long long> labels;              // ascending
  std::vector<std::pair<int, int>> edges;     // indices into labels
};
FamilyWindow materialize_window(const WindowedFamily& f, long long lo, long long hi);

// Windowed check of the leafless (strong) labeling conditions: every label in
// [lo,hi] must be the average of its own closed neighborhood (so no leaves),
// averages are trivially distinct, and adjacency must be symmetric. This is
// the finite-window stand-in for conditions that quantify over all of Z.
struct StrongWindowReport {
  std::vector<long long> leaf_labels;       // labels with fewer than two neighbors
  std::vector<LabelEquation> failures;      // harmonicity violations
  std::vector<std::string> asymmetries;     // oracle inconsistencies
  bool ok() const { return leaf_labels.empty() && failures.empty() && asymmetries.empty(); }
};
StrongWindowReport verify_harmonic_window(const WindowedFamily& f, long long lo, long long hi);

// True iff the window edge sets of pb(b1) and pb(b2) agree exactly when
// b1 == b2. Requires the window to span at least twice the largest span.
bool distinct_bases_distinct_graphs(std::vector<SpanPair> b1, std::vector<SpanPair> b2,
                                    long long lo, long long hi);

struct SpanningCheck {
  bool ok = false;
  std::vector<Rat> solution;
  std::string note;
};

// Solves the k x k integer system with rows (1,0,...,0,1), (2,-1,0,...) and
// the (-1,2,-1) band against the right-hand side (3k+1, k, 0, ..., 0) in
// exact rationals; ok iff non-singular with solution (k+1, ..., 2k).
SpanningCheck spanning_check(int k);

}  // namespace whl
