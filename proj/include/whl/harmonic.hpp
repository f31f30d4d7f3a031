#pragma once

#include <initializer_list>
#include <vector>

#include "whl/graph.hpp"
#include "whl/numeric.hpp"

namespace whl {

// Finite multiset of integers; entries kept sorted by element, multiplicities
// always positive. A plain set is the all-ones special case.
class Multiset {
 public:
  using Entry = std::pair<long long, Int>;

  Multiset() = default;
  Multiset(std::initializer_list<long long> elems);
  static Multiset from_elements(const std::vector<long long>& elems);

  void add(long long elem, Int mult = 1);  // accumulates on repeated elements

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  Int cardinality() const;  // sum of multiplicities
  bool contains(long long elem) const;
  Int multiplicity(long long elem) const;  // 0 when absent
  long long min_element() const;
  long long max_element() const;
  const std::vector<Entry>& entries() const { return entries_; }
  bool all_unit() const;

  bool operator==(const Multiset&) const = default;

 private:
  std::vector<Entry> entries_;
};

// Exact multiplicity-weighted average. Throws on the empty multiset.
Rat average(const Multiset& m);

// av(m) is an integer belonging to the support.
bool is_harmonic(const Multiset& m);
// Harmonic with at least three distinct elements.
bool is_nontrivial_harmonic(const Multiset& m);

// All multiplicities multiplied by c > 0; preserves the average.
Multiset scaled(const Multiset& m, const Int& c);

// Returns a multiset with the same support, positive multiplicities and
// average exactly x. With P = sum_{z<x} (x-z) m(z) and N = sum_{z>x} (z-x) m(z),
// entries below x are scaled by N, entries above by P, x itself is kept.
// Requires x in the support, strictly between min and max.
Multiset harmonized(const Multiset& m, long long x);

// One harmonicity equation: lhs = weighted neighbor label sum,
// rhs = deg(v) * label(v). Holds iff lhs == rhs.
struct VertexEquation {
  int vertex;
  Int lhs;
  Int rhs;
  bool holds() const { return lhs == rhs; }
};

struct VerifyReport {
  std::vector<VertexEquation> equations;  // one per non-leaf, ascending vertex
  bool ok() const;
  std::vector<VertexEquation> failures() const;
};

// Eq. at every non-leaf v: sum of neighbor labels == deg(v) * v, in exact integers.
VerifyReport verify_weak(const LabeledGraph& g);
// Multiplicity-weighted form.
VerifyReport verify_weak_multi(const LabeledMultigraph& g);

// Independent cross-check: builds the integer Laplacian L = D - A, removes the
// rows of leaves, and tests whether (0,1,...,n-1) lies in the kernel.
bool laplacian_kernel_check(const LabeledGraph& g);

}  // namespace whl
