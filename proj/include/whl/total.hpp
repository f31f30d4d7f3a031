#pragma once

#include <stdexcept>
#include <vector>

#include "whl/graph.hpp"
#include "whl/harmonic.hpp"

namespace whl {

// Simple graph plus positive integer edge weights; the vertex labeling is the
// identity as everywhere else.
struct TotalLabeling {
  LabeledGraph graph;
  std::vector<Int> weights;  // parallel to graph.edges()

  TotalLabeling(LabeledGraph g, std::vector<Int> w);
  const Int& weight(int a, int b) const;
  LabeledMultigraph induced_multigraph() const;

  bool operator==(const TotalLabeling&) const = default;
};

// Weighted harmonicity at every non-leaf, evaluated on the induced
// multigraph. Throws when some weight is below 1 (every edge must survive).
VerifyReport verify_total(const TotalLabeling& t);

struct AdmissibilityReport {
  std::vector<int> failing;  // non-leaves not strictly between their neighbor extremes
  bool ok() const { return failing.empty(); }
};

// Eq.-(3) sandwich: every non-leaf label lies strictly between the minimum
// and maximum of its neighbors' labels.
AdmissibilityReport check_admissible(const LabeledGraph& g);

class admissibility_error : public std::runtime_error {
 public:
  explicit admissibility_error(AdmissibilityReport report);
  const AdmissibilityReport& report() const { return report_; }

 private:
  AdmissibilityReport report_;
};

// Produces a total weak harmonic labeling from an admissible graph:
// non-leaves are processed in ascending label order, each closed neighborhood
// is harmonized to average at its vertex, and previously settled sets are
// rescaled uniformly so shared edge weights keep agreeing. One pass; the
// output always passes verify_total.
TotalLabeling total_label(const LabeledGraph& g);

// Divides the weights of each coupled component (edges sharing a non-leaf
// endpoint) by their gcd whenever verification is preserved. Idempotent.
TotalLabeling minimize_weights(const TotalLabeling& t);

}  // namespace whl
