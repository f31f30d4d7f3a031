#pragma once

#include <string>
#include <vector>

#include "whl/collection.hpp"

namespace whl {

struct EnumOptions {
  int n = 3;
  bool connected = true;
  long long max_multiplicity = 1;  // 1 = simple graphs
  bool dedup_inversion = false;
  unsigned jobs = 1;   // parallel workers over the root split; output is
                       // identical for every worker count
  int n_limit = 12;    // guard against accidental huge runs; raise explicitly
};

struct Catalog {
  EnumOptions options;
  std::vector<HarmonicCollection> entries;  // sorted by canonical serialization
  std::vector<std::string> serialized() const;
};

// All harmonic collections on the interval [0,n-1] satisfying P1-P4 (with
// multiplicities bounded by max_multiplicity) plus P5 when connected=true.
// Through the collection encoding these are exactly the weakly labeled
// (multi)graphs on [0,n-1].
Catalog enumerate_collections(const EnumOptions& opts);

// Independent oracle: sweeps every simple graph on [0,n-1] (all edge subsets),
// keeps connected ones whose identity labeling verifies, and extracts each.
// Feasible for n <= 7 only.
Catalog brute_force_oracle(int n);

// Collections (simple mode, P5 dropped) whose built graph is disconnected.
// Every component automatically has at least three vertices.
Catalog disconnected_samples(int n);

// k disjoint copies; vertex v of copy i (1-based) becomes k*v + i - 1.
LabeledGraph disjoint_copies(const LabeledGraph& g, int k);

}  // namespace whl
