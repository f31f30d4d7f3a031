#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "whl/graph.hpp"
#include "whl/harmonic.hpp"

namespace whl {

enum class CollectionMode { simple, multi };

// The combinatorial encoding of a weakly labeled (multi)graph: one harmonic
// (multi)set per non-leaf vertex. Sets are kept in canonical order (by
// average, ties by content) so equality and serialization are deterministic.
class HarmonicCollection {
 public:
  HarmonicCollection(CollectionMode mode, std::vector<Multiset> sets);

  CollectionMode mode() const { return mode_; }
  const std::vector<Multiset>& sets() const { return sets_; }
  bool empty() const { return sets_.empty(); }

  // Canonical text notation: sets separated by ";", elements by ",",
  // multiplicities as "elem^mult" (omitted when 1).
  std::string to_string() const;

  // Accepts the explicit notation, an optional "{ }" wrapper, and the compact
  // all-single-digit form ("01347;23456") when the text has no ',' or '^'.
  // Mode is inferred (multi iff some multiplicity exceeds 1) unless forced.
  static HarmonicCollection parse(std::string_view text,
                                  std::optional<CollectionMode> force_mode = {});

  bool operator==(const HarmonicCollection&) const = default;

 private:
  CollectionMode mode_;
  std::vector<Multiset> sets_;
};

class notation_error : public std::runtime_error {
 public:
  notation_error(const std::string& message, std::string token)
      : std::runtime_error(message + ": '" + token + "'"), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

struct AxiomReport {
  bool members_ok = true;  // every set non-trivial harmonic (and mode-valid)
  bool p1 = true;          // union of supports is an integer interval
  bool p2 = true;          // pairwise distinct averages
  bool p3 = true;          // shared elements are averages
  bool p4 = true;          // membership of averages is symmetric, multiplicity-matched
  bool p5 = true;          // connectedness chain
  bool p5_checked = false;
  std::vector<std::string> notes;

  bool pass() const {
    return members_ok && p1 && p2 && p3 && p4 && (!p5_checked || p5);
  }
  std::string summary() const;
};

// Evaluates P1-P5 (MP1-MP5 in multi mode). P5 is skipped when connected=false.
AxiomReport check_axioms(const HarmonicCollection& c, bool connected);

class axiom_error : public std::runtime_error {
 public:
  explicit axiom_error(AxiomReport report)
      : std::runtime_error("collection violates harmonic-collection axioms: " +
                           report.summary()),
        report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

// Closed-neighborhood label sets of all non-leaves. Input must verify.
HarmonicCollection extract(const LabeledGraph& g);
HarmonicCollection extract(const LabeledMultigraph& g);

// Inverse map: graph on the union interval (translated to start at 0) with
// i ~ j iff one of them is the average of a set containing the other.
// Throws axiom_error when check_axioms (without P5) fails.
LabeledGraph build_graph(const HarmonicCollection& c);
LabeledMultigraph build_multigraph(const HarmonicCollection& c);

// x -> lo+hi-x over the union interval; preserves the axioms.
HarmonicCollection inverted(const HarmonicCollection& c);

// build(extract(g)) == g and extract(build(extract(g))) == extract(g).
bool roundtrip_check(const LabeledGraph& g);
bool roundtrip_check(const LabeledMultigraph& g);

}  // namespace whl
