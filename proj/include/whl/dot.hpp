#pragma once

#include <string>

#include "whl/families.hpp"
#include "whl/graph.hpp"
#include "whl/total.hpp"

namespace whl {

// Graphviz output: leaves green-filled, interior vertices red, edge
// multiplicities and weights as labels with 1 omitted.
std::string to_dot(const LabeledGraph& g);
std::string to_dot(const LabeledMultigraph& g);
std::string to_dot(const TotalLabeling& t);
std::string to_dot(const FamilyWindow& w);

}  // namespace whl
