#include "whl/dot.hpp"

#include <sstream>

namespace whl {

namespace {

void emit_node(std::ostream& out, const std::string& name, bool leaf) {
  out << "  \"" << name << "\" [fillcolor=" << (leaf ? "green" : "red") << "];\n";
}

}  // namespace

std::string to_dot(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph {\n  node [style=filled];\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    emit_node(out, std::to_string(v), g.degree(v) == 1);
  for (const auto& [a, b] : g.edges()) out << "  \"" << a << "\" -- \"" << b << "\";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const LabeledMultigraph& g) {
  std::ostringstream out;
  out << "graph {\n  node [style=filled];\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    emit_node(out, std::to_string(v), g.neighbor_count(v) == 1);
  for (const auto& e : g.edges()) {
    out << "  \"" << e.a << "\" -- \"" << e.b << "\"";
    if (e.mult != 1) out << " [label=\"" << e.mult.str() << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const TotalLabeling& t) { return to_dot(t.induced_multigraph()); }

std::string to_dot(const FamilyWindow& w) {
  std::vector<int> degree(w.labels.size(), 0);
  for (const auto& [a, b] : w.edges) {
    ++degree[a];
    ++degree[b];
  }
  std::ostringstream out;
  out << "graph {\n  node [style=filled];\n";
  for (std::size_t i = 0; i < w.labels.size(); ++i)
    emit_node(out, std::to_string(w.labels[i]), degree[i] <= 1);
  for (const auto& [a, b] : w.edges)
    out << "  \"" << w.labels[a] << "\" -- \"" << w.labels[b] << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace whl
