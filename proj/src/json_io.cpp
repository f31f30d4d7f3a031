#include "whl/json_io.hpp"

#include <limits>

namespace whl {

namespace {

json int_to_json(const Int& x) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
  return x.str();
}

Int int_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw json_format_error("expected an integer", std::string(what) + "=" + j.dump());
}

int vertex_from_json(const json& j) {
  if (!j.is_number_integer())
    throw json_format_error("expected a vertex index", j.dump());
  return j.get<int>();
}

void check_shape(const json& j) {
  if (!j.is_object()) throw json_format_error("expected a graph object", j.dump().substr(0, 40));
  if (!j.contains("n")) throw json_format_error("missing field", "n");
  if (!j.contains("edges")) throw json_format_error("missing field", "edges");
  if (!j["n"].is_number_integer()) throw json_format_error("expected an integer", "n");
  if (!j["edges"].is_array()) throw json_format_error("expected an array", "edges");
}

}  // namespace

json graph_to_json(const LabeledGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

LabeledGraph graph_from_json(const json& j) {
  check_shape(j);
  std::vector<LabeledGraph::Edge> edges;
  for (const auto& row : j["edges"]) {
    if (!row.is_array() || row.size() != 2)
      throw json_format_error("expected an [a,b] edge", row.dump());
    edges.emplace_back(vertex_from_json(row[0]), vertex_from_json(row[1]));
  }
  return LabeledGraph(j["n"].get<int>(), std::move(edges));
}

json multigraph_to_json(const LabeledMultigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.a, e.b, int_to_json(e.mult)});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

LabeledMultigraph multigraph_from_json(const json& j) {
  check_shape(j);
  std::vector<LabeledMultigraph::Edge> edges;
  for (const auto& row : j["edges"]) {
    if (!row.is_array() || row.size() != 3)
      throw json_format_error("expected an [a,b,mult] edge", row.dump());
    edges.push_back({vertex_from_json(row[0]), vertex_from_json(row[1]),
                     int_from_json(row[2], "mult")});
  }
  return LabeledMultigraph(j["n"].get<int>(), std::move(edges));
}

json total_to_json(const TotalLabeling& t) { return multigraph_to_json(t.induced_multigraph()); }

TotalLabeling total_from_json(const json& j) {
  LabeledMultigraph g = multigraph_from_json(j);
  std::vector<LabeledGraph::Edge> simple;
  std::vector<Int> weights;
  for (const auto& e : g.edges()) {
    simple.emplace_back(e.a, e.b);
    weights.push_back(e.mult);
  }
  return TotalLabeling(LabeledGraph(g.vertex_count(), std::move(simple)), std::move(weights));
}

bool json_edges_weighted(const json& j) {
  check_shape(j);
  for (const auto& row : j["edges"]) {
    if (!row.is_array() || (row.size() != 2 && row.size() != 3))
      throw json_format_error("expected an [a,b] or [a,b,mult] edge", row.dump());
    if (row.size() == 3) return true;
  }
  return false;
}

json catalog_to_json(const Catalog& c) {
  return {{"n", c.options.n},
          {"options",
           {{"connected", c.options.connected},
            {"max_multiplicity", c.options.max_multiplicity},
            {"dedup_inversion", c.options.dedup_inversion}}},
          {"count", c.entries.size()},
          {"collections", c.serialized()}};
}

json window_to_json(const FamilyWindow& w) {
  json edges = json::array();
  for (const auto& [a, b] : w.edges) edges.push_back({a, b});
  return {{"n", w.labels.size()}, {"edges", edges}, {"labels", w.labels}};
}

json report_to_json(const VerifyReport& r) {
  json out = json::array();
  for (const auto& e : r.equations)
    out.push_back({{"vertex", e.vertex}, {"lhs", int_to_json(e.lhs)}, {"rhs", int_to_json(e.rhs)}});
  return out;
}

json report_to_json(const WindowReport& r) {
  json out = json::array();
  for (const auto& e : r.equations)
    out.push_back({{"vertex", e.label}, {"lhs", int_to_json(e.lhs)}, {"rhs", int_to_json(e.rhs)}});
  return out;
}

}  // namespace whl
