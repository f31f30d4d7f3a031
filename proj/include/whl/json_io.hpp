#pragma once

#include <string>

#include <json.hpp>

#include "whl/enumerate.hpp"
#include "whl/families.hpp"
#include "whl/graph.hpp"
#include "whl/total.hpp"

namespace whl {

using json = nlohmann::json;

class json_format_error : public std::runtime_error {
 public:
  json_format_error(const std::string& message, std::string token)
      : std::runtime_error(message + ": '" + token + "'"), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

// {"n": int, "edges": [[a,b], ...]}, edges sorted with a < b.
json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const json& j);

// {"n": int, "edges": [[a,b,m], ...]}; multiplicities beyond int64 are
// emitted as decimal strings and accepted back.
json multigraph_to_json(const LabeledMultigraph& g);
LabeledMultigraph multigraph_from_json(const json& j);

json total_to_json(const TotalLabeling& t);
TotalLabeling total_from_json(const json& j);

// True when the edge rows carry a third (multiplicity/weight) entry.
bool json_edges_weighted(const json& j);

json catalog_to_json(const Catalog& c);

// Window as a graph JSON plus the original (possibly negative) labels.
json window_to_json(const FamilyWindow& w);

json report_to_json(const VerifyReport& r);
json report_to_json(const WindowReport& r);

}  // namespace whl
