#include "whl/total.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/multiprecision/integer.hpp>

namespace whl {

TotalLabeling::TotalLabeling(LabeledGraph g, std::vector<Int> w)
    : graph(std::move(g)), weights(std::move(w)) {
  if (weights.size() != graph.edges().size())
    throw std::invalid_argument("one weight per edge required");
}

const Int& TotalLabeling::weight(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(graph.edges().begin(), graph.edges().end(),
                             LabeledGraph::Edge{a, b});
  if (it == graph.edges().end() || *it != LabeledGraph::Edge{a, b})
    throw std::invalid_argument("no such edge");
  return weights[it - graph.edges().begin()];
}

LabeledMultigraph TotalLabeling::induced_multigraph() const {
  std::vector<LabeledMultigraph::Edge> edges;
  edges.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i)
    edges.push_back({graph.edges()[i].first, graph.edges()[i].second, weights[i]});
  return LabeledMultigraph(graph.vertex_count(), std::move(edges));
}

VerifyReport verify_total(const TotalLabeling& t) {
  for (const Int& w : t.weights)
    if (w < 1) throw std::invalid_argument("total labelings require edge weights >= 1");
  return verify_weak_multi(t.induced_multigraph());
}

AdmissibilityReport check_admissible(const LabeledGraph& g) {
  AdmissibilityReport report;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) <= 1) continue;
    const auto& nb = g.neighbors(v);
    auto [mn, mx] = std::minmax_element(nb.begin(), nb.end());
    if (!(*mn < v && v < *mx)) report.failing.push_back(v);
  }
  return report;
}

admissibility_error::admissibility_error(AdmissibilityReport report)
    : std::runtime_error("labeling is not admissible at " +
                         std::to_string(report.failing.size()) + " vertex/vertices"),
      report_(std::move(report)) {}

TotalLabeling total_label(const LabeledGraph& g) {
  AdmissibilityReport adm = check_admissible(g);
  if (!adm.ok()) throw admissibility_error(std::move(adm));

  std::vector<int> non_leaves;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 2) non_leaves.push_back(v);

  std::map<int, Multiset> sets;  // settled closed-neighborhood multisets
  for (int v : non_leaves) {
    Multiset b;
    b.add(v);
    for (int w : g.neighbors(v)) {
      auto it = sets.find(w);  // settled neighbors dictate the shared weight
      b.add(w, it != sets.end() ? it->second.multiplicity(v) : Int(1));
    }
    if (average(b) != Rat(v)) {
      // Settled neighbors all carry labels below v, so harmonizing scales
      // them by the common "above" factor; rescaling every settled set by
      // the same factor keeps all previously matched weights matched.
      Int above = 0;
      for (const auto& [e, m] : b.entries())
        if (e > v) above += m * (e - v);
      b = harmonized(b, v);
      for (auto& [u, s] : sets) s = scaled(s, above);
    }
    sets.emplace(v, std::move(b));
  }

  std::vector<Int> weights;
  weights.reserve(g.edges().size());
  for (const auto& [a, b] : g.edges()) {
    auto ia = sets.find(a), ib = sets.find(b);
    if (ia != sets.end() && ib != sets.end()) {
      if (ia->second.multiplicity(b) != ib->second.multiplicity(a))
        throw std::logic_error("edge weight disagreement between settled sets");
      weights.push_back(ia->second.multiplicity(b));
    } else if (ia != sets.end()) {
      weights.push_back(ia->second.multiplicity(b));
    } else if (ib != sets.end()) {
      weights.push_back(ib->second.multiplicity(a));
    } else {
      weights.push_back(1);  // edge between two leaves: no equation involves it
    }
  }
  TotalLabeling t(g, std::move(weights));
  if (!verify_total(t).ok()) throw std::logic_error("total_label output failed verification");
  return t;
}

TotalLabeling minimize_weights(const TotalLabeling& t) {
  if (!verify_total(t).ok())
    throw std::invalid_argument("minimize_weights requires a verified total labeling");
  const auto& edges = t.graph.edges();
  const std::size_t m = edges.size();

  // Edges are coupled when they meet at a non-leaf (they then share an
  // equation); coupled components rescale together.
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int v = 0; v < t.graph.vertex_count(); ++v) {
    if (t.graph.degree(v) <= 1) continue;
    std::size_t first = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (edges[i].first != v && edges[i].second != v) continue;
      if (first == m)
        first = i;
      else
        parent[find(i)] = find(first);
    }
  }

  std::map<std::size_t, Int> gcds;
  for (std::size_t i = 0; i < m; ++i) {
    auto [it, inserted] = gcds.emplace(find(i), t.weights[i]);
    if (!inserted) it->second = boost::multiprecision::gcd(it->second, t.weights[i]);
  }

  std::vector<Int> weights = t.weights;
  for (const auto& [root, g] : gcds) {
    if (g <= 1) continue;
    std::vector<Int> candidate = weights;
    for (std::size_t i = 0; i < m; ++i)
      if (find(i) == root) candidate[i] /= g;
    TotalLabeling reduced(t.graph, candidate);
    if (verify_total(reduced).ok()) weights = std::move(candidate);
  }
  return TotalLabeling(t.graph, std::move(weights));
}

}  // namespace whl
