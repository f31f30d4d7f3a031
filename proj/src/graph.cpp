#include "whl/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace whl {

namespace {

void check_vertex_range(int v, int n) {
  if (v < 0 || v >= n)
    throw std::invalid_argument("vertex " + std::to_string(v) + " outside [0," +
                                std::to_string(n - 1) + "]");
}

void check_n(int n) {
  if (n < 3) throw std::invalid_argument("graphs must have at least three vertices");
}

}  // namespace

LabeledGraph::LabeledGraph(int n, std::vector<Edge> edges) : n_(n) {
  check_n(n);
  for (auto& [a, b] : edges) {
    check_vertex_range(a, n);
    check_vertex_range(b, n);
    if (a == b) throw std::invalid_argument("self-edge at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (const auto& [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool LabeledGraph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

LabeledMultigraph::LabeledMultigraph(int n, std::vector<Edge> edges) : n_(n) {
  check_n(n);
  for (auto& e : edges) {
    check_vertex_range(e.a, n);
    check_vertex_range(e.b, n);
    if (e.a == e.b) throw std::invalid_argument("self-edge at vertex " + std::to_string(e.a));
    if (e.mult < 1) throw std::invalid_argument("edge multiplicity must be positive");
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i - 1].a == edges[i].a && edges[i - 1].b == edges[i].b)
      throw std::invalid_argument("duplicate vertex pair in multigraph edge list");
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (const auto& e : edges_) {
    adj_[e.a].emplace_back(e.b, e.mult);
    adj_[e.b].emplace_back(e.a, e.mult);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

LabeledMultigraph LabeledMultigraph::from_simple(const LabeledGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b, 1});
  return LabeledMultigraph(g.vertex_count(), std::move(edges));
}

Int LabeledMultigraph::degree(int v) const {
  Int d = 0;
  for (const auto& [w, m] : adj_.at(v)) d += m;
  return d;
}

Int LabeledMultigraph::multiplicity(int a, int b) const {
  for (const auto& [w, m] : adj_.at(a))
    if (w == b) return m;
  return 0;
}

LabeledGraph LabeledMultigraph::simplification() const {
  std::vector<LabeledGraph::Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.emplace_back(e.a, e.b);
  return LabeledGraph(n_, std::move(edges));
}

bool LabeledMultigraph::all_unit() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.mult == 1; });
}

std::vector<int> leaves(const LabeledGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

std::vector<int> leaves(const LabeledMultigraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.neighbor_count(v) == 1) out.push_back(v);
  return out;
}

namespace {

template <typename NeighborFn>
std::vector<int> bfs_component(int n, int start, NeighborFn&& nbrs) {
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  std::vector<int> comp{start};
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : nbrs(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        comp.push_back(w);
        q.push(w);
      }
    }
  }
  return comp;
}

}  // namespace

bool is_connected(const LabeledGraph& g) {
  auto comp = bfs_component(g.vertex_count(), 0,
                            [&](int v) -> const std::vector<int>& { return g.neighbors(v); });
  return static_cast<int>(comp.size()) == g.vertex_count();
}

bool is_connected(const LabeledMultigraph& g) {
  return is_connected(g.simplification());
}

std::vector<int> component_sizes(const LabeledGraph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    auto comp = bfs_component(n, v, [&](int u) -> const std::vector<int>& { return g.neighbors(u); });
    for (int u : comp) seen[u] = 1;
    sizes.push_back(static_cast<int>(comp.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

LabeledGraph invert(const LabeledGraph& g) {
  int n = g.vertex_count();
  std::vector<LabeledGraph::Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [a, b] : g.edges()) edges.emplace_back(n - 1 - a, n - 1 - b);
  return LabeledGraph(n, std::move(edges));
}

bool labeled_equal(const LabeledGraph& a, const LabeledGraph& b) {
  return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

bool labeled_equal(const LabeledMultigraph& a, const LabeledMultigraph& b) {
  return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

}  // namespace whl
