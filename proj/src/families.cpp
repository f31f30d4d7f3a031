#include "whl/families.hpp"

#include <algorithm>
#include <set>

namespace whl {

namespace {

void require_verified(const LabeledGraph& g, const char* what) {
  if (!verify_weak(g).ok())
    throw std::logic_error(std::string(what) + " failed its verification postcondition");
}

}  // namespace

LabeledGraph path_graph(int n) {
  std::vector<LabeledGraph::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  LabeledGraph g(n, std::move(edges));
  require_verified(g, "path_graph");
  return g;
}

LabeledGraph star_graph(int leaf_count) {
  if (leaf_count < 2 || leaf_count % 2 != 0)
    throw std::invalid_argument("star requires an even leaf count (center average)");
  const int center = leaf_count / 2;
  std::vector<LabeledGraph::Edge> edges;
  for (int v = 0; v <= leaf_count; ++v)
    if (v != center) edges.emplace_back(v, center);
  LabeledGraph g(leaf_count + 1, std::move(edges));
  require_verified(g, "star_graph");
  return g;
}

LabeledGraph star_path(int m, int n, int k) {
  if (m < 1) throw std::invalid_argument("star_path requires m >= 1");
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("star_path requires odd n >= 3");
  if (k < 0 || k > (n - 1) / 2)
    throw std::invalid_argument("star_path requires 0 <= k <= (n-1)/2");
  const int total = (n - 1) * m + 1;
  const int center = (n - 1) * m / 2;
  std::vector<char> on_path(total, 0);
  std::vector<LabeledGraph::Edge> edges;
  for (int t = k; t <= n - k - 1; ++t) {
    on_path[t * m] = 1;
    if (t < n - k - 1) edges.emplace_back(t * m, (t + 1) * m);
  }
  for (int v = 0; v < total; ++v)
    if (!on_path[v] && v != center) edges.emplace_back(v, center);
  LabeledGraph g(total, std::move(edges));
  require_verified(g, "star_path");
  return g;
}

LabeledGraph c_grid(int k, int h) {
  if (k < 2 || h < 2) throw std::invalid_argument("c_grid requires k >= 2 and h >= 2");
  const int total = (h + 1) * k - 1;
  std::vector<LabeledGraph::Edge> edges;
  for (int a = k - 1; a <= h * k - 2; ++a) edges.emplace_back(a, a + 1);
  for (int a = 0; a <= h * k - 2; ++a)
    if (a % k != k - 1) edges.emplace_back(a, a + k);
  LabeledGraph g(total, std::move(edges));
  require_verified(g, "c_grid");
  return g;
}

namespace {

// The unique neighbor of the glued leaf, or a coalesce_error.
int glue_neighbor(const LabeledGraph& g, int vertex, CoalesceError code, const char* side) {
  if (g.degree(vertex) != 1)
    throw coalesce_error(code, std::string(side) + " glue vertex " + std::to_string(vertex) +
                                   " is not a leaf");
  return g.neighbors(vertex)[0];
}

}  // namespace

LabeledGraph coalesce(const LabeledGraph& left, const LabeledGraph& right) {
  const int n = left.vertex_count();
  int v = glue_neighbor(left, n - 1, CoalesceError::left_end_not_leaf, "left");
  int w = glue_neighbor(right, 0, CoalesceError::right_start_not_leaf, "right");
  if (v + w != n - 1)
    throw coalesce_error(CoalesceError::label_sum_mismatch,
                         "neighbor labels " + std::to_string(v) + " + " + std::to_string(w) +
                             " != " + std::to_string(n - 1));
  if (!verify_weak(left).ok() || !verify_weak(right).ok())
    throw std::invalid_argument("coalesce requires weakly harmonic operands");
  std::vector<LabeledGraph::Edge> edges = left.edges();
  for (const auto& [a, b] : right.edges()) edges.emplace_back(a + n - 1, b + n - 1);
  LabeledGraph g(n + right.vertex_count() - 1, std::move(edges));
  require_verified(g, "coalesce");
  return g;
}

WindowedFamily WindowedFamily::pb(std::vector<SpanPair> base, bool half_line) {
  std::sort(base.begin(), base.end());
  if (std::adjacent_find(base.begin(), base.end()) != base.end())
    throw std::invalid_argument("pb base pairs must be pairwise distinct");
  for (const auto& p : base) {
    if (p.span < 2) throw std::invalid_argument("pb spans must be at least 2");
    if (p.residue < 0 || p.residue >= p.span)
      throw std::invalid_argument("pb residues must lie in [0, span-1]");
  }
  WindowedFamily f;
  f.kind_ = Kind::pb;
  f.base_ = std::move(base);
  f.half_line_ = half_line;
  return f;
}

WindowedFamily WindowedFamily::inner_cylinder(LabeledGraph base) {
  if (!verify_weak(base).ok())
    throw std::invalid_argument("inner cylinder requires a verified base labeling");
  WindowedFamily f;
  f.kind_ = Kind::inner_cylinder;
  f.graph_ = std::make_shared<const LabeledGraph>(std::move(base));
  return f;
}

WindowedFamily WindowedFamily::extended(LabeledGraph head) {
  if (!verify_weak(head).ok())
    throw std::invalid_argument("extended family requires a verified head labeling");
  const int n = head.vertex_count();
  int v = glue_neighbor(head, n - 1, CoalesceError::left_end_not_leaf, "head");
  if (v != n - 2)
    throw coalesce_error(CoalesceError::label_sum_mismatch,
                         "ray attachment needs the glue neighbor labeled n-2");
  WindowedFamily f;
  f.kind_ = Kind::extended;
  f.half_line_ = true;
  f.graph_ = std::make_shared<const LabeledGraph>(std::move(head));
  return f;
}

IntegerInterval WindowedFamily::domain() const {
  IntegerInterval d;
  if (half_line_) d.lo = 0;
  return d;
}

std::vector<long long> WindowedFamily::neighbor_labels(long long label) const {
  std::vector<long long> out;
  switch (kind_) {
    case Kind::pb: {
      out.push_back(label - 1);
      out.push_back(label + 1);
      for (const auto& p : base_) {
        long long r = ((label % p.span) + p.span) % p.span;
        if (r == p.residue) {
          out.push_back(label - p.span);
          out.push_back(label + p.span);
        }
      }
      break;
    }
    case Kind::inner_cylinder: {
      const LabeledGraph& g = *graph_;
      const long long n = g.vertex_count();
      long long v = ((label % n) + n) % n;
      long long layer = (label - v) / n;
      for (int w : g.neighbors(static_cast<int>(v))) out.push_back(w + layer * n);
      if (g.degree(static_cast<int>(v)) >= 2) {
        out.push_back(v + (layer - 1) * n);
        out.push_back(v + (layer + 1) * n);
      }
      break;
    }
    case Kind::extended: {
      const LabeledGraph& g = *graph_;
      const long long n = g.vertex_count();
      if (label < n - 1) {
        for (int w : g.neighbors(static_cast<int>(label))) out.push_back(w);
      } else if (label == n - 1) {
        for (int w : g.neighbors(static_cast<int>(label))) out.push_back(w);
        out.push_back(n);
      } else {
        out.push_back(label - 1);
        out.push_back(label + 1);
      }
      break;
    }
  }
  if (half_line_)
    out.erase(std::remove_if(out.begin(), out.end(), [](long long x) { return x < 0; }),
              out.end());
  std::sort(out.begin(), out.end());
  return out;
}

WindowedFamily coalesce(const LabeledGraph& left, const WindowedFamily& right) {
  if (!right.domain().lo || *right.domain().lo != 0)
    throw std::invalid_argument("right family must live on [0,inf)");
  if (right.kind() == WindowedFamily::Kind::extended)
    return WindowedFamily::extended(coalesce(left, *right.base_graph()));
  if (right.kind() == WindowedFamily::Kind::pb && right.base_pairs().empty()) {
    // Bare ray: its vertex 0 is a leaf with neighbor 1, so the label-sum
    // condition asks the left glue neighbor to carry n-2.
    return WindowedFamily::extended(left);
  }
  throw std::invalid_argument(
      "right family must be the ray or an extended family (vertex 0 must be a leaf "
      "of a weakly labeled family)");
}

bool WindowReport::ok() const {
  return std::all_of(equations.begin(), equations.end(),
                     [](const LabelEquation& e) { return e.holds(); });
}

std::vector<LabelEquation> WindowReport::failures() const {
  std::vector<LabelEquation> out;
  for (const auto& e : equations)
    if (!e.holds()) out.push_back(e);
  return out;
}

WindowReport verify_window(const WindowedFamily& f, long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("window requires lo <= hi");
  IntegerInterval dom = f.domain();
  if (dom.lo) lo = std::max(lo, *dom.lo);
  WindowReport report;
  for (long long t = lo; t <= hi; ++t) {
    auto nb = f.neighbor_labels(t);
    if (nb.size() < 2) continue;  // leaves are exempt
    Int lhs = 0;
    for (long long w : nb) lhs += w;
    report.equations.push_back({t, lhs, Int(nb.size()) * t});
  }
  return report;
}

FamilyWindow materialize_window(const WindowedFamily& f, long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("window requires lo <= hi");
  IntegerInterval dom = f.domain();
  if (dom.lo) lo = std::max(lo, *dom.lo);
  FamilyWindow window;
  for (long long t = lo; t <= hi; ++t) window.labels.push_back(t);
  for (long long t = lo; t <= hi; ++t) {
    for (long long w : f.neighbor_labels(t)) {
      if (w <= t || w > hi) continue;
      window.edges.emplace_back(static_cast<int>(t - lo), static_cast<int>(w - lo));
    }
  }
  std::sort(window.edges.begin(), window.edges.end());
  return window;
}

StrongWindowReport verify_harmonic_window(const WindowedFamily& f, long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("window requires lo <= hi");
  IntegerInterval dom = f.domain();
  if (dom.lo) lo = std::max(lo, *dom.lo);
  StrongWindowReport report;
  for (long long t = lo; t <= hi; ++t) {
    auto nb = f.neighbor_labels(t);
    if (nb.size() < 2) {
      report.leaf_labels.push_back(t);
      continue;
    }
    Int lhs = 0;
    for (long long w : nb) lhs += w;
    if (lhs != Int(nb.size()) * t) report.failures.push_back({t, lhs, Int(nb.size()) * t});
    for (long long w : nb) {
      if (w < lo || w > hi) continue;
      auto back = f.neighbor_labels(w);
      if (!std::binary_search(back.begin(), back.end(), t))
        report.asymmetries.push_back(std::to_string(t) + " -> " + std::to_string(w) +
                                     " is not symmetric");
    }
  }
  return report;
}

bool distinct_bases_distinct_graphs(std::vector<SpanPair> b1, std::vector<SpanPair> b2,
                                    long long lo, long long hi) {
  std::sort(b1.begin(), b1.end());
  std::sort(b2.begin(), b2.end());
  long long max_span = 2;
  for (const auto& p : b1) max_span = std::max(max_span, p.span);
  for (const auto& p : b2) max_span = std::max(max_span, p.span);
  if (hi - lo + 1 < 2 * max_span)
    throw std::invalid_argument("window must span at least twice the largest chord span");
  auto w1 = materialize_window(WindowedFamily::pb(b1), lo, hi);
  auto w2 = materialize_window(WindowedFamily::pb(b2), lo, hi);
  return (b1 == b2) == (w1.edges == w2.edges);
}

SpanningCheck spanning_check(int k) {
  if (k < 2) throw std::invalid_argument("spanning_check requires k >= 2");
  std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k + 1, 0));
  a[0][0] = 1;
  a[0][k - 1] += 1;
  a[0][k] = 3 * k + 1;
  a[1][0] = 2;
  a[1][1] = -1;
  a[1][k] = k;
  for (int j = 2; j < k; ++j) {
    a[j][j - 2] = -1;
    a[j][j - 1] = 2;
    a[j][j] = -1;
  }

  SpanningCheck result;
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int row = col; row < k; ++row)
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) {
      result.note = "matrix is singular";
      return result;
    }
    std::swap(a[col], a[pivot]);
    for (int row = 0; row < k; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rat factor = a[row][col] / a[col][col];
      for (int j = col; j <= k; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  result.solution.resize(k);
  bool expected = true;
  for (int j = 0; j < k; ++j) {
    result.solution[j] = a[j][k] / a[j][j];
    if (result.solution[j] != Rat(k + 1 + j)) expected = false;
  }
  if (!expected) {
    result.note = "solution differs from (k+1,...,2k)";
    return result;
  }
  result.ok = true;
  return result;
}

}  // namespace whl
