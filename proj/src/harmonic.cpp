#include "whl/harmonic.hpp"

#include <algorithm>
#include <stdexcept>

namespace whl {

Multiset::Multiset(std::initializer_list<long long> elems) {
  for (long long e : elems) add(e);
}

Multiset Multiset::from_elements(const std::vector<long long>& elems) {
  Multiset m;
  for (long long e : elems) m.add(e);
  return m;
}

void Multiset::add(long long elem, Int mult) {
  if (mult < 1) throw std::invalid_argument("multiset multiplicities must be positive");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), elem,
                             [](const Entry& e, long long x) { return e.first < x; });
  if (it != entries_.end() && it->first == elem)
    it->second += mult;
  else
    entries_.insert(it, {elem, std::move(mult)});
}

Int Multiset::cardinality() const {
  Int c = 0;
  for (const auto& [e, m] : entries_) c += m;
  return c;
}

bool Multiset::contains(long long elem) const {
  return multiplicity(elem) != 0;
}

Int Multiset::multiplicity(long long elem) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), elem,
                             [](const Entry& e, long long x) { return e.first < x; });
  if (it != entries_.end() && it->first == elem) return it->second;
  return 0;
}

long long Multiset::min_element() const {
  if (entries_.empty()) throw std::invalid_argument("empty multiset");
  return entries_.front().first;
}

long long Multiset::max_element() const {
  if (entries_.empty()) throw std::invalid_argument("empty multiset");
  return entries_.back().first;
}

bool Multiset::all_unit() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.second == 1; });
}

Rat average(const Multiset& m) {
  if (m.empty()) throw std::invalid_argument("average of empty multiset");
  Int sum = 0, count = 0;
  for (const auto& [e, mult] : m.entries()) {
    sum += mult * e;
    count += mult;
  }
  return Rat(sum, count);
}

bool is_harmonic(const Multiset& m) {
  if (m.empty()) return false;
  Rat av = average(m);
  if (denominator(av) != 1) return false;
  Int num = numerator(av);
  if (num < m.min_element() || num > m.max_element()) return false;
  return m.contains(num.convert_to<long long>());
}

bool is_nontrivial_harmonic(const Multiset& m) {
  return m.support_size() >= 3 && is_harmonic(m);
}

Multiset scaled(const Multiset& m, const Int& c) {
  if (c < 1) throw std::invalid_argument("scale factor must be positive");
  Multiset out;
  for (const auto& [e, mult] : m.entries()) out.add(e, mult * c);
  return out;
}

Multiset harmonized(const Multiset& m, long long x) {
  if (!m.contains(x)) throw std::invalid_argument("harmonize: element not in support");
  if (x == m.min_element() || x == m.max_element())
    throw std::invalid_argument("harmonize: element must be strictly interior");
  Int below = 0, above = 0;  // P and N of the two-sided scheme
  for (const auto& [e, mult] : m.entries()) {
    if (e < x) below += mult * (x - e);
    if (e > x) above += mult * (e - x);
  }
  Multiset out;
  for (const auto& [e, mult] : m.entries()) {
    if (e < x)
      out.add(e, mult * above);
    else if (e > x)
      out.add(e, mult * below);
    else
      out.add(e, mult);
  }
  return out;
}

bool VerifyReport::ok() const {
  return std::all_of(equations.begin(), equations.end(),
                     [](const VertexEquation& e) { return e.holds(); });
}

std::vector<VertexEquation> VerifyReport::failures() const {
  std::vector<VertexEquation> out;
  for (const auto& e : equations)
    if (!e.holds()) out.push_back(e);
  return out;
}

VerifyReport verify_weak(const LabeledGraph& g) {
  VerifyReport report;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) continue;
    Int lhs = 0;
    for (int w : g.neighbors(v)) lhs += w;
    report.equations.push_back({v, lhs, Int(g.degree(v)) * v});
  }
  return report;
}

VerifyReport verify_weak_multi(const LabeledMultigraph& g) {
  VerifyReport report;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbor_count(v) == 1) continue;
    Int lhs = 0;
    for (const auto& [w, m] : g.neighbors(v)) lhs += m * w;
    report.equations.push_back({v, lhs, g.degree(v) * v});
  }
  return report;
}

bool laplacian_kernel_check(const LabeledGraph& g) {
  const int n = g.vertex_count();
  // L = D - A row by row; leaf rows are dropped, the rest must annihilate
  // the label vector (0,1,...,n-1).
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 1) continue;
    std::vector<Int> row(n, 0);
    row[v] = g.degree(v);
    for (int w : g.neighbors(v)) row[w] -= 1;
    Int dot = 0;
    for (int j = 0; j < n; ++j) dot += row[j] * j;
    if (dot != 0) return false;
  }
  return true;
}

}  // namespace whl
