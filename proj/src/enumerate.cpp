#include "whl/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <stdexcept>
#include <thread>

namespace whl {

std::vector<std::string> Catalog::serialized() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& c : entries) out.push_back(c.to_string());
  return out;
}

namespace {

// Backtracking over one choice of the average set M (the non-leaves).
// Each t in M needs a closed neighborhood with weighted deviation sum zero;
// elements of M pair up symmetrically (P4), every other label is owned by
// exactly one set (P3), and the union covers [0,n-1] (P1).
class MaskSearch {
 public:
  MaskSearch(const EnumOptions& opts, std::vector<int> avgs, std::vector<HarmonicCollection>& out)
      : opts_(opts), avgs_(std::move(avgs)), out_(out) {
    m_ = avgs_.size();
    for (int v = 0; v < opts_.n; ++v)
      if (!std::binary_search(avgs_.begin(), avgs_.end(), v)) leaf_labels_.push_back(v);
    adj_mult_.assign(m_, std::vector<long long>(m_, 0));
    fixed_dev_.assign(m_, 0);
    fixed_cnt_.assign(m_, 0);
    leaf_owner_.assign(leaf_labels_.size(), -1);
    leaf_mult_.assign(leaf_labels_.size(), 0);
  }

  void run() { assign_level(0); }

 private:
  struct Cand {
    long long dev;
    bool is_leaf;
    std::size_t idx;  // avg index or leaf index
  };

  // Per-level candidate state; each recursion level owns its instance.
  struct Level {
    std::vector<Cand> cands;
    std::vector<long long> choice;
    std::vector<long long> suf_min, suf_max;  // reachable deviation bounds
    bool last = false;
  };

  void assign_level(std::size_t level) {
    if (level == m_) {
      emit();
      return;
    }
    const long long t = avgs_[level];
    Level st;
    st.last = level + 1 == m_;
    if (!st.last)
      for (std::size_t j = level + 1; j < m_; ++j)
        st.cands.push_back({avgs_[j] - t, false, j});
    for (std::size_t l = 0; l < leaf_labels_.size(); ++l)
      if (leaf_owner_[l] < 0) st.cands.push_back({leaf_labels_[l] - t, true, l});
    std::sort(st.cands.begin(), st.cands.end(),
              [](const Cand& a, const Cand& b) { return a.dev < b.dev; });

    // On the last level every remaining leaf is forced in (multiplicity >= 1).
    const std::size_t k = st.cands.size();
    st.suf_min.assign(k + 1, 0);
    st.suf_max.assign(k + 1, 0);
    for (std::size_t p = k; p-- > 0;) {
      long long lo_q = st.last ? 1 : 0;
      long long d = st.cands[p].dev;
      long long a = lo_q * d, b = opts_.max_multiplicity * d;
      st.suf_min[p] = st.suf_min[p + 1] + std::min(a, b);
      st.suf_max[p] = st.suf_max[p + 1] + std::max(a, b);
    }

    st.choice.assign(k, 0);
    choose(level, st, 0, -fixed_dev_[level], 0);
  }

  void choose(std::size_t level, Level& st, std::size_t pos, long long remaining, int chosen) {
    if (remaining < st.suf_min[pos] || remaining > st.suf_max[pos]) return;
    if (pos == st.cands.size()) {
      if (remaining != 0) return;
      if (1 + fixed_cnt_[level] + chosen < 3) return;  // non-trivial support
      apply_and_descend(level, st);
      return;
    }
    const long long dev = st.cands[pos].dev;
    const long long q0 = st.last ? 1 : 0;
    for (long long q = q0; q <= opts_.max_multiplicity; ++q) {
      st.choice[pos] = q;
      choose(level, st, pos + 1, remaining - q * dev, chosen + (q > 0 ? 1 : 0));
    }
    st.choice[pos] = 0;
  }

  void apply_and_descend(std::size_t level, const Level& st) {
    const long long t = avgs_[level];
    std::vector<std::pair<std::size_t, long long>> applied_avgs, applied_leaves;
    for (std::size_t p = 0; p < st.cands.size(); ++p) {
      long long q = st.choice[p];
      if (q == 0) continue;
      const Cand& c = st.cands[p];
      if (c.is_leaf) {
        leaf_owner_[c.idx] = static_cast<int>(level);
        leaf_mult_[c.idx] = q;
        applied_leaves.push_back({c.idx, q});
      } else {
        adj_mult_[level][c.idx] = q;
        adj_mult_[c.idx][level] = q;
        fixed_dev_[c.idx] += q * (t - avgs_[c.idx]);
        fixed_cnt_[c.idx] += 1;
        applied_avgs.push_back({c.idx, q});
      }
    }

    assign_level(level + 1);

    for (const auto& [j, q] : applied_avgs) {
      adj_mult_[level][j] = 0;
      adj_mult_[j][level] = 0;
      fixed_dev_[j] -= q * (t - avgs_[j]);
      fixed_cnt_[j] -= 1;
    }
    for (const auto& [l, q] : applied_leaves) {
      leaf_owner_[l] = -1;
      leaf_mult_[l] = 0;
    }
  }

  void emit() {
    if (opts_.connected && !averages_connected()) return;
    std::vector<Multiset> sets(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      sets[i].add(avgs_[i]);
      for (std::size_t j = 0; j < m_; ++j)
        if (adj_mult_[i][j] > 0) sets[i].add(avgs_[j], adj_mult_[i][j]);
    }
    for (std::size_t l = 0; l < leaf_labels_.size(); ++l)
      sets[leaf_owner_[l]].add(leaf_labels_[l], leaf_mult_[l]);
    CollectionMode mode =
        opts_.max_multiplicity > 1 ? CollectionMode::multi : CollectionMode::simple;
    out_.emplace_back(mode, std::move(sets));
  }

  bool averages_connected() const {
    std::vector<char> seen(m_, 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < m_; ++j) {
        if (!seen[j] && adj_mult_[i][j] > 0) {
          seen[j] = 1;
          ++reached;
          q.push(j);
        }
      }
    }
    return reached == m_;
  }

  const EnumOptions& opts_;
  std::vector<int> avgs_;
  std::vector<HarmonicCollection>& out_;
  std::size_t m_ = 0;
  std::vector<long long> leaf_labels_;
  std::vector<std::vector<long long>> adj_mult_;
  std::vector<long long> fixed_dev_;
  std::vector<int> fixed_cnt_;
  std::vector<int> leaf_owner_;
  std::vector<long long> leaf_mult_;
};

void search_mask(const EnumOptions& opts, unsigned mask, std::vector<HarmonicCollection>& out) {
  std::vector<int> avgs;
  for (int v = 1; v <= opts.n - 2; ++v)
    if (mask & (1u << (v - 1))) avgs.push_back(v);
  if (avgs.empty()) return;
  MaskSearch(opts, std::move(avgs), out).run();
}

void validate(const EnumOptions& opts) {
  if (opts.n < 3) throw std::invalid_argument("enumeration requires n >= 3");
  if (opts.n > opts.n_limit)
    throw std::invalid_argument("n exceeds the configured limit (" +
                                std::to_string(opts.n_limit) +
                                "); raise n_limit if the runtime is acceptable");
  if (opts.n > 30) throw std::invalid_argument("enumeration supports n <= 30");
  if (opts.max_multiplicity < 1)
    throw std::invalid_argument("max_multiplicity must be at least 1");
  if (opts.max_multiplicity > 1000000)
    throw std::invalid_argument("max_multiplicity beyond 1e6 is not supported");
}

}  // namespace

Catalog enumerate_collections(const EnumOptions& opts) {
  validate(opts);
  const unsigned mask_count = 1u << (opts.n - 2);
  std::vector<std::vector<HarmonicCollection>> per_mask(mask_count);

  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    for (unsigned mask = 1; mask < mask_count; ++mask)
      search_mask(opts, mask, per_mask[mask]);
  } else {
    std::atomic<unsigned> next{1};
    auto worker = [&]() {
      for (unsigned mask = next.fetch_add(1); mask < mask_count; mask = next.fetch_add(1))
        search_mask(opts, mask, per_mask[mask]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Catalog catalog;
  catalog.options = opts;
  for (auto& chunk : per_mask)
    for (auto& c : chunk) catalog.entries.push_back(std::move(c));

  if (opts.dedup_inversion) {
    for (auto& c : catalog.entries) {
      HarmonicCollection inv = inverted(c);
      if (inv.to_string() < c.to_string()) c = std::move(inv);
    }
  }
  std::sort(catalog.entries.begin(), catalog.entries.end(),
            [](const HarmonicCollection& a, const HarmonicCollection& b) {
              return a.to_string() < b.to_string();
            });
  catalog.entries.erase(std::unique(catalog.entries.begin(), catalog.entries.end()),
                        catalog.entries.end());
  return catalog;
}

Catalog brute_force_oracle(int n) {
  if (n < 3) throw std::invalid_argument("oracle requires n >= 3");
  if (n > 7) throw std::invalid_argument("brute-force oracle is limited to n <= 7");

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  const int e = static_cast<int>(pairs.size());

  Catalog catalog;
  catalog.options = EnumOptions{n};
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << e); ++mask) {
    int deg[8] = {0};
    long long sum[8] = {0};
    unsigned adj[8] = {0};
    for (int i = 0; i < e; ++i) {
      if (!(mask >> i & 1)) continue;
      auto [a, b] = pairs[i];
      ++deg[a], ++deg[b];
      sum[a] += b, sum[b] += a;
      adj[a] |= 1u << b, adj[b] |= 1u << a;
    }
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (deg[v] == 0) ok = false;  // isolated vertex: disconnected
      if (deg[v] > 1 && sum[v] != static_cast<long long>(deg[v]) * v) ok = false;
    }
    if (!ok) continue;
    unsigned reach = 1;
    for (;;) {
      unsigned grown = reach;
      for (int v = 0; v < n; ++v)
        if (reach >> v & 1) grown |= adj[v];
      if (grown == reach) break;
      reach = grown;
    }
    if (reach != (1u << n) - 1) continue;

    std::vector<Multiset> sets;
    for (int v = 0; v < n; ++v) {
      if (deg[v] == 1) continue;
      Multiset s;
      s.add(v);
      for (int w = 0; w < n; ++w)
        if (adj[v] >> w & 1) s.add(w);
      sets.push_back(std::move(s));
    }
    catalog.entries.emplace_back(CollectionMode::simple, std::move(sets));
  }
  std::sort(catalog.entries.begin(), catalog.entries.end(),
            [](const HarmonicCollection& a, const HarmonicCollection& b) {
              return a.to_string() < b.to_string();
            });
  return catalog;
}

Catalog disconnected_samples(int n) {
  EnumOptions opts;
  opts.n = n;
  opts.connected = false;
  Catalog all = enumerate_collections(opts);
  Catalog out;
  out.options = opts;
  for (auto& c : all.entries) {
    LabeledGraph g = build_graph(c);
    if (is_connected(g)) continue;
    for (int size : component_sizes(g))
      if (size < 3) throw std::logic_error("disconnected sample has a component below 3 vertices");
    out.entries.push_back(std::move(c));
  }
  return out;
}

LabeledGraph disjoint_copies(const LabeledGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("copy count must be positive");
  if (!verify_weak(g).ok())
    throw std::invalid_argument("disjoint_copies requires a weakly harmonic input");
  if (k == 1) return g;
  const int n = g.vertex_count();
  std::vector<LabeledGraph::Edge> edges;
  edges.reserve(g.edges().size() * k);
  for (int copy = 1; copy <= k; ++copy)
    for (const auto& [a, b] : g.edges())
      edges.emplace_back(k * a + copy - 1, k * b + copy - 1);
  return LabeledGraph(n * k, std::move(edges));
}

}  // namespace whl
