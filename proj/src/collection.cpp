#include "whl/collection.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace whl {

namespace {

bool set_less(const Multiset& a, const Multiset& b) {
  Rat ava = average(a), avb = average(b);
  if (ava != avb) return ava < avb;
  return a.entries() < b.entries();
}

std::string set_to_string(const Multiset& s) {
  std::string out;
  bool first = true;
  for (const auto& [e, m] : s.entries()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(e);
    if (m != 1) {
      out += '^';
      out += m.str();
    }
  }
  return out;
}

}  // namespace

HarmonicCollection::HarmonicCollection(CollectionMode mode, std::vector<Multiset> sets)
    : mode_(mode), sets_(std::move(sets)) {
  for (const auto& s : sets_)
    if (s.empty()) throw std::invalid_argument("collection contains an empty set");
  std::sort(sets_.begin(), sets_.end(), set_less);
}

std::string HarmonicCollection::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i) out += ';';
    out += set_to_string(sets_[i]);
  }
  return out;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

long long parse_integer(const std::string& token) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &pos);
  } catch (const std::exception&) {
    throw notation_error("expected an integer", token);
  }
  if (pos != token.size()) throw notation_error("expected an integer", token);
  return value;
}

Multiset parse_explicit_set(const std::string& text) {
  Multiset out;
  for (const std::string& token : split(text, ',')) {
    if (token.empty()) throw notation_error("empty element", text);
    auto caret = token.find('^');
    if (caret == std::string::npos) {
      long long e = parse_integer(token);
      if (out.contains(e)) throw notation_error("duplicate element", token);
      out.add(e);
    } else {
      long long e = parse_integer(token.substr(0, caret));
      std::string mult_text = token.substr(caret + 1);
      if (mult_text.empty() || mult_text[0] == '-')
        throw notation_error("multiplicity must be a positive integer", token);
      Int m;
      try {
        m = Int(mult_text);
      } catch (const std::exception&) {
        throw notation_error("multiplicity must be a positive integer", token);
      }
      if (m < 1) throw notation_error("multiplicity must be a positive integer", token);
      if (out.contains(e)) throw notation_error("duplicate element", token);
      out.add(e, m);
    }
  }
  return out;
}

Multiset parse_compact_set(const std::string& text) {
  if (text.empty()) throw notation_error("empty set", text);
  Multiset out;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw notation_error("compact form admits decimal digits only", std::string(1, c));
    long long e = c - '0';
    if (out.contains(e)) throw notation_error("duplicate element", std::string(1, c));
    out.add(e);
  }
  return out;
}

}  // namespace

HarmonicCollection HarmonicCollection::parse(std::string_view text,
                                             std::optional<CollectionMode> force_mode) {
  std::string s = strip_spaces(text);
  if (!s.empty() && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw notation_error("empty collection", std::string(text));
  const bool compact = s.find(',') == std::string::npos && s.find('^') == std::string::npos;
  std::vector<Multiset> sets;
  for (const std::string& part : split(s, ';'))
    sets.push_back(compact ? parse_compact_set(part) : parse_explicit_set(part));
  CollectionMode mode = CollectionMode::simple;
  for (const auto& set : sets)
    if (!set.all_unit()) mode = CollectionMode::multi;
  if (force_mode) {
    if (*force_mode == CollectionMode::simple && mode == CollectionMode::multi)
      throw notation_error("multiplicities are not allowed in simple mode", s);
    mode = *force_mode;
  }
  return HarmonicCollection(mode, std::move(sets));
}

std::string AxiomReport::summary() const {
  std::ostringstream out;
  out << (members_ok ? "" : "members ")
      << (p1 ? "" : "P1 ") << (p2 ? "" : "P2 ") << (p3 ? "" : "P3 ")
      << (p4 ? "" : "P4 ") << (p5_checked && !p5 ? "P5 " : "");
  std::string failed = out.str();
  if (failed.empty()) return "all axioms hold";
  std::string msg = "failed: " + failed;
  for (const auto& n : notes) msg += "\n  " + n;
  return msg;
}

AxiomReport check_axioms(const HarmonicCollection& c, bool connected) {
  AxiomReport report;
  report.p5_checked = connected;
  const auto& sets = c.sets();
  if (sets.empty()) {
    report.members_ok = false;
    report.notes.push_back("collection is empty");
    return report;
  }

  for (const auto& s : sets) {
    if (!is_nontrivial_harmonic(s)) {
      report.members_ok = false;
      report.notes.push_back("set {" + set_to_string(s) + "} is not a non-trivial harmonic set");
      continue;
    }
    if (c.mode() == CollectionMode::simple && !s.all_unit()) {
      report.members_ok = false;
      report.notes.push_back("set {" + set_to_string(s) + "} carries multiplicities in simple mode");
    }
    if (c.mode() == CollectionMode::multi) {
      long long av = numerator(average(s)).convert_to<long long>();
      if (s.multiplicity(av) != 1) {
        report.members_ok = false;
        report.notes.push_back("set {" + set_to_string(s) +
                               "}: its own average must carry multiplicity 1");
      }
    }
  }

  // P1: the union of the supports is a set of consecutive integers.
  std::set<long long> support;
  for (const auto& s : sets)
    for (const auto& [e, m] : s.entries()) support.insert(e);
  if (*support.rbegin() - *support.begin() + 1 != static_cast<long long>(support.size())) {
    report.p1 = false;
    report.notes.push_back("union of supports is not an integer interval");
  }

  // P2 plus an average -> set index for P3 lookups.
  std::map<Rat, std::size_t> by_average;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Rat av = average(sets[i]);
    auto [it, inserted] = by_average.emplace(av, i);
    if (!inserted) {
      report.p2 = false;
      report.notes.push_back("sets {" + set_to_string(sets[it->second]) + "} and {" +
                             set_to_string(sets[i]) + "} share the average");
    }
  }

  // P3: a label shared by two distinct sets must be some set's average.
  for (std::size_t i = 0; i < sets.size() && report.p3; ++i) {
    for (std::size_t j = i + 1; j < sets.size() && report.p3; ++j) {
      if (sets[i] == sets[j]) continue;
      for (const auto& [e, m] : sets[i].entries()) {
        if (!sets[j].contains(e)) continue;
        if (!by_average.count(Rat(e))) {
          report.p3 = false;
          report.notes.push_back("shared element " + std::to_string(e) +
                                 " is not the average of any set");
          break;
        }
      }
    }
  }

  // P4 / MP4: av(A) in B with multiplicity k forces av(B) in A with the same k.
  for (std::size_t i = 0; i < sets.size() && report.p4; ++i) {
    Rat avi = average(sets[i]);
    if (denominator(avi) != 1) continue;
    long long ai = numerator(avi).convert_to<long long>();
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i == j) continue;
      Int k = sets[j].multiplicity(ai);
      if (k == 0) continue;
      Rat avj = average(sets[j]);
      if (denominator(avj) != 1) continue;
      long long aj = numerator(avj).convert_to<long long>();
      if (sets[i].multiplicity(aj) != k) {
        report.p4 = false;
        report.notes.push_back("average " + std::to_string(ai) + " lies in {" +
                               set_to_string(sets[j]) + "} but " + std::to_string(aj) +
                               " is not matched in {" + set_to_string(sets[i]) + "}");
        break;
      }
    }
  }

  if (connected) {
    // P5: sets linked whenever one average lies in the other set.
    std::vector<char> seen(sets.size(), 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      Rat avi = average(sets[i]);
      for (std::size_t j = 0; j < sets.size(); ++j) {
        if (seen[j]) continue;
        Rat avj = average(sets[j]);
        bool linked = (denominator(avi) == 1 &&
                       sets[j].contains(numerator(avi).convert_to<long long>())) ||
                      (denominator(avj) == 1 &&
                       sets[i].contains(numerator(avj).convert_to<long long>()));
        if (linked) {
          seen[j] = 1;
          ++reached;
          q.push(j);
        }
      }
    }
    if (reached != sets.size()) {
      report.p5 = false;
      report.notes.push_back("collection is not connected through its averages");
    }
  }

  return report;
}

HarmonicCollection extract(const LabeledGraph& g) {
  if (!verify_weak(g).ok())
    throw std::invalid_argument("extract requires a weakly harmonic labeled graph");
  std::vector<Multiset> sets;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) continue;
    Multiset s;
    s.add(v);
    for (int w : g.neighbors(v)) s.add(w);
    sets.push_back(std::move(s));
  }
  return HarmonicCollection(CollectionMode::simple, std::move(sets));
}

HarmonicCollection extract(const LabeledMultigraph& g) {
  if (!verify_weak_multi(g).ok())
    throw std::invalid_argument("extract requires a weakly harmonic labeled multigraph");
  std::vector<Multiset> sets;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbor_count(v) == 1) continue;
    Multiset s;
    s.add(v);
    for (const auto& [w, m] : g.neighbors(v)) s.add(w, m);
    sets.push_back(std::move(s));
  }
  return HarmonicCollection(CollectionMode::multi, std::move(sets));
}

namespace {

struct BuildParts {
  int n = 0;
  std::vector<LabeledMultigraph::Edge> edges;
  std::vector<long long> expected_nonleaves;  // translated averages, sorted
};

BuildParts build_parts(const HarmonicCollection& c) {
  AxiomReport axioms = check_axioms(c, /*connected=*/false);
  if (!axioms.pass()) throw axiom_error(std::move(axioms));

  long long lo = c.sets().front().min_element(), hi = c.sets().front().max_element();
  for (const auto& s : c.sets()) {
    lo = std::min(lo, s.min_element());
    hi = std::max(hi, s.max_element());
  }

  BuildParts parts;
  parts.n = static_cast<int>(hi - lo + 1);
  std::map<std::pair<int, int>, Int> mult;
  for (const auto& s : c.sets()) {
    long long av = numerator(average(s)).convert_to<long long>();
    int i = static_cast<int>(av - lo);
    parts.expected_nonleaves.push_back(i);
    for (const auto& [e, m] : s.entries()) {
      if (e == av) continue;
      int j = static_cast<int>(e - lo);
      auto key = std::minmax(i, j);
      auto [it, inserted] = mult.emplace(std::make_pair(key.first, key.second), m);
      if (!inserted && it->second != m)
        throw std::logic_error("inconsistent multiplicity for edge surviving P4");
    }
  }
  for (const auto& [key, m] : mult) parts.edges.push_back({key.first, key.second, m});
  std::sort(parts.expected_nonleaves.begin(), parts.expected_nonleaves.end());
  return parts;
}

template <typename Graph>
void check_build_postconditions(const Graph& g, const std::vector<long long>& expected_nonleaves,
                                const VerifyReport& report) {
  if (!report.ok()) throw std::logic_error("built graph fails verification");
  std::vector<long long> nonleaves;
  for (const auto& eq : report.equations) nonleaves.push_back(eq.vertex);
  if (nonleaves != expected_nonleaves)
    throw std::logic_error("built graph's non-leaves differ from the collection's averages");
}

}  // namespace

LabeledGraph build_graph(const HarmonicCollection& c) {
  BuildParts parts = build_parts(c);
  std::vector<LabeledGraph::Edge> edges;
  edges.reserve(parts.edges.size());
  for (const auto& e : parts.edges) {
    if (e.mult != 1)
      throw std::invalid_argument("collection carries multiplicities; build a multigraph instead");
    edges.emplace_back(e.a, e.b);
  }
  LabeledGraph g(parts.n, std::move(edges));
  check_build_postconditions(g, parts.expected_nonleaves, verify_weak(g));
  return g;
}

LabeledMultigraph build_multigraph(const HarmonicCollection& c) {
  BuildParts parts = build_parts(c);
  LabeledMultigraph g(parts.n, std::move(parts.edges));
  check_build_postconditions(g, parts.expected_nonleaves, verify_weak_multi(g));
  return g;
}

HarmonicCollection inverted(const HarmonicCollection& c) {
  long long lo = c.sets().front().min_element(), hi = c.sets().front().max_element();
  for (const auto& s : c.sets()) {
    lo = std::min(lo, s.min_element());
    hi = std::max(hi, s.max_element());
  }
  std::vector<Multiset> sets;
  for (const auto& s : c.sets()) {
    Multiset t;
    for (const auto& [e, m] : s.entries()) t.add(lo + hi - e, m);
    sets.push_back(std::move(t));
  }
  return HarmonicCollection(c.mode(), std::move(sets));
}

bool roundtrip_check(const LabeledGraph& g) {
  HarmonicCollection c = extract(g);
  LabeledGraph rebuilt = build_graph(c);
  return labeled_equal(rebuilt, g) && extract(rebuilt) == c;
}

bool roundtrip_check(const LabeledMultigraph& g) {
  HarmonicCollection c = extract(g);
  LabeledMultigraph rebuilt = build_multigraph(c);
  return labeled_equal(rebuilt, g) && extract(rebuilt) == c;
}

}  // namespace whl
