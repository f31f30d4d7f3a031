#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "whl/collection.hpp"
#include "whl/dot.hpp"
#include "whl/enumerate.hpp"
#include "whl/families.hpp"
#include "whl/json_io.hpp"
#include "whl/total.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsageError = 2;

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

whl::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open '" + path + "'");
  try {
    return whl::json::parse(in);
  } catch (const whl::json::parse_error& e) {
    throw usage_error(std::string("malformed JSON in '") + path + "': " + e.what());
  }
}

void print_report(const whl::VerifyReport& report) {
  for (const auto& eq : report.equations) {
    std::cout << "vertex " << eq.vertex << ": sum=" << eq.lhs << " deg*label=" << eq.rhs
              << (eq.holds() ? " ok" : " FAIL") << "\n";
  }
  std::cout << (report.ok() ? "verified" : "not a weak harmonic labeling") << "\n";
}

int cmd_verify(const std::string& path, bool multi, bool total, bool as_json) {
  whl::json j = load_json(path);
  whl::VerifyReport report;
  if (total) {
    report = whl::verify_total(whl::total_from_json(j));
  } else if (multi || whl::json_edges_weighted(j)) {
    report = whl::verify_weak_multi(whl::multigraph_from_json(j));
  } else {
    report = whl::verify_weak(whl::graph_from_json(j));
  }
  if (as_json)
    std::cout << whl::report_to_json(report).dump(2) << "\n";
  else
    print_report(report);
  return report.ok() ? kOk : kDomainFailure;
}

int cmd_extract(const std::string& path, bool multi) {
  whl::json j = load_json(path);
  if (multi || whl::json_edges_weighted(j)) {
    whl::LabeledMultigraph g = whl::multigraph_from_json(j);
    whl::VerifyReport report = whl::verify_weak_multi(g);
    if (!report.ok()) {
      std::cerr << "input is not weakly harmonic; failing vertices:";
      for (const auto& eq : report.failures()) std::cerr << ' ' << eq.vertex;
      std::cerr << "\n";
      return kDomainFailure;
    }
    std::cout << whl::extract(g).to_string() << "\n";
  } else {
    whl::LabeledGraph g = whl::graph_from_json(j);
    whl::VerifyReport report = whl::verify_weak(g);
    if (!report.ok()) {
      std::cerr << "input is not weakly harmonic; failing vertices:";
      for (const auto& eq : report.failures()) std::cerr << ' ' << eq.vertex;
      std::cerr << "\n";
      return kDomainFailure;
    }
    std::cout << whl::extract(g).to_string() << "\n";
  }
  return kOk;
}

int cmd_build(const std::string& notation, bool multi) {
  std::optional<whl::CollectionMode> mode;
  if (multi) mode = whl::CollectionMode::multi;
  whl::HarmonicCollection c = whl::HarmonicCollection::parse(notation, mode);
  try {
    if (c.mode() == whl::CollectionMode::multi)
      std::cout << whl::multigraph_to_json(whl::build_multigraph(c)).dump(2) << "\n";
    else
      std::cout << whl::graph_to_json(whl::build_graph(c)).dump(2) << "\n";
  } catch (const whl::axiom_error& e) {
    std::cerr << e.report().summary() << "\n";
    return kDomainFailure;
  }
  return kOk;
}

int cmd_enumerate(const whl::EnumOptions& opts, bool disconnected, const std::string& out_path,
                  const std::string& dot_dir) {
  whl::Catalog catalog =
      disconnected ? whl::disconnected_samples(opts.n) : whl::enumerate_collections(opts);
  std::string text = whl::catalog_to_json(catalog).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw usage_error("cannot write '" + out_path + "'");
    out << text;
  }
  if (!dot_dir.empty()) {
    for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
      const auto& entry = catalog.entries[i];
      std::string path = dot_dir + "/catalog_n" + std::to_string(opts.n) + "_" +
                         std::to_string(i) + ".dot";
      std::ofstream out(path);
      if (!out) throw usage_error("cannot write '" + path + "'");
      if (entry.mode() == whl::CollectionMode::multi)
        out << whl::to_dot(whl::build_multigraph(entry));
      else
        out << whl::to_dot(whl::build_graph(entry));
    }
  }
  return kOk;
}

std::vector<whl::SpanPair> parse_base(const std::string& text) {
  std::vector<whl::SpanPair> base;
  if (text.empty()) return base;
  std::string token;
  auto flush = [&]() {
    auto colon = token.find(':');
    if (colon == std::string::npos)
      throw usage_error("base pairs use the form residue:span, got '" + token + "'");
    try {
      base.push_back({std::stoll(token.substr(0, colon)), std::stoll(token.substr(colon + 1))});
    } catch (const std::exception&) {
      throw usage_error("base pairs use the form residue:span, got '" + token + "'");
    }
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(ch)))
      token += ch;
  }
  flush();
  return base;
}

int emit_window(const whl::WindowedFamily& family, long long lo, long long hi, bool check) {
  whl::FamilyWindow window = whl::materialize_window(family, lo, hi);
  std::cout << whl::window_to_json(window).dump(2) << "\n";
  if (check) {
    whl::WindowReport report = whl::verify_window(family, lo, hi);
    if (!report.ok()) {
      for (const auto& eq : report.failures())
        std::cerr << "label " << eq.label << ": sum=" << eq.lhs << " deg*label=" << eq.rhs
                  << " FAIL\n";
      return kDomainFailure;
    }
  }
  return kOk;
}

int cmd_total(const std::string& path) {
  whl::LabeledGraph g = whl::graph_from_json(load_json(path));
  whl::AdmissibilityReport adm = whl::check_admissible(g);
  if (!adm.ok()) {
    std::cerr << "not admissible at vertices:";
    for (int v : adm.failing) std::cerr << ' ' << v;
    std::cerr << "\n";
    return kDomainFailure;
  }
  std::cout << whl::total_to_json(whl::total_label(g)).dump(2) << "\n";
  return kOk;
}

int cmd_export_dot(const std::string& in_path, const std::string& out_path) {
  whl::json j = load_json(in_path);
  std::string dot;
  if (j.is_object() && j.contains("labels")) {
    whl::FamilyWindow w;
    for (const auto& l : j["labels"]) w.labels.push_back(l.get<long long>());
    for (const auto& e : j["edges"]) w.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    dot = whl::to_dot(w);
  } else if (whl::json_edges_weighted(j)) {
    dot = whl::to_dot(whl::multigraph_from_json(j));
  } else {
    dot = whl::to_dot(whl::graph_from_json(j));
  }
  std::ofstream out(out_path);
  if (!out) throw usage_error("cannot write '" + out_path + "'");
  out << dot;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak harmonic labelings: verify, build, enumerate, generate families"};
  app.require_subcommand(1);

  std::string graph_path, notation, out_path, in_path, base_text, left_path, right_path, dot_dir;
  bool multi = false, total = false, as_json = false, disconnected = false;
  bool dedup = false, half_line = false, check = false;
  long long lo = 0, hi = 0;
  int m = 1, n = 3, k = 0, h = 2;
  whl::EnumOptions opts;

  auto* verify = app.add_subcommand("verify", "check a labeling, exit 0 iff it verifies");
  verify->add_option("graph", graph_path)->required();
  verify->add_flag("--multi", multi, "treat input as a multigraph");
  verify->add_flag("--total", total, "treat input as a total labeling (weights >= 1)");
  verify->add_flag("--json", as_json, "machine-readable per-vertex report");

  auto* extract = app.add_subcommand("extract", "harmonic collection of a verified labeling");
  extract->add_option("graph", graph_path)->required();
  extract->add_flag("--multi", multi);

  auto* build = app.add_subcommand("build", "rebuild the graph encoded by a collection");
  build->add_option("collection", notation)->required();
  build->add_flag("--multi", multi);

  auto* enumerate = app.add_subcommand("enumerate", "all weakly labeled graphs on [0,n-1]");
  enumerate->add_option("--n", opts.n)->required();
  enumerate->add_flag("--disconnected", disconnected,
                      "disconnected catalog (connectedness axiom dropped)");
  enumerate->add_option("--max-mult", opts.max_multiplicity, "multigraph multiplicity bound");
  enumerate->add_flag("--dedup-inversion", dedup, "one representative per inversion orbit");
  enumerate->add_option("--jobs", opts.jobs, "parallel search workers");
  enumerate->add_option("--n-limit", opts.n_limit, "raise the default n cap of 12");
  enumerate->add_option("--out", out_path, "write the catalog JSON to a file");
  enumerate->add_option("--dot-dir", dot_dir, "also write one DOT file per entry");

  auto* family = app.add_subcommand("family", "constructive families");
  family->require_subcommand(1);
  auto* fpath = family->add_subcommand("path", "P_n");
  fpath->add_option("--n", n)->required();
  auto* fstar = family->add_subcommand("star", "K_{1,n}, even n");
  fstar->add_option("--n", n)->required();
  auto* fsp = family->add_subcommand("star-path", "path through multiples of m plus a leaf star");
  fsp->add_option("--m", m)->required();
  fsp->add_option("--n", n)->required();
  fsp->add_option("--k", k)->required();
  auto* fgrid = family->add_subcommand("c-grid", "grid family on [0,(h+1)k-2]");
  fgrid->set_help_flag("--help", "print help");  // frees -h for the height flag
  fgrid->add_option("--k", k)->required();
  fgrid->add_option("--h", h)->required();
  auto* fpb = family->add_subcommand("pb-window", "window of the chord-extended integer path");
  fpb->add_option("--base", base_text, "comma list of residue:span pairs (may be empty)");
  fpb->add_option("--lo", lo)->required();
  fpb->add_option("--hi", hi)->required();
  fpb->add_flag("--half-line", half_line, "restrict the family to [0,inf)");
  fpb->add_flag("--check", check, "verify the window, exit 1 on failure");
  auto* fcyl = family->add_subcommand("cylinder-window", "window of the inner cylinder");
  fcyl->add_option("--graph", graph_path)->required();
  fcyl->add_option("--lo", lo)->required();
  fcyl->add_option("--hi", hi)->required();
  fcyl->add_flag("--check", check);
  auto* fco = family->add_subcommand("coalesce", "glue two labelings at their boundary leaves");
  fco->add_option("left", left_path)->required();
  fco->add_option("right", right_path)->required();

  auto* totalcmd = app.add_subcommand("total", "total weak harmonic labeling via harmonization");
  totalcmd->add_option("graph", graph_path)->required();

  auto* exportcmd = app.add_subcommand("export", "export to Graphviz DOT");
  bool dot = false;
  exportcmd->add_flag("--dot", dot)->required();
  exportcmd->add_option("input", in_path)->required();
  exportcmd->add_option("output", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*verify) return cmd_verify(graph_path, multi, total, as_json);
    if (*extract) return cmd_extract(graph_path, multi);
    if (*build) return cmd_build(notation, multi);
    if (*enumerate) {
      opts.dedup_inversion = dedup;
      opts.connected = !disconnected;
      return cmd_enumerate(opts, disconnected, out_path, dot_dir);
    }
    if (*fpath) {
      std::cout << whl::graph_to_json(whl::path_graph(n)).dump(2) << "\n";
      return kOk;
    }
    if (*fstar) {
      std::cout << whl::graph_to_json(whl::star_graph(n)).dump(2) << "\n";
      return kOk;
    }
    if (*fsp) {
      std::cout << whl::graph_to_json(whl::star_path(m, n, k)).dump(2) << "\n";
      return kOk;
    }
    if (*fgrid) {
      std::cout << whl::graph_to_json(whl::c_grid(k, h)).dump(2) << "\n";
      return kOk;
    }
    if (*fpb)
      return emit_window(whl::WindowedFamily::pb(parse_base(base_text), half_line), lo, hi, check);
    if (*fcyl) {
      auto base = whl::graph_from_json(load_json(graph_path));
      return emit_window(whl::WindowedFamily::inner_cylinder(std::move(base)), lo, hi, check);
    }
    if (*fco) {
      auto left = whl::graph_from_json(load_json(left_path));
      auto right = whl::graph_from_json(load_json(right_path));
      std::cout << whl::graph_to_json(whl::coalesce(left, right)).dump(2) << "\n";
      return kOk;
    }
    if (*totalcmd) return cmd_total(graph_path);
    if (*exportcmd) return cmd_export_dot(in_path, out_path);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const whl::notation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const whl::json_format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const whl::coalesce_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const whl::axiom_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kUsageError;
}
