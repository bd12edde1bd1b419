// Command-line front end: enumeration, bijections, expansion, transition
// matrices, the invariant check suite, and diagram rendering.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spechtweb/checks.hpp"
#include "spechtweb/json_io.hpp"
#include "spechtweb/render.hpp"
#include "spechtweb/specht.hpp"

namespace {

using namespace spechtweb;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void print_matrix_text(const TransitionMatrix& m, std::ostream& os) {
  os << basis_name(m.from) << " -> " << basis_name(m.to) << ", n = " << m.n << ", dimension "
     << m.entries.size() << "\n";
  size_t width = 1;
  for (const auto& row : m.entries)
    for (const Int& v : row) width = std::max(width, v.str().size());
  for (const auto& row : m.entries) {
    for (const Int& v : row) {
      std::string s = v.str();
      os << std::string(width + 1 - s.size(), ' ') << s;
    }
    os << "\n";
  }
}

int run_enumerate(int n, const std::string& format) {
  SpechtWorkspace ws(n);
  if (format == "json") {
    Json j;
    Json tabs = Json::array(), ms = Json::array(), webs = Json::array();
    for (const Tableau& t : ws.tableaux()) tabs.push_back(to_json(t));
    for (const ForkDiagram& m : ws.m_basis()) ms.push_back(to_json(m));
    for (const Web& w : ws.web_basis()) webs.push_back(to_json(w));
    j["n"] = n;
    j["dimension"] = ws.dimension();
    j["tableaux"] = std::move(tabs);
    j["m_diagrams"] = std::move(ms);
    j["webs"] = std::move(webs);
    std::cout << dump(j);
  } else {
    std::cout << "n = " << n << ", dimension " << ws.dimension() << "\n";
    for (int k = 0; k < ws.dimension(); ++k) {
      const Tableau& t = ws.tableaux()[static_cast<size_t>(k)];
      std::cout << "#" << k << "  word " << word_of(t).str() << "  rows";
      for (const auto& row : t.rows()) {
        std::cout << " [";
        for (size_t c = 0; c < row.size(); ++c) std::cout << (c ? "," : "") << row[c];
        std::cout << "]";
      }
      std::cout << "  arcs";
      for (const Arc& a : ws.m_basis()[static_cast<size_t>(k)].arcs())
        std::cout << " (" << a.left << "," << a.middle << "," << a.right << ")";
      std::cout << "\n";
    }
    std::cout << ws.dimension() << " tableaux, " << ws.m_basis().size() << " M-diagrams, "
              << ws.web_basis().size() << " non-elliptic webs\n";
  }
  return 0;
}

int run_map(const std::string& to, const std::string& input) {
  Tableau t = tableau_from_text(read_input(input));
  if (!t.is_standard()) throw std::invalid_argument("tableau is not standard");
  ForkDiagram d = (to == "phi") ? polytabloid_diagram(t) : m_diagram(t);
  std::cout << dump(to_json(d));
  return 0;
}

int run_reduce(const std::string& to, const std::string& input) {
  Json j = Json::parse(read_input(input));
  if (j.contains("half_edges")) {
    if (to == "M") throw std::invalid_argument("web input reduces to the web basis only");
    std::cout << dump(to_json(reduce(web_from_json(j))));
    return 0;
  }
  ForkDiagram d = fork_from_json(j);
  if (to == "M") {
    std::cout << dump(to_json(expand_in_m(d), d.arc_count()));
  } else {
    std::cout << dump(to_json(expand_via_webs(d)));
  }
  return 0;
}

int run_matrix(const std::string& from, const std::string& to, int n, const std::string& format,
               bool scan_negatives) {
  SpechtWorkspace ws(n);
  TransitionMatrix m = ws.transition(parse_basis(from), parse_basis(to));
  bool uni = is_unitriangular(m);
  if (format == "json") {
    Json j = to_json(m);
    j["unitriangular"] = uni;
    j["weak_order_unitriangular"] = weak_order_unitriangular(m);
    if (scan_negatives) {
      Json neg = Json::array();
      for (size_t r = 0; r < m.entries.size(); ++r)
        for (size_t c = 0; c < m.entries.size(); ++c)
          if (m.entries[r][c] < 0) neg.push_back({static_cast<int>(r), static_cast<int>(c)});
      j["negative_entries"] = std::move(neg);
    }
    std::cout << dump(j);
  } else {
    print_matrix_text(m, std::cout);
    std::cout << "unitriangular w.r.t. the move order: " << (uni ? "yes" : "no") << "\n";
    std::cout << "also w.r.t. the coarser weak order: "
              << (weak_order_unitriangular(m) ? "yes" : "no") << "\n";
    if (!uni) {
      auto bad = unitriangular_violations(m);
      std::cerr << bad.size() << " violating entries; first at (" << bad.front().first << ","
                << bad.front().second << ")\n";
    }
    if (scan_negatives) {
      long long negatives = 0;
      for (const auto& row : m.entries)
        for (const Int& v : row)
          if (v < 0) ++negatives;
      std::cout << "negative entries: " << negatives << "\n";
    }
  }
  return uni ? 0 : 1;
}

int run_check(int n, unsigned long seed) {
  auto results = checks::run_all(n, seed);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? 0 : 1;
}

int run_render(const std::string& format, const std::string& input) {
  Json j = Json::parse(read_input(input));
  std::string out;
  if (j.contains("half_edges")) {
    Web w = web_from_json(j);
    out = format == "tikz" ? render_tikz(w) : render_svg(w);
  } else {
    ForkDiagram d = fork_from_json(j);
    out = format == "tikz" ? render_tikz(d) : render_svg(d);
  }
  std::cout << out;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for the three diagram bases of the Specht module S^(n,n,n)"};
  app.require_subcommand(1);
  int limit = 5;
  app.add_option("--limit", limit, "largest accepted n")->capture_default_str();

  int n = 2;
  std::string format = "text", input, from = "P", to = "M";
  unsigned long seed = 12345;
  bool scan_negatives = false;

  auto* enumerate = app.add_subcommand("enumerate", "list tableaux, M-diagrams and webs");
  enumerate->add_option("n", n, "number of columns")->required();
  enumerate->add_option("--format", format, "json or text");

  auto* map_cmd = app.add_subcommand("map", "apply a tableau-to-diagram bijection");
  std::string map_to = "phi";
  map_cmd->add_option("--to", map_to, "phi (columns) or psi (matchings)")->required();
  map_cmd->add_option("--input", input, "path or - for stdin");

  auto* reduce_cmd = app.add_subcommand("reduce", "expand a diagram in the M or web basis");
  std::string reduce_to = "M";
  reduce_cmd->add_option("--to", reduce_to, "M or W");
  reduce_cmd->add_option("--input", input, "path or - for stdin");

  auto* matrix = app.add_subcommand("matrix", "transition matrix between two bases");
  matrix->add_option("--from", from, "P, M or W")->required();
  matrix->add_option("--to", to, "P, M or W")->required();
  matrix->add_option("n", n, "number of columns")->required();
  matrix->add_option("--format", format, "json or text");
  matrix->add_flag("--scan-negatives", scan_negatives, "report negative entries");

  auto* check = app.add_subcommand("check", "run every module invariant suite");
  check->add_option("n", n, "largest size to check")->required();
  check->add_option("--seed", seed, "seed for sampled properties")->capture_default_str();

  auto* render = app.add_subcommand("render", "emit SVG or TikZ for a diagram or web");
  render->add_option("--format", format, "svg or tikz");
  render->add_option("--input", input, "path or - for stdin");

  CLI11_PARSE(app, argc, argv);

  try {
    if (n < 1 || n > limit) throw std::invalid_argument("n must be between 1 and the --limit");
    if (enumerate->parsed()) return run_enumerate(n, format);
    if (map_cmd->parsed()) {
      if (map_to != "phi" && map_to != "psi") throw std::invalid_argument("--to must be phi or psi");
      return run_map(map_to, input);
    }
    if (reduce_cmd->parsed()) {
      if (reduce_to != "M" && reduce_to != "W") throw std::invalid_argument("--to must be M or W");
      return run_reduce(reduce_to, input);
    }
    if (matrix->parsed()) return run_matrix(from, to, n, format, scan_negatives);
    if (check->parsed()) return run_check(n, seed);
    if (render->parsed()) return run_render(format, input);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
