#include "spechtweb/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace spechtweb {

namespace {

long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::invalid_argument("coefficient too large for JSON output");
  return v.convert_to<long long>();
}

}  // namespace

Json to_json(const Tableau& t) {
  Json j;
  j["n"] = t.cols();
  j["rows"] = t.rows();
  return j;
}

Tableau tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
    throw std::invalid_argument("tableau JSON needs keys n, rows");
  return Tableau(j.at("n").get<int>(), j.at("rows").get<std::vector<std::vector<int>>>());
}

Tableau tableau_from_text(const std::string& text) {
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
  if (!trimmed.empty() && (trimmed[0] == '{' || trimmed[0] == '[')) {
    return tableau_from_json(Json::parse(text));
  }
  std::vector<std::vector<int>> rows;
  std::stringstream ss(trimmed);
  std::string row_text;
  while (std::getline(ss, row_text, '/')) {
    std::vector<int> row;
    std::stringstream rs(row_text);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      if (cell.empty()) continue;
      try {
        row.push_back(std::stoi(cell));
      } catch (const std::exception&) {
        throw std::invalid_argument("tableau rows must be comma-separated integers: " + cell);
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != 3 || rows[0].empty())
    throw std::invalid_argument("row string form is r1,r2,../r1,r2,../r1,r2,..");
  int n = static_cast<int>(rows[0].size());
  return Tableau(n, std::move(rows));
}

Json to_json(const ForkDiagram& d) {
  Json j;
  j["n"] = d.arc_count();
  Json arcs = Json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.left, a.middle, a.right});
  j["arcs"] = std::move(arcs);
  return j;
}

ForkDiagram fork_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("arcs"))
    throw std::invalid_argument("fork diagram JSON needs key arcs");
  std::vector<std::array<int, 3>> triples;
  for (const auto& a : j.at("arcs"))
    triples.push_back({a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>()});
  return ForkDiagram::from_triples(triples);
}

Json to_json(const Web& w) {
  Json j;
  j["boundary"] = w.boundary_points();
  j["loops"] = w.loops();
  Json vs = Json::array();
  for (int v = 0; v < w.vertex_count(); ++v) {
    const Web::Vertex& vx = w.vertex(v);
    Json jv;
    switch (vx.kind) {
      case Web::VertexKind::boundary:
        jv["kind"] = "boundary";
        jv["pos"] = vx.boundary_pos;
        break;
      case Web::VertexKind::internal: jv["kind"] = "internal"; break;
      case Web::VertexKind::crossing: jv["kind"] = "crossing"; break;
    }
    jv["first"] = vx.first;
    vs.push_back(std::move(jv));
  }
  j["vertices"] = std::move(vs);
  Json hs = Json::array();
  for (int h = 0; h < w.half_count(); ++h) {
    const Web::Half& a = w.half(h);
    hs.push_back(Json{{"twin", a.twin}, {"vertex", a.vertex}, {"next", a.next}, {"out", a.out}});
  }
  j["half_edges"] = std::move(hs);
  return j;
}

Web web_from_json(const Json& j) {
  int boundary = j.at("boundary").get<int>();
  int loops = j.value("loops", 0);
  std::vector<Web::Vertex> vs;
  for (const auto& jv : j.at("vertices")) {
    Web::Vertex v;
    std::string kind = jv.at("kind").get<std::string>();
    if (kind == "boundary") {
      v.kind = Web::VertexKind::boundary;
      v.boundary_pos = jv.at("pos").get<int>();
    } else if (kind == "internal") {
      v.kind = Web::VertexKind::internal;
    } else if (kind == "crossing") {
      v.kind = Web::VertexKind::crossing;
    } else {
      throw std::invalid_argument("unknown vertex kind");
    }
    v.first = jv.at("first").get<int>();
    vs.push_back(v);
  }
  std::vector<Web::Half> hs;
  for (const auto& jh : j.at("half_edges"))
    hs.push_back(Web::Half{jh.at("twin").get<int>(), jh.at("vertex").get<int>(),
                           jh.at("next").get<int>(), jh.at("out").get<bool>()});
  return Web::from_parts(boundary, loops, std::move(vs), std::move(hs));
}

Json to_json(const WebSum& s) {
  Json j;
  int boundary = 0;
  Json terms = Json::array();
  for (const auto& [key, t] : s.terms()) {
    boundary = t.web.boundary_points();
    terms.push_back(Json{{"coeff", to_ll(t.coeff)}, {"web", to_json(t.web)}});
  }
  j["boundary"] = boundary;
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const MComb& c, int n) {
  Json j;
  j["n"] = n;
  Json terms = Json::array();
  for (const auto& [d, coeff] : c.terms()) {
    Json arcs = Json::array();
    for (const Arc& a : d.arcs()) arcs.push_back({a.left, a.middle, a.right});
    terms.push_back(Json{{"coeff", to_ll(coeff)}, {"arcs", std::move(arcs)}});
  }
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const TransitionMatrix& m) {
  Json j;
  j["from"] = basis_name(m.from);
  j["to"] = basis_name(m.to);
  j["n"] = m.n;
  Json order = Json::array();
  for (const Tableau& t : m.index) order.push_back(t.rows());
  j["order"] = std::move(order);
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const Int& v : row) r.push_back(to_ll(v));
    rows.push_back(std::move(r));
  }
  j["entries"] = std::move(rows);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace spechtweb
