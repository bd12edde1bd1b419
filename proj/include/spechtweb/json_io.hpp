#pragma once

#include <json.hpp>

#include "spechtweb/diagrams.hpp"
#include "spechtweb/specht.hpp"
#include "spechtweb/tableaux.hpp"
#include "spechtweb/webs.hpp"

namespace spechtweb {

// Pinned wire formats (byte-deterministic with ordered keys):
//   Tableau      {"n": int, "rows": [[int] x3]}
//   BoundaryWord "+0-..." (plain JSON string)
//   ForkDiagram  {"n": int, "arcs": [[a,b,c], ...]}   arcs sorted by left endpoint
//   Web          {"boundary": int, "loops": int, "vertices": [...], "half_edges": [...]}
//   WebSum       {"boundary": int, "terms": [{"coeff": int, "web": {...}}, ...]}
//   MComb        {"n": int, "terms": [{"coeff": int, "arcs": [...]}, ...]}
//   Matrix       {"from": s, "to": s, "n": int, "order": [rows...], "entries": [[int]]}
using Json = nlohmann::ordered_json;

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);
/// Also accepts the compact row string form "1,2,5/3,4,7/6,8,9".
Tableau tableau_from_text(const std::string& text);

Json to_json(const ForkDiagram& d);
ForkDiagram fork_from_json(const Json& j);

Json to_json(const Web& w);
Web web_from_json(const Json& j);

Json to_json(const WebSum& s);
Json to_json(const MComb& c, int n);

Json to_json(const TransitionMatrix& m);

std::string dump(const Json& j);  // two-space indent, trailing newline

}  // namespace spechtweb
