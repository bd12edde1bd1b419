#pragma once

#include <string>

#include "spechtweb/diagrams.hpp"
#include "spechtweb/webs.hpp"

namespace spechtweb {

// Best-effort drawing: boundary points on a horizontal line, internal
// vertices placed by breadth-first depth with x-averaging.  Only the
// combinatorial content is contractual.
std::string render_svg(const ForkDiagram& d);
std::string render_svg(const Web& w);
std::string render_tikz(const ForkDiagram& d);
std::string render_tikz(const Web& w);

}  // namespace spechtweb
