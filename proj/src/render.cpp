#include "spechtweb/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace spechtweb {

namespace {

struct Layout {
  std::vector<double> x, y;  // per vertex
};

// Boundary points pinned at y=0; internal vertices one level per
// breadth-first depth, x relaxed to the neighbour average.
Layout layout_web(const Web& w) {
  Layout l;
  int vc = w.vertex_count();
  l.x.assign(static_cast<size_t>(vc), 0.0);
  l.y.assign(static_cast<size_t>(vc), 0.0);
  std::vector<int> depth(static_cast<size_t>(vc), -1);
  std::vector<int> queue;
  for (int v = 0; v < vc; ++v)
    if (w.vertex(v).kind == Web::VertexKind::boundary) {
      depth[static_cast<size_t>(v)] = 0;
      l.x[static_cast<size_t>(v)] = w.vertex(v).boundary_pos;
      queue.push_back(v);
    }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int h : w.rotation(v)) {
      int t = w.half(w.half(h).twin).vertex;
      if (depth[static_cast<size_t>(t)] == -1) {
        depth[static_cast<size_t>(t)] = depth[static_cast<size_t>(v)] + 1;
        l.x[static_cast<size_t>(t)] = l.x[static_cast<size_t>(v)];
        queue.push_back(t);
      }
    }
  }
  for (int v = 0; v < vc; ++v)
    l.y[static_cast<size_t>(v)] = -0.9 * depth[static_cast<size_t>(v)];
  for (int round = 0; round < 40; ++round) {
    for (int v = 0; v < vc; ++v) {
      if (w.vertex(v).kind == Web::VertexKind::boundary) continue;
      double sum = 0;
      int cnt = 0;
      for (int h : w.rotation(v)) {
        sum += l.x[static_cast<size_t>(w.half(w.half(h).twin).vertex)];
        ++cnt;
      }
      if (cnt) l.x[static_cast<size_t>(v)] = sum / cnt;
    }
  }
  return l;
}

std::string svg_header(double w, double h) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << " " << h
     << "\">\n<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  return os.str();
}

}  // namespace

std::string render_svg(const ForkDiagram& d) {
  const double ux = 40, base = 160;
  std::ostringstream os;
  os << svg_header(ux * (d.points() + 1), base + 20);
  for (const Arc& a : d.arcs()) {
    double xa = ux * a.left, xb = ux * a.middle, xc = ux * a.right;
    double vy = base - 14;
    os << "<path d=\"M" << xa << " " << base << " Q" << (xa + xb) / 2 << " "
       << base - 0.6 * (xb - xa) - 14 << " " << xb << " " << vy << "\"/>\n";
    os << "<path d=\"M" << xb << " " << vy << " Q" << (xb + xc) / 2 << " "
       << base - 0.6 * (xc - xb) - 14 << " " << xc << " " << base << "\"/>\n";
    os << "<line x1=\"" << xb << "\" y1=\"" << vy << "\" x2=\"" << xb << "\" y2=\"" << base
       << "\"/>\n";
    os << "<circle cx=\"" << xb << "\" cy=\"" << vy << "\" r=\"2.5\" fill=\"black\"/>\n";
  }
  for (int p = 1; p <= d.points(); ++p)
    os << "<circle cx=\"" << ux * p << "\" cy=\"" << base
       << "\" r=\"2\" fill=\"black\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_svg(const Web& w) {
  Layout l = layout_web(w);
  const double ux = 40, uy = 60, base = 40 + 60 * 4;
  std::ostringstream os;
  os << svg_header(ux * (w.boundary_points() + 1), base + 20);
  for (int h = 0; h < w.half_count(); ++h) {
    if (h > w.half(h).twin) continue;  // one line per edge
    int a = w.half(h).vertex, b = w.half(w.half(h).twin).vertex;
    os << "<line x1=\"" << ux * l.x[static_cast<size_t>(a)] << "\" y1=\""
       << base + uy * l.y[static_cast<size_t>(a)] << "\" x2=\"" << ux * l.x[static_cast<size_t>(b)]
       << "\" y2=\"" << base + uy * l.y[static_cast<size_t>(b)] << "\"/>\n";
  }
  for (int v = 0; v < w.vertex_count(); ++v) {
    bool boundary = w.vertex(v).kind == Web::VertexKind::boundary;
    os << "<circle cx=\"" << ux * l.x[static_cast<size_t>(v)] << "\" cy=\""
       << base + uy * l.y[static_cast<size_t>(v)] << "\" r=\"" << (boundary ? 2.0 : 3.0)
       << "\" fill=\"black\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_tikz(const ForkDiagram& d) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=0.5]\n";
  for (int p = 1; p <= d.points(); ++p)
    os << "\\fill (" << p << ",0) circle (0.05);\n";
  for (const Arc& a : d.arcs()) {
    double vy = 0.3;
    os << "\\draw (" << a.left << ",0) .. controls (" << (a.left + a.middle) / 2.0 << ","
       << 0.5 * (a.middle - a.left) + 0.3 << ") .. (" << a.middle << "," << vy << ");\n";
    os << "\\draw (" << a.middle << "," << vy << ") .. controls ("
       << (a.middle + a.right) / 2.0 << "," << 0.5 * (a.right - a.middle) + 0.3 << ") .. ("
       << a.right << ",0);\n";
    os << "\\draw (" << a.middle << "," << vy << ") -- (" << a.middle << ",0);\n";
    os << "\\fill (" << a.middle << "," << vy << ") circle (0.07);\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

std::string render_tikz(const Web& w) {
  Layout l = layout_web(w);
  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=0.6]\n";
  for (int h = 0; h < w.half_count(); ++h) {
    if (h > w.half(h).twin) continue;
    int a = w.half(h).vertex, b = w.half(w.half(h).twin).vertex;
    // draw from the out side so the arrow follows the edge orientation
    if (!w.half(h).out) std::swap(a, b);
    os << "\\draw[->] (" << l.x[static_cast<size_t>(a)] << "," << -l.y[static_cast<size_t>(a)]
       << ") -- (" << l.x[static_cast<size_t>(b)] << "," << -l.y[static_cast<size_t>(b)] << ");\n";
  }
  for (int v = 0; v < w.vertex_count(); ++v)
    os << "\\fill (" << l.x[static_cast<size_t>(v)] << "," << -l.y[static_cast<size_t>(v)]
       << ") circle (" << (w.vertex(v).kind == Web::VertexKind::boundary ? 0.05 : 0.08) << ");\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace spechtweb
