#pragma once

#include <array>
#include <compare>
#include <vector>

#include "spechtweb/tableaux.hpp"

namespace spechtweb {

/// An arc (a,b,c): three boundary positions joined at one trivalent vertex.
/// (a,b) is its left arc, (b,c) its right arc.
struct Arc {
  int left;
  int middle;
  int right;
  auto operator<=>(const Arc&) const = default;
};

/// A fork diagram: a partition of {1..3n} into n arcs.  Equality is set
/// equality of the arc triples; the geometric realisation lives in webs.
class ForkDiagram {
 public:
  ForkDiagram(int n, std::vector<Arc> arcs);
  static ForkDiagram from_triples(const std::vector<std::array<int, 3>>& triples);

  int arc_count() const { return n_; }
  int points() const { return 3 * n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }  // sorted by left endpoint
  const Arc& arc(int i) const { return arcs_[static_cast<size_t>(i)]; }

  auto operator<=>(const ForkDiagram&) const = default;

 private:
  int n_;
  std::vector<Arc> arcs_;
};

/// Chords (a,b) and (c,d) drawn as arches above the line cross iff their
/// endpoints strictly interleave.
bool interleaves(int a, int b, int c, int d);

/// Arcs of the diagram are the columns of t.  Requires t standard; the
/// result satisfies is_polytabloid.
ForkDiagram polytabloid_diagram(const Tableau& t);

/// Two-stage construction: the unique non-crossing matching of +'s to 0's
/// gives the left arcs, the unique non-crossing matching of 0's to -'s the
/// right arcs; arcs are glued at the shared 0.  Requires t standard; the
/// result satisfies is_m_diagram (tested, not assumed).
ForkDiagram m_diagram(const Tableau& t);

/// Every pair of arcs has nested-or-disjoint left arcs and nested-or-disjoint
/// right arcs.
bool is_m_diagram(const ForkDiagram& d);

/// Sorting arcs by left endpoint also sorts them by middle and right
/// endpoint, and the induced column filling is a standard tableau.
bool is_polytabloid(const ForkDiagram& d);

/// c(d): crossing pairs of left arcs plus crossing pairs of right arcs.
/// Crossings between a left arc and a right arc are not counted.
int crossing_count(const ForkDiagram& d);

/// Whether the arc pair (i, j) contributes to crossing_count.
bool counted_crossing(const ForkDiagram& d, int i, int j);

/// Position i is marked by its role in its arc: left '+', middle '0', right '-'.
BoundaryWord boundary_word(const ForkDiagram& d);

/// All partitions of {1..3n} into triples.
std::vector<ForkDiagram> enumerate_fork_diagrams(int n);

/// The M-diagram basis in tableau order: m_diagram over enumerate_syt(n).
std::vector<ForkDiagram> enumerate_m_diagrams(int n);

}  // namespace spechtweb
