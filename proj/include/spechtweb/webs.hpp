#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spechtweb/diagrams.hpp"
#include "spechtweb/ints.hpp"

namespace spechtweb {

/// A planar combinatorial map with the 3n boundary points anchored on a
/// horizontal line.  Internal vertices are trivalent with all three edges
/// oriented the same way (source = all out, sink = all in); boundary
/// vertices have degree one and their edge flows out of the web into the
/// line.  Crossing vertices (degree four, two transverse strands) may be
/// present while a diagram is being resolved; a plain web has none.
///
/// Half-edge h: `twin` is the opposite half of the same edge, `vertex` its
/// origin, `next` the next half-edge counterclockwise around the origin,
/// `out` whether the edge is directed away from the origin.  Twins carry
/// opposite `out` flags.  Closed circle components carry no vertices and
/// are tracked by the `loops` counter.
class Web {
 public:
  struct Half {
    int twin = -1;
    int vertex = -1;
    int next = -1;
    bool out = false;
  };
  enum class VertexKind : unsigned char { boundary, internal, crossing };
  struct Vertex {
    VertexKind kind = VertexKind::internal;
    int boundary_pos = 0;  // 1..3n for boundary vertices
    int first = -1;        // one incident half-edge
  };

  Web() = default;
  /// Assembles a web from raw arrays (JSON parsing); validates.
  static Web from_parts(int boundary_points, int loops, std::vector<Vertex> vertices,
                        std::vector<Half> halves);

  int boundary_points() const { return boundary_n_; }
  int loops() const { return loops_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int half_count() const { return static_cast<int>(halves_.size()); }
  const Vertex& vertex(int v) const { return vertices_[static_cast<size_t>(v)]; }
  const Half& half(int h) const { return halves_[static_cast<size_t>(h)]; }
  int degree(int v) const;
  std::vector<int> rotation(int v) const;  // halves at v, counterclockwise from `first`
  int boundary_vertex(int pos) const;      // vertex id of boundary point pos
  int crossing_count() const;
  std::vector<int> crossing_vertices() const;
  bool is_plain() const { return crossing_count() == 0; }

  /// Rewrite measure: internal/crossing vertices + edges + loops.  Every
  /// local rewrite strictly decreases it.
  long long measure() const;

  /// Checks the structural invariants and throws std::logic_error on any
  /// violation: twin involution with opposite flags, rotation cycles,
  /// degree and orientation rules per vertex kind, Euler formula.
  void validate() const;

  /// Relabeling-invariant encoding: breadth-first traversal anchored at the
  /// boundary positions in increasing order, listing each vertex's rotation
  /// from its entry half-edge.  Two webs are isotopic rel boundary iff
  /// their encodings are byte-equal.
  std::string canonical_encoding() const;

  friend class WebBuilder;
  friend struct WebOps;

 private:
  int boundary_n_ = 0;
  int loops_ = 0;
  std::vector<Half> halves_;
  std::vector<Vertex> vertices_;
};

/// Crossing diagrams are webs that still carry crossing vertices.
using CrossingDiagram = Web;

/// Explicit construction interface (used by the geometric embedding and by
/// tests).  Neighbour tags: B(p) attaches to boundary point p, E(id) names
/// one end of edge `id` (each id must be used exactly twice).
class WebBuilder {
 public:
  struct Nbr {
    bool is_boundary;
    int value;  // boundary position or edge id
  };
  static Nbr B(int pos) { return {true, pos}; }
  static Nbr E(int id) { return {false, id}; }

  explicit WebBuilder(int boundary_points);
  /// Adds an internal trivalent vertex; `nbrs` is its counterclockwise rotation.
  int source(std::vector<Nbr> nbrs) { return add(Web::VertexKind::internal, true, std::move(nbrs)); }
  int sink(std::vector<Nbr> nbrs) { return add(Web::VertexKind::internal, false, std::move(nbrs)); }
  /// Adds a 4-valent crossing; per-slot flow directions are supplied
  /// explicitly (true = edge directed away from the crossing).
  int crossing(std::vector<Nbr> nbrs, std::vector<bool> out_flags);
  void add_loops(int k) { loops_ += k; }
  Web build() const;

 private:
  int add(Web::VertexKind kind, bool out, std::vector<Nbr> nbrs);
  struct Pending {
    Web::VertexKind kind;
    std::vector<Nbr> nbrs;
    std::vector<bool> out;
  };
  int boundary_n_;
  int loops_ = 0;
  std::vector<Pending> pending_;
};

/// Formal exact-integer combination of webs, keyed by canonical encoding.
/// No zero coefficients are stored.
class WebSum {
 public:
  struct Term {
    Web web;
    Int coeff;
  };

  WebSum() = default;
  void add(const Web& w, const Int& c);
  void add(const WebSum& other);
  void add_scaled(const WebSum& other, const Int& c);
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<std::string, Term>& terms() const { return terms_; }
  Int coeff(const std::string& key) const;
  bool operator==(const WebSum& other) const;

 private:
  std::map<std::string, Term> terms_;
};

/// Rewrite scheduling.  The deterministic schedule picks the first
/// applicable site; randomized schedules permute the choices, which the
/// confluence tests rely on.
class Schedule {
 public:
  Schedule() = default;                       // deterministic
  explicit Schedule(unsigned long seed) : rng_(std::mt19937(seed)) {}
  bool randomized() const { return rng_.has_value(); }
  size_t pick(size_t count);

 private:
  std::optional<std::mt19937> rng_;
};

/// W0-shaped web: n disjoint tripods on consecutive position triples.
Web tripod_row(int n);

/// No closed component, no internal bigon face, no internal square face.
bool is_non_elliptic(const Web& w);

/// Sizes of the currently rewritable faces (2 = bigon, 4 = square).
std::vector<int> reducible_face_sizes(const Web& w);

/// Applies the local relations until every term is non-elliptic:
/// circle = 3, bigon = -2 x strand, square = two-term reconnection.
WebSum reduce(const Web& w, Schedule sched = {});

/// Replaces crossing `which` (index into crossing_vertices()) by its two
/// skein terms, coefficients +1 and +1: the fork--join pair and the
/// uncrossed strands.  Throws if the crossing does not exist or its strand
/// orientations are inconsistent.
std::array<CrossingDiagram, 2> resolve_crossing(const CrossingDiagram& d, int which);

/// Resolves all crossings and reduces, merging equal intermediate diagrams.
WebSum resolve_and_reduce(const CrossingDiagram& d, const Int& coeff, Schedule sched = {});

/// Stacks the i <-> i+1 swap under every term, resolves it by the skein
/// relation and reduces.
WebSum act_web(const WebSum& s, int i, Schedule sched = {});
WebSum act_web(const Web& w, int i, Schedule sched = {});

/// The i <-> i+1 swap stacked under w as an unresolved crossing diagram.
CrossingDiagram stack_crossing(const Web& w, int i);

/// Geometric realisation of a fork diagram: each arc embeds as a trivalent
/// fork whose left and right arcs are drawn as arches above the line;
/// arches cross iff their endpoints interleave, and every drawn crossing is
/// resolved by the skein relation, then reduced.
CrossingDiagram embed_fork(const ForkDiagram& d);
WebSum web_of_fork(const ForkDiagram& d, Schedule sched = {});

/// Independent route to the same element: a reduced word of the minimal
/// coset representative carrying the baseline arcs to d, applied to the
/// tripod row one stacked crossing at a time.
WebSum web_of_fork_via_action(const ForkDiagram& d);

/// The leading non-elliptic web of an M-diagram: every drawn crossing is
/// replaced by its fork--join summand.  Indexes the web basis.
Web top_web(const ForkDiagram& m);

}  // namespace spechtweb
