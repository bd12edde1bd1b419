#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spechtweb/diagrams.hpp"
#include "spechtweb/ints.hpp"
#include "spechtweb/webs.hpp"

namespace spechtweb {

/// Formal exact-integer combination over an ordered key type.
template <class Key>
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(const Key& k) { terms_[k] = 1; }

  void add(const Key& k, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add_scaled(const LinComb& other, const Int& c) {
    for (const auto& [k, v] : other.terms_) add(k, v * c);
  }
  Int coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Int(0) : it->second;
  }
  const std::map<Key, Int>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool operator==(const LinComb&) const = default;

 private:
  std::map<Key, Int> terms_;
};

using MComb = LinComb<ForkDiagram>;

/// Substitutes the matching local identity for the crossing pair of arcs
/// (i, j), after order-preserving relabelling of their six endpoints.
/// Throws if the pair has no counted crossing.
MComb resolve_local(const ForkDiagram& d, int i, int j);

/// Repeated resolve_local until every term is an M-diagram.  The measure
/// (inversions of the boundary word, counted crossings) decreases
/// lexicographically at every substitution on every produced term; this is
/// asserted on every run.
MComb expand_in_m(const ForkDiagram& d);

/// Independent oracle route: geometric embedding, skein resolution, full
/// reduction.
WebSum expand_via_webs(const ForkDiagram& d);

/// Number of (Inv, c) measure checks performed so far in this thread; each
/// produced term of every substitution is checked and a violation throws.
long long expansion_steps_checked();

enum class Basis : unsigned char { P, M, W };
std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);

/// Exact integer base-change matrix between two of the three bases, indexed
/// by standard tableaux in a fixed linear extension of both orders below.
/// entries[r][c] is the coefficient of row basis element r in the expansion
/// of column basis element c.
///
/// The declared partial order for the triangularity claim is the move
/// order: the transitive closure of the single-move relation on boundary
/// words, transported to tableaux.  Every expansion step strictly lowers
/// (inversions, crossings), so this is the order the rewriting system
/// descends; the coarser weak order fails for all six base changes at
/// n = 3 and is carried separately as a diagnostic.
struct TransitionMatrix {
  int n = 0;
  Basis from = Basis::P;
  Basis to = Basis::M;
  std::vector<Tableau> index;               // the linear extension used for layout
  std::vector<std::vector<Int>> entries;    // square, |index| x |index|
  std::vector<std::vector<char>> below;       // strictly below in the move order
  std::vector<std::vector<char>> weak_below;  // strictly below in the weak order
};

/// true iff all diagonal entries are 1 and every nonzero off-diagonal entry
/// (r, c) has index[r] strictly below index[c] in the declared partial
/// order (not merely in the linear extension).
bool is_unitriangular(const TransitionMatrix& m);

/// Nonzero off-diagonal support pairs that violate the declared order.
std::vector<std::pair<int, int>> unitriangular_violations(const TransitionMatrix& m);

/// Diagnostic: does the support also respect the coarser weak order?
bool weak_order_unitriangular(const TransitionMatrix& m);

/// Fraction-free determinant (Bareiss), exact.
Int determinant(const std::vector<std::vector<Int>>& a);

std::vector<std::vector<Int>> multiply(const std::vector<std::vector<Int>>& a,
                                       const std::vector<std::vector<Int>>& b);

struct RepresentationReport {
  int n = 0;
  int dimension = 0;
  bool ok = false;
  std::string first_violation;  // empty on success
};

/// Per-size caches: tableau list, the M basis, its web expansions, the
/// leading web of each M-diagram, and memoized fork-diagram expansions.
/// Values handed out are immutable; one workspace per thread.
class SpechtWorkspace {
 public:
  explicit SpechtWorkspace(int n);

  int n() const { return n_; }
  int dimension() const { return static_cast<int>(syt_.size()); }
  const std::vector<Tableau>& tableaux() const { return syt_; }
  const std::vector<ForkDiagram>& m_basis() const { return m_basis_; }
  const std::vector<Web>& web_basis();  // leading webs, in tableau order
  int tableau_index(const Tableau& t) const;
  int m_index(const ForkDiagram& m) const;  // -1 if not a basis M-diagram
  int web_index(const std::string& canonical_key);

  const MComb& expand(const ForkDiagram& d);     // memoized expand_in_m
  const WebSum& webs_of(const ForkDiagram& d);   // memoized expand_via_webs

  /// Strict move-order table (and the weak-order diagnostic); both are
  /// checked to be extended by the layout order.
  const std::vector<std::vector<char>>& below();
  const std::vector<std::vector<char>>& weak_below();

  MComb act(const MComb& x, int i);
  TransitionMatrix transition(Basis from, Basis to);
  MComb websum_to_m(const WebSum& s);  // solves the M->W system over the rationals

 private:
  TransitionMatrix matrix_p_to_m();
  TransitionMatrix matrix_m_to_w();

  int n_;
  std::vector<Tableau> syt_;
  std::vector<ForkDiagram> m_basis_;
  std::vector<Web> web_basis_;
  std::map<std::string, int> web_key_index_;
  std::map<ForkDiagram, MComb> expand_memo_;
  std::map<ForkDiagram, WebSum> web_memo_;
  std::map<ForkDiagram, int> m_index_;
  std::vector<std::vector<char>> below_;
  std::vector<std::vector<char>> weak_below_;
  bool below_ready_ = false;
};

/// One stacked generator acting on an M-basis combination: terms whose arc
/// containing i also contains i+1 are routed through the web engine, the
/// rest swap endpoints and re-expand.
MComb act_module(const MComb& x, int i, SpechtWorkspace& ws);

TransitionMatrix transition_matrix(Basis from, Basis to, int n);

/// Verifies the defining relations of the symmetric group as operators on
/// the M basis: involutions, distant commutation, braid.
RepresentationReport check_representation(int n);

}  // namespace spechtweb
