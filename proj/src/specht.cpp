#include "spechtweb/specht.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace spechtweb {

namespace {

using Triple = std::array<int, 3>;
using Pattern = std::array<Triple, 2>;  // two arcs on {1..6}, sorted by left endpoint

Pattern pattern_of(const Arc& a, const Arc& b) {
  Triple ta{a.left, a.middle, a.right}, tb{b.left, b.middle, b.right};
  if (ta[0] > tb[0]) std::swap(ta, tb);
  return {ta, tb};
}

struct LocalRule {
  Pattern lhs;
  std::vector<std::pair<int, Pattern>> rhs;
};

const Pattern kM0{Triple{1, 2, 3}, Triple{4, 5, 6}};
const Pattern kM1{Triple{1, 2, 4}, Triple{3, 5, 6}};
const Pattern kM2{Triple{1, 5, 6}, Triple{2, 3, 4}};
const Pattern kM3{Triple{1, 2, 6}, Triple{3, 4, 5}};
const Pattern kM4{Triple{1, 4, 5}, Triple{2, 3, 6}};

// The five two-arc configurations with a counted crossing, rewritten into
// M-diagrams.  Together with the five M-configurations these exhaust all
// partitions of six points into two arcs.
const std::array<LocalRule, 5> kLocalRules{{
    {Pattern{Triple{1, 3, 4}, Triple{2, 5, 6}}, {{1, kM2}, {1, kM1}, {-1, kM0}}},
    {Pattern{Triple{1, 2, 5}, Triple{3, 4, 6}}, {{1, kM3}, {1, kM1}, {-1, kM0}}},
    {Pattern{Triple{1, 4, 6}, Triple{2, 3, 5}}, {{1, kM4}, {1, kM2}, {-1, kM0}}},
    {Pattern{Triple{1, 3, 6}, Triple{2, 4, 5}}, {{1, kM4}, {1, kM3}, {-1, kM0}}},
    {Pattern{Triple{1, 3, 5}, Triple{2, 4, 6}},
     {{1, kM4}, {1, kM3}, {1, kM2}, {1, kM1}, {-1, kM0}}},
}};

}  // namespace

MComb resolve_local(const ForkDiagram& d, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= d.arc_count() || j >= d.arc_count())
    throw std::invalid_argument("bad arc pair");
  if (!counted_crossing(d, i, j))
    throw std::invalid_argument("arc pair has no counted crossing");
  const Arc& a = d.arc(i);
  const Arc& b = d.arc(j);
  std::array<int, 6> pts{a.left, a.middle, a.right, b.left, b.middle, b.right};
  std::sort(pts.begin(), pts.end());
  auto rank = [&pts](int p) {
    return static_cast<int>(std::find(pts.begin(), pts.end(), p) - pts.begin()) + 1;
  };
  Pattern local = pattern_of(Arc{rank(a.left), rank(a.middle), rank(a.right)},
                             Arc{rank(b.left), rank(b.middle), rank(b.right)});
  const LocalRule* rule = nullptr;
  for (const LocalRule& r : kLocalRules)
    if (r.lhs == local) rule = &r;
  if (!rule) throw std::logic_error("crossing pair outside the local rewrite table");

  std::vector<Arc> rest;
  for (int k = 0; k < d.arc_count(); ++k)
    if (k != i && k != j) rest.push_back(d.arc(k));
  MComb out;
  for (const auto& [coeff, pat] : rule->rhs) {
    std::vector<Arc> arcs = rest;
    for (const Triple& t : pat)
      arcs.push_back(Arc{pts[static_cast<size_t>(t[0]) - 1], pts[static_cast<size_t>(t[1]) - 1],
                         pts[static_cast<size_t>(t[2]) - 1]});
    out.add(ForkDiagram(d.arc_count(), std::move(arcs)), coeff);
  }
  return out;
}

namespace {

thread_local long long g_measure_checks = 0;

// First counted crossing in index order; -1,-1 when the diagram is an
// M-diagram.
std::pair<int, int> first_crossing(const ForkDiagram& d) {
  for (int i = 0; i < d.arc_count(); ++i)
    for (int j = i + 1; j < d.arc_count(); ++j)
      if (counted_crossing(d, i, j)) return {i, j};
  return {-1, -1};
}

const MComb& expand_rec(const ForkDiagram& d, std::map<ForkDiagram, MComb>& memo) {
  auto it = memo.find(d);
  if (it != memo.end()) return it->second;
  auto [i, j] = first_crossing(d);
  MComb result;
  if (i < 0) {
    result.add(d, 1);
  } else {
    long long inv_d = inversions(boundary_word(d));
    int c_d = crossing_count(d);
    MComb step = resolve_local(d, i, j);
    for (const auto& [t, coeff] : step.terms()) {
      long long inv_t = inversions(boundary_word(t));
      int c_t = crossing_count(t);
      ++g_measure_checks;
      if (!(inv_t < inv_d || (inv_t == inv_d && c_t < c_d)))
        throw std::logic_error("termination measure (Inv, c) did not decrease");
      result.add_scaled(expand_rec(t, memo), coeff);
    }
  }
  return memo.emplace(d, std::move(result)).first->second;
}

}  // namespace

MComb expand_in_m(const ForkDiagram& d) {
  std::map<ForkDiagram, MComb> memo;
  return expand_rec(d, memo);
}

WebSum expand_via_webs(const ForkDiagram& d) { return web_of_fork(d); }

long long expansion_steps_checked() { return g_measure_checks; }

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::P: return "P";
    case Basis::M: return "M";
    case Basis::W: return "W";
  }
  return "?";
}

Basis parse_basis(const std::string& s) {
  if (s == "P" || s == "p") return Basis::P;
  if (s == "M" || s == "m") return Basis::M;
  if (s == "W" || s == "w") return Basis::W;
  throw std::invalid_argument("basis must be one of P, M, W");
}

// ---------------------------------------------------------------------------
// Exact linear algebra

Int determinant(const std::vector<std::vector<Int>>& a0) {
  size_t n = a0.size();
  for (const auto& row : a0)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a = a0;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t swap_row = k;
      for (size_t r = k + 1; r < n; ++r)
        if (a[r][k] != 0) { swap_row = r; break; }
      if (swap_row == k) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        Int q = num / prev;
        if (q * prev != num) throw std::logic_error("Bareiss division was not exact");
        a[i][j] = q;
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

std::vector<std::vector<Int>> invert_integer(const std::vector<std::vector<Int>>& a) {
  size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("matrix is singular");
    std::swap(m[col], m[piv]);
    Rational p = m[col][col];
    for (size_t j = 0; j < 2 * n; ++j) m[col][j] /= p;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Int>> out(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Rational& v = m[i][n + j];
      if (boost::multiprecision::denominator(v) != 1)
        throw std::logic_error("inverse base change is not integral");
      out[i][j] = boost::multiprecision::numerator(v);
    }
  return out;
}

}  // namespace

std::vector<std::vector<Int>> multiply(const std::vector<std::vector<Int>>& a,
                                       const std::vector<std::vector<Int>>& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  std::vector<std::vector<Int>> c(n, std::vector<Int>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

namespace {

std::vector<std::pair<int, int>> support_violations(const TransitionMatrix& m,
                                                    const std::vector<std::vector<char>>& ord) {
  std::vector<std::pair<int, int>> bad;
  size_t dim = m.entries.size();
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) {
      if (r == c) {
        if (m.entries[r][c] != 1) bad.emplace_back(static_cast<int>(r), static_cast<int>(c));
      } else if (m.entries[r][c] != 0 && !ord[r][c]) {
        bad.emplace_back(static_cast<int>(r), static_cast<int>(c));
      }
    }
  return bad;
}

}  // namespace

bool is_unitriangular(const TransitionMatrix& m) { return unitriangular_violations(m).empty(); }

std::vector<std::pair<int, int>> unitriangular_violations(const TransitionMatrix& m) {
  return support_violations(m, m.below);
}

bool weak_order_unitriangular(const TransitionMatrix& m) {
  return support_violations(m, m.weak_below).empty();
}

// ---------------------------------------------------------------------------
// Workspace

SpechtWorkspace::SpechtWorkspace(int n) : n_(n), syt_(enumerate_syt(n)) {
  for (size_t k = 0; k < syt_.size(); ++k) {
    m_basis_.push_back(m_diagram(syt_[k]));
    m_index_[m_basis_.back()] = static_cast<int>(k);
  }
}

int SpechtWorkspace::tableau_index(const Tableau& t) const {
  auto it = std::find(syt_.begin(), syt_.end(), t);
  if (it == syt_.end()) throw std::invalid_argument("tableau not in the basis");
  return static_cast<int>(it - syt_.begin());
}

int SpechtWorkspace::m_index(const ForkDiagram& m) const {
  auto it = m_index_.find(m);
  return it == m_index_.end() ? -1 : it->second;
}

const std::vector<Web>& SpechtWorkspace::web_basis() {
  if (web_basis_.empty()) {
    for (size_t k = 0; k < m_basis_.size(); ++k) {
      Web w = top_web(m_basis_[k]);
      std::string key = w.canonical_encoding();
      if (web_key_index_.count(key)) throw std::logic_error("leading webs are not distinct");
      web_key_index_[key] = static_cast<int>(k);
      web_basis_.push_back(std::move(w));
    }
  }
  return web_basis_;
}

int SpechtWorkspace::web_index(const std::string& canonical_key) {
  web_basis();
  auto it = web_key_index_.find(canonical_key);
  if (it == web_key_index_.end())
    throw std::logic_error("web term outside the leading-web basis");
  return it->second;
}

const MComb& SpechtWorkspace::expand(const ForkDiagram& d) { return expand_rec(d, expand_memo_); }

const WebSum& SpechtWorkspace::webs_of(const ForkDiagram& d) {
  auto it = web_memo_.find(d);
  if (it != web_memo_.end()) return it->second;
  return web_memo_.emplace(d, web_of_fork(d)).first->second;
}

const std::vector<std::vector<char>>& SpechtWorkspace::below() {
  if (!below_ready_) {
    size_t dim = syt_.size();
    std::vector<BoundaryWord> words;
    for (const Tableau& t : syt_) words.push_back(word_of(t));
    below_.assign(dim, std::vector<char>(dim, 0));
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j)
        if (i != j && precedes(words[i], words[j])) below_[i][j] = 1;
    for (size_t k = 0; k < dim; ++k)
      for (size_t i = 0; i < dim; ++i)
        if (below_[i][k])
          for (size_t j = 0; j < dim; ++j)
            if (below_[k][j]) below_[i][j] = 1;
    weak_below_.assign(dim, std::vector<char>(dim, 0));
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j)
        if (i != j && weak_leq(syt_[i], syt_[j])) weak_below_[i][j] = 1;
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) {
        if (below_[i][j] && below_[j][i]) throw std::logic_error("move order is not antisymmetric");
        if (weak_below_[i][j] && !below_[i][j])
          throw std::logic_error("move order does not refine the weak order");
        if ((below_[i][j] || weak_below_[i][j]) && i > j)
          throw std::logic_error("tableau order is not a linear extension");
      }
    below_ready_ = true;
  }
  return below_;
}

const std::vector<std::vector<char>>& SpechtWorkspace::weak_below() {
  below();
  return weak_below_;
}

MComb SpechtWorkspace::websum_to_m(const WebSum& s) {
  TransitionMatrix mw = transition(Basis::M, Basis::W);
  static thread_local std::map<int, std::vector<std::vector<Int>>> inverse_cache;
  auto it = inverse_cache.find(n_);
  if (it == inverse_cache.end())
    it = inverse_cache.emplace(n_, invert_integer(mw.entries)).first;
  const auto& inv = it->second;
  size_t dim = syt_.size();
  std::vector<Int> coords(dim, 0);
  for (const auto& [key, term] : s.terms())
    coords[static_cast<size_t>(web_index(key))] = term.coeff;
  MComb out;
  for (size_t r = 0; r < dim; ++r) {
    Int v = 0;
    for (size_t c = 0; c < dim; ++c)
      if (coords[c] != 0) v += inv[r][c] * coords[c];
    out.add(m_basis_[r], v);
  }
  return out;
}

MComb SpechtWorkspace::act(const MComb& x, int i) {
  if (i < 1 || i + 1 > 3 * n_) throw std::invalid_argument("generator index out of range");
  MComb out;
  for (const auto& [d, coeff] : x.terms()) {
    int arc_i = -1, arc_j = -1;
    for (int k = 0; k < d.arc_count(); ++k) {
      const Arc& a = d.arc(k);
      if (a.left == i || a.middle == i || a.right == i) arc_i = k;
      if (a.left == i + 1 || a.middle == i + 1 || a.right == i + 1) arc_j = k;
    }
    if (arc_i == arc_j) {
      // Both points on one fork: the swap is absorbed by the web engine.
      WebSum acted = act_web(webs_of(d), i);
      out.add_scaled(websum_to_m(acted), coeff);
    } else {
      std::vector<Arc> arcs;
      for (const Arc& a : d.arcs()) {
        std::array<int, 3> t{a.left, a.middle, a.right};
        for (int& p : t) {
          if (p == i) p = i + 1;
          else if (p == i + 1) p = i;
        }
        std::sort(t.begin(), t.end());
        arcs.push_back(Arc{t[0], t[1], t[2]});
      }
      out.add_scaled(expand(ForkDiagram(d.arc_count(), std::move(arcs))), coeff);
    }
  }
  return out;
}

TransitionMatrix SpechtWorkspace::matrix_p_to_m() {
  TransitionMatrix m;
  m.n = n_;
  m.from = Basis::P;
  m.to = Basis::M;
  m.index = syt_;
  m.below = below();
  m.weak_below = weak_below();
  size_t dim = syt_.size();
  m.entries.assign(dim, std::vector<Int>(dim, 0));
  for (size_t c = 0; c < dim; ++c) {
    const MComb& e = expand(polytabloid_diagram(syt_[c]));
    for (const auto& [md, coeff] : e.terms()) {
      int r = m_index(md);
      if (r < 0) throw std::logic_error("expansion term is not a basis M-diagram");
      m.entries[static_cast<size_t>(r)][c] = coeff;
    }
  }
  return m;
}

TransitionMatrix SpechtWorkspace::matrix_m_to_w() {
  TransitionMatrix m;
  m.n = n_;
  m.from = Basis::M;
  m.to = Basis::W;
  m.index = syt_;
  m.below = below();
  m.weak_below = weak_below();
  size_t dim = syt_.size();
  m.entries.assign(dim, std::vector<Int>(dim, 0));
  web_basis();
  for (size_t c = 0; c < dim; ++c)
    for (const auto& [key, term] : webs_of(m_basis_[c]).terms())
      m.entries[static_cast<size_t>(web_index(key))][c] = term.coeff;
  return m;
}

TransitionMatrix SpechtWorkspace::transition(Basis from, Basis to) {
  TransitionMatrix m;
  if (from == to) {
    m.n = n_;
    m.from = from;
    m.to = to;
    m.index = syt_;
    m.below = below();
    m.weak_below = weak_below();
    size_t dim = syt_.size();
    m.entries.assign(dim, std::vector<Int>(dim, 0));
    for (size_t i = 0; i < dim; ++i) m.entries[i][i] = 1;
    return m;
  }
  if (from == Basis::P && to == Basis::M) return matrix_p_to_m();
  if (from == Basis::M && to == Basis::W) return matrix_m_to_w();
  if (from == Basis::P && to == Basis::W) {
    // Directly: fork diagrams of tableaux expanded over the leading webs.
    TransitionMatrix m2;
    m2.n = n_;
    m2.from = Basis::P;
    m2.to = Basis::W;
    m2.index = syt_;
    m2.below = below();
    m2.weak_below = weak_below();
    size_t dim = syt_.size();
    m2.entries.assign(dim, std::vector<Int>(dim, 0));
    web_basis();
    for (size_t c = 0; c < dim; ++c)
      for (const auto& [key, term] : webs_of(polytabloid_diagram(syt_[c])).terms())
        m2.entries[static_cast<size_t>(web_index(key))][c] = term.coeff;
    return m2;
  }
  // Reverse directions: exact inverse of the forward matrix.
  TransitionMatrix fwd = transition(to, from);
  TransitionMatrix inv;
  inv.n = n_;
  inv.from = from;
  inv.to = to;
  inv.index = syt_;
  inv.below = below();
  inv.weak_below = weak_below();
  inv.entries = invert_integer(fwd.entries);
  return inv;
}

TransitionMatrix transition_matrix(Basis from, Basis to, int n) {
  SpechtWorkspace ws(n);
  return ws.transition(from, to);
}

MComb act_module(const MComb& x, int i, SpechtWorkspace& ws) { return ws.act(x, i); }

RepresentationReport check_representation(int n) {
  SpechtWorkspace ws(n);
  RepresentationReport rep;
  rep.n = n;
  rep.dimension = ws.dimension();
  size_t dim = static_cast<size_t>(ws.dimension());
  int gens = 3 * n - 1;

  std::vector<std::vector<std::vector<Int>>> g(static_cast<size_t>(gens));
  for (int i = 1; i <= gens; ++i) {
    auto& gi = g[static_cast<size_t>(i - 1)];
    gi.assign(dim, std::vector<Int>(dim, 0));
    for (size_t c = 0; c < dim; ++c) {
      MComb col = ws.act(MComb(ws.m_basis()[c]), i);
      for (const auto& [md, coeff] : col.terms()) {
        int r = ws.m_index(md);
        if (r < 0) throw std::logic_error("action left the M basis");
        gi[static_cast<size_t>(r)][c] = coeff;
      }
    }
  }
  std::vector<std::vector<Int>> id(dim, std::vector<Int>(dim, 0));
  for (size_t i = 0; i < dim; ++i) id[i][i] = 1;

  auto fail_with = [&rep](const std::string& what) {
    rep.ok = false;
    rep.first_violation = what;
    return rep;
  };
  for (int i = 1; i <= gens; ++i) {
    if (multiply(g[static_cast<size_t>(i - 1)], g[static_cast<size_t>(i - 1)]) != id) {
      std::ostringstream os;
      os << "s" << i << "^2 != id";
      return fail_with(os.str());
    }
  }
  for (int i = 1; i <= gens; ++i)
    for (int j = i + 2; j <= gens; ++j) {
      if (multiply(g[static_cast<size_t>(i - 1)], g[static_cast<size_t>(j - 1)]) !=
          multiply(g[static_cast<size_t>(j - 1)], g[static_cast<size_t>(i - 1)])) {
        std::ostringstream os;
        os << "s" << i << " s" << j << " != s" << j << " s" << i;
        return fail_with(os.str());
      }
    }
  for (int i = 1; i + 1 <= gens; ++i) {
    const auto& a = g[static_cast<size_t>(i - 1)];
    const auto& b = g[static_cast<size_t>(i)];
    if (multiply(a, multiply(b, a)) != multiply(b, multiply(a, b))) {
      std::ostringstream os;
      os << "braid relation fails at s" << i;
      return fail_with(os.str());
    }
  }
  rep.ok = true;
  return rep;
}

}  // namespace spechtweb
