#include "spechtweb/diagrams.hpp"

#include <algorithm>
#include <stdexcept>

namespace spechtweb {

ForkDiagram::ForkDiagram(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n_ < 1) throw std::invalid_argument("fork diagram needs n >= 1");
  if (static_cast<int>(arcs_.size()) != n_) throw std::invalid_argument("fork diagram needs n arcs");
  std::vector<bool> seen(static_cast<size_t>(3 * n_), false);
  for (const Arc& a : arcs_) {
    if (!(a.left < a.middle && a.middle < a.right))
      throw std::invalid_argument("arc endpoints must satisfy a < b < c");
    for (int p : {a.left, a.middle, a.right}) {
      if (p < 1 || p > 3 * n_ || seen[static_cast<size_t>(p) - 1])
        throw std::invalid_argument("arc endpoints must partition 1..3n");
      seen[static_cast<size_t>(p) - 1] = true;
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
}

ForkDiagram ForkDiagram::from_triples(const std::vector<std::array<int, 3>>& triples) {
  std::vector<Arc> arcs;
  arcs.reserve(triples.size());
  for (auto t : triples) {
    std::sort(t.begin(), t.end());
    arcs.push_back(Arc{t[0], t[1], t[2]});
  }
  return ForkDiagram(static_cast<int>(triples.size()), std::move(arcs));
}

bool interleaves(int a, int b, int c, int d) {
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

ForkDiagram polytabloid_diagram(const Tableau& t) {
  if (!t.is_standard()) throw std::invalid_argument("polytabloid_diagram requires a standard tableau");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(t.cols()));
  for (int c = 1; c <= t.cols(); ++c) arcs.push_back(Arc{t.at(1, c), t.at(2, c), t.at(3, c)});
  return ForkDiagram(t.cols(), std::move(arcs));
}

ForkDiagram m_diagram(const Tableau& t) {
  if (!t.is_standard()) throw std::invalid_argument("m_diagram requires a standard tableau");
  BoundaryWord w = word_of(t);
  const int len = w.size();
  std::vector<int> left_of(static_cast<size_t>(len) + 1, 0);   // middle -> left partner
  std::vector<int> right_of(static_cast<size_t>(len) + 1, 0);  // middle -> right partner
  std::vector<int> stack;
  for (int i = 1; i <= len; ++i) {
    if (w.at(i) == Letter::plus) stack.push_back(i);
    else if (w.at(i) == Letter::zero) {
      if (stack.empty()) throw std::logic_error("no unmatched + to the left of a 0");
      left_of[static_cast<size_t>(i)] = stack.back();
      stack.pop_back();
    }
  }
  stack.clear();
  for (int i = 1; i <= len; ++i) {
    if (w.at(i) == Letter::zero) stack.push_back(i);
    else if (w.at(i) == Letter::minus) {
      if (stack.empty()) throw std::logic_error("no unmatched 0 to the left of a -");
      right_of[static_cast<size_t>(stack.back())] = i;
      stack.pop_back();
    }
  }
  std::vector<Arc> arcs;
  for (int b = 1; b <= len; ++b)
    if (w.at(b) == Letter::zero) arcs.push_back(Arc{left_of[static_cast<size_t>(b)], b, right_of[static_cast<size_t>(b)]});
  return ForkDiagram(t.cols(), std::move(arcs));
}

bool counted_crossing(const ForkDiagram& d, int i, int j) {
  const Arc& x = d.arc(i);
  const Arc& y = d.arc(j);
  return interleaves(x.left, x.middle, y.left, y.middle) ||
         interleaves(x.middle, x.right, y.middle, y.right);
}

bool is_m_diagram(const ForkDiagram& d) {
  for (int i = 0; i < d.arc_count(); ++i)
    for (int j = i + 1; j < d.arc_count(); ++j)
      if (counted_crossing(d, i, j)) return false;
  return true;
}

bool is_polytabloid(const ForkDiagram& d) {
  const auto& arcs = d.arcs();  // sorted by left endpoint
  for (size_t i = 0; i + 1 < arcs.size(); ++i)
    if (arcs[i].middle >= arcs[i + 1].middle || arcs[i].right >= arcs[i + 1].right) return false;
  std::vector<std::vector<int>> rows(3);
  for (const Arc& a : arcs) {
    rows[0].push_back(a.left);
    rows[1].push_back(a.middle);
    rows[2].push_back(a.right);
  }
  return Tableau(d.arc_count(), std::move(rows)).is_standard();
}

int crossing_count(const ForkDiagram& d) {
  int c = 0;
  for (int i = 0; i < d.arc_count(); ++i)
    for (int j = i + 1; j < d.arc_count(); ++j) {
      const Arc& x = d.arc(i);
      const Arc& y = d.arc(j);
      if (interleaves(x.left, x.middle, y.left, y.middle)) ++c;
      if (interleaves(x.middle, x.right, y.middle, y.right)) ++c;
    }
  return c;
}

BoundaryWord boundary_word(const ForkDiagram& d) {
  std::vector<Letter> ls(static_cast<size_t>(d.points()));
  for (const Arc& a : d.arcs()) {
    ls[static_cast<size_t>(a.left) - 1] = Letter::plus;
    ls[static_cast<size_t>(a.middle) - 1] = Letter::zero;
    ls[static_cast<size_t>(a.right) - 1] = Letter::minus;
  }
  return BoundaryWord(std::move(ls));
}

namespace {

void forks_rec(int points, std::vector<bool>& used, std::vector<Arc>& acc,
               std::vector<ForkDiagram>& out) {
  int a = 0;
  for (int p = 1; p <= points; ++p)
    if (!used[static_cast<size_t>(p) - 1]) { a = p; break; }
  if (a == 0) {
    out.emplace_back(points / 3, acc);
    return;
  }
  used[static_cast<size_t>(a) - 1] = true;
  for (int b = a + 1; b <= points; ++b) {
    if (used[static_cast<size_t>(b) - 1]) continue;
    used[static_cast<size_t>(b) - 1] = true;
    for (int c = b + 1; c <= points; ++c) {
      if (used[static_cast<size_t>(c) - 1]) continue;
      used[static_cast<size_t>(c) - 1] = true;
      acc.push_back(Arc{a, b, c});
      forks_rec(points, used, acc, out);
      acc.pop_back();
      used[static_cast<size_t>(c) - 1] = false;
    }
    used[static_cast<size_t>(b) - 1] = false;
  }
  used[static_cast<size_t>(a) - 1] = false;
}

}  // namespace

std::vector<ForkDiagram> enumerate_fork_diagrams(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_fork_diagrams needs n >= 1");
  std::vector<ForkDiagram> out;
  std::vector<bool> used(static_cast<size_t>(3 * n), false);
  std::vector<Arc> acc;
  forks_rec(3 * n, used, acc, out);
  return out;
}

std::vector<ForkDiagram> enumerate_m_diagrams(int n) {
  std::vector<ForkDiagram> out;
  for (const Tableau& t : enumerate_syt(n)) out.push_back(m_diagram(t));
  return out;
}

}  // namespace spechtweb
