#include "spechtweb/checks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace spechtweb {
namespace checks {

namespace {

std::string size_note(int used) { return " (n <= " + std::to_string(used) + ")"; }

ForkDiagram random_fork(int n, std::mt19937& rng) {
  std::vector<int> pts(static_cast<size_t>(3 * n));
  std::iota(pts.begin(), pts.end(), 1);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<std::array<int, 3>> triples;
  for (int k = 0; k < n; ++k)
    triples.push_back({pts[static_cast<size_t>(3 * k)], pts[static_cast<size_t>(3 * k + 1)],
                       pts[static_cast<size_t>(3 * k + 2)]});
  return ForkDiagram::from_triples(triples);
}

// All words with `n` of each letter, lexicographic.
void balanced_words(int n, std::vector<Letter>& acc, int np, int nz, int nm,
                    std::vector<BoundaryWord>& out) {
  if (static_cast<int>(acc.size()) == 3 * n) {
    out.emplace_back(acc);
    return;
  }
  if (np < n) { acc.push_back(Letter::plus); balanced_words(n, acc, np + 1, nz, nm, out); acc.pop_back(); }
  if (nz < n) { acc.push_back(Letter::zero); balanced_words(n, acc, np, nz + 1, nm, out); acc.pop_back(); }
  if (nm < n) { acc.push_back(Letter::minus); balanced_words(n, acc, np, nz, nm + 1, out); acc.pop_back(); }
}

// Brute-force weak order: u below w iff u is reachable from w by repeatedly
// removing a final letter of some reduced word.
bool prefix_reachable(const Permutation& u, const Permutation& w,
                      std::map<std::vector<int>, bool>& memo) {
  if (u == w) return true;
  if (u.length() >= w.length()) return false;
  auto it = memo.find(w.one_line());
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (int i = 1; i < w.points() && !ok; ++i) {
    Permutation shorter = w.then(Permutation::adjacent(w.points(), i));
    if (shorter.length() == w.length() - 1) ok = prefix_reachable(u, shorter, memo);
  }
  memo[w.one_line()] = ok;
  return ok;
}

std::vector<std::vector<char>> reachability(std::vector<std::vector<char>> adj) {
  size_t n = adj.size();
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (adj[i][k])
        for (size_t j = 0; j < n; ++j)
          if (adj[k][j]) adj[i][j] = 1;
  return adj;
}

}  // namespace

bool dimension_counts(int max_n, std::string& detail) {
  int used = std::min(max_n, 4);
  for (int n = 1; n <= used; ++n) {
    long long expect = syt_count(n);
    if (static_cast<long long>(enumerate_syt(n).size()) != expect) {
      detail = "enumeration disagrees with the hook length count at n=" + std::to_string(n);
      return false;
    }
  }
  // Independent cross-check: filter every filling.
  for (int n = 1; n <= std::min(used, 3); ++n) {
    std::vector<int> perm(static_cast<size_t>(3 * n));
    std::iota(perm.begin(), perm.end(), 1);
    long long count = 0;
    do {
      std::vector<std::vector<int>> rows(3);
      for (int r = 0; r < 3; ++r)
        rows[static_cast<size_t>(r)] =
            std::vector<int>(perm.begin() + r * n, perm.begin() + (r + 1) * n);
      if (Tableau(n, std::move(rows)).is_standard()) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (count != syt_count(n)) {
      detail = "brute-force filling count disagrees at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "counts match the hook length formula" + size_note(used) +
           ", brute-force filling scan agrees (n <= " + std::to_string(std::min(used, 3)) + ")";
  return true;
}

bool tableau_action_laws(int max_n, std::string& detail) {
  int used = std::min(max_n, 2);
  for (int n = 1; n <= used; ++n) {
    int pts = 3 * n;
    auto syt = enumerate_syt(n);
    for (const Tableau& t : syt) {
      for (int i = 1; i < pts; ++i) {
        Permutation si = Permutation::adjacent(pts, i);
        if (act(act(t, si), si) != t) { detail = "involution fails"; return false; }
        for (int j = 1; j < pts; ++j) {
          Permutation sj = Permutation::adjacent(pts, j);
          if (act(act(t, si), sj) != act(t, si.then(sj))) {
            detail = "right action law fails";
            return false;
          }
          if (std::abs(i - j) >= 2 &&
              act(act(t, si), sj) != act(act(t, sj), si)) {
            detail = "commutation fails on fillings";
            return false;
          }
        }
        if (i + 1 < pts) {
          Permutation sj = Permutation::adjacent(pts, i + 1);
          if (act(act(act(t, si), sj), si) != act(act(act(t, sj), si), sj)) {
            detail = "braid relation fails on fillings";
            return false;
          }
        }
      }
    }
  }
  detail = "involution, commutation, braid and composition laws hold on fillings" + size_note(used);
  return true;
}

bool sigma_round_trip(int max_n, std::string& detail) {
  int used = std::min(max_n, 3);
  for (int n = 1; n <= used; ++n) {
    Tableau t0 = Tableau::superstandard(n);
    if (!sigma_of(t0).is_identity()) { detail = "sigma of the superstandard tableau is not id"; return false; }
    for (const Tableau& t : enumerate_syt(n))
      if (act(t0, sigma_of(t)) != t) { detail = "round trip fails"; return false; }
  }
  detail = "act(T0, sigma_of(T)) == T for every standard tableau" + size_note(used);
  return true;
}

bool inversion_monotonicity(int max_len, std::string& detail) {
  long long pairs = 0;
  for (int n = 1; 3 * n <= max_len; ++n) {
    std::vector<BoundaryWord> words;
    std::vector<Letter> acc;
    balanced_words(n, acc, 0, 0, 0, words);
    for (const BoundaryWord& v : words) {
      long long inv_v = inversions(v);
      for (int i = 1; i <= v.size(); ++i)
        for (int j = i + 1; j <= v.size(); ++j) {
          if (v.at(i) <= v.at(j)) continue;  // the three moves all lower the first letter
          std::vector<Letter> ls;
          for (int k = 1; k <= v.size(); ++k) ls.push_back(v.at(k));
          std::swap(ls[static_cast<size_t>(i) - 1], ls[static_cast<size_t>(j) - 1]);
          BoundaryWord w{std::move(ls)};
          if (!precedes(w, v)) { detail = "constructed move not recognised"; return false; }
          ++pairs;
          if (inversions(w) >= inv_v) {
            detail = "Inv did not drop for " + w.str() + " < " + v.str();
            return false;
          }
        }
    }
  }
  detail = "Inv strictly drops across all " + std::to_string(pairs) +
           " covering moves on balanced words of length <= " + std::to_string(max_len);
  return true;
}

bool weak_order_axioms(int max_n, std::string& detail) {
  int used = std::min(max_n, 3);
  for (int n = 1; n <= used; ++n) {
    auto syt = enumerate_syt(n);
    size_t dim = syt.size();
    std::vector<std::vector<char>> leq(dim, std::vector<char>(dim, 0));
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) leq[i][j] = weak_leq(syt[i], syt[j]);
    for (size_t i = 0; i < dim; ++i) {
      if (!leq[i][i]) { detail = "not reflexive"; return false; }
      if (!leq[0][i]) { detail = "superstandard tableau is not minimal"; return false; }
      for (size_t j = 0; j < dim; ++j) {
        if (i != j && leq[i][j] && leq[j][i]) { detail = "not antisymmetric"; return false; }
        for (size_t k = 0; k < dim; ++k)
          if (leq[i][j] && leq[j][k] && !leq[i][k]) { detail = "not transitive"; return false; }
      }
    }
    // Brute-force reduced-word prefix search agrees.
    std::vector<Permutation> sig;
    for (const Tableau& t : syt) sig.push_back(sigma_of(t));
    for (size_t i = 0; i < dim; ++i) {
      std::map<std::vector<int>, bool> memo;
      for (size_t j = 0; j < dim; ++j)
        if (static_cast<bool>(leq[i][j]) != prefix_reachable(sig[i], sig[j], memo)) {
          detail = "length criterion disagrees with reduced-word prefix search";
          return false;
        }
    }
  }
  detail = "partial order axioms, minimality of T0, and the reduced-word prefix oracle" + size_note(used);
  return true;
}

bool weak_order_vs_word_orders(int max_n, std::string& detail) {
  int used = std::min(max_n, 3);
  int extra_pairs = 0;
  for (int n = 1; n <= used; ++n) {
    auto syt = enumerate_syt(n);
    size_t dim = syt.size();
    std::vector<BoundaryWord> words;
    for (const Tableau& t : syt) words.push_back(word_of(t));

    // Adjacent-position moves generate exactly the weak order.
    std::vector<std::vector<char>> adj(dim, std::vector<char>(dim, 0));
    std::vector<std::vector<char>> moves(dim, std::vector<char>(dim, 0));
    for (size_t i = 0; i < dim; ++i) {
      adj[i][i] = 1;
      moves[i][i] = 1;
      for (size_t j = 0; j < dim; ++j) {
        if (i == j) continue;
        if (precedes(words[i], words[j])) {
          moves[i][j] = 1;
          bool adjacent_positions = false;
          for (int p = 1; p < words[i].size(); ++p)
            if (words[i].at(p) != words[j].at(p) && words[i].at(p + 1) != words[j].at(p + 1)) {
              bool rest_equal = true;
              for (int q = 1; q <= words[i].size(); ++q)
                if (q != p && q != p + 1 && words[i].at(q) != words[j].at(q)) rest_equal = false;
              if (rest_equal) adjacent_positions = true;
            }
          if (adjacent_positions) adj[i][j] = 1;
        }
      }
    }
    auto adj_closure = reachability(adj);
    auto move_closure = reachability(moves);
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) {
        bool leq = weak_leq(syt[i], syt[j]);
        if (leq != static_cast<bool>(adj_closure[i][j])) {
          detail = "adjacent-move closure differs from the weak order at n=" + std::to_string(n);
          return false;
        }
        if (leq && !move_closure[i][j]) {
          detail = "weak order not refined by the move closure at n=" + std::to_string(n);
          return false;
        }
        if (!leq && move_closure[i][j]) ++extra_pairs;
      }
  }
  detail = "adjacent-move closure equals the weak order; full move closure refines it with " +
           std::to_string(extra_pairs) + " extra comparable pairs" + size_note(used);
  return true;
}

bool bijection_suite(int max_n, std::string& detail) {
  int used = std::min(max_n, 4);
  for (int n = 1; n <= used; ++n) {
    std::set<ForkDiagram> polys, ms;
    for (const Tableau& t : enumerate_syt(n)) {
      ForkDiagram p = polytabloid_diagram(t);
      ForkDiagram m = m_diagram(t);
      if (!is_polytabloid(p)) { detail = "column diagram is not a polytabloid diagram"; return false; }
      if (!is_m_diagram(m)) { detail = "matching diagram is not an M-diagram"; return false; }
      if (boundary_word(p) != word_of(t) || boundary_word(m) != word_of(t)) {
        detail = "boundary words disagree with the tableau word";
        return false;
      }
      polys.insert(p);
      ms.insert(m);
    }
    if (polys.size() != enumerate_syt(n).size() || ms.size() != polys.size()) {
      detail = "bijections are not injective at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "both diagram maps injective with matching boundary words" + size_note(used);
  return true;
}

bool fork_census(int max_n, std::string& detail) {
  int used = std::min(max_n, 3);
  for (int n = 1; n <= used; ++n) {
    long long m_count = 0;
    for (const ForkDiagram& d : enumerate_fork_diagrams(n)) {
      bool m = is_m_diagram(d);
      if (m != (crossing_count(d) == 0)) {
        detail = "crossing count does not characterise M-diagrams";
        return false;
      }
      if (m) ++m_count;
    }
    if (m_count != syt_count(n)) {
      detail = "M-diagram census disagrees with the dimension at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "c(d)=0 iff M-diagram, and the census equals the dimension" + size_note(used);
  return true;
}

bool web_relation_coefficients(std::string& detail) {
  Web empty = Web::from_parts(0, 0, {}, {});
  Web circle = Web::from_parts(0, 1, {}, {});
  WebSum three;
  three.add(empty, 3);
  if (!(reduce(circle) == three)) { detail = "a circle did not evaluate to 3"; return false; }
  Web two_circles = Web::from_parts(0, 2, {}, {});
  WebSum nine;
  nine.add(empty, 9);
  if (!(reduce(two_circles) == nine)) { detail = "two circles did not evaluate to 9"; return false; }

  // A strand through a bigon: tripod whose left leg runs through one.
  WebBuilder b(3);
  using WB = WebBuilder;
  b.source({WB::B(2), WB::B(3), WB::E(1)});
  b.sink({WB::E(1), WB::E(2), WB::E(3)});
  b.source({WB::E(2), WB::B(1), WB::E(3)});
  WebSum reduced = reduce(b.build());
  WebSum expected;
  expected.add(tripod_row(1), -2);
  if (!(reduced == expected)) { detail = "a bigon did not contribute the factor -2"; return false; }
  detail = "circle = 3 and bigon = -2 on constructed webs";
  return true;
}

bool act_web_involution(int n, std::string& detail) {
  SpechtWorkspace ws(n);
  for (const Web& w : ws.web_basis()) {
    WebSum x;
    x.add(w, 1);
    for (int i = 1; i < 3 * n; ++i)
      if (!(act_web(act_web(x, i), i) == x)) {
        detail = "stacking the same swap twice did not return the web";
        return false;
      }
  }
  detail = "every generator acts as an involution on all " + std::to_string(ws.dimension()) +
           " basis webs (n=" + std::to_string(n) + ")";
  return true;
}

bool route_equality(int max_n, std::string& detail) {
  int used = std::min(max_n, 3);
  long long count = 0;
  for (int n = 1; n <= used; ++n)
    for (const ForkDiagram& d : enumerate_fork_diagrams(n)) {
      if (!(web_of_fork(d) == web_of_fork_via_action(d))) {
        detail = "geometric embedding and stacked-action routes disagree";
        return false;
      }
      ++count;
    }
  detail = "geometric and action routes agree on all " + std::to_string(count) +
           " fork diagrams" + size_note(used);
  return true;
}

bool reduction_confluence(int max_n, int samples, unsigned long seed, std::string& detail) {
  int used = std::min(max_n, 3);
  std::mt19937 rng(static_cast<unsigned long>(seed));
  for (int n = 1; n <= used; ++n)
    for (int s = 0; s < samples; ++s) {
      ForkDiagram d = random_fork(n, rng);
      WebSum base = web_of_fork(d);
      for (int trial = 0; trial < 2; ++trial)
        if (!(web_of_fork(d, Schedule(rng())) == base)) {
          detail = "randomised rewrite schedule changed the result";
          return false;
        }
    }
  detail = std::to_string(samples) + " random fork diagrams per size" + size_note(used) +
           ", two shuffled schedules each";
  return true;
}

bool oracle_equivalence(int max_n, std::string& detail) {
  int used = std::min(max_n, 3);
  long long count = 0;
  for (int n = 1; n <= used; ++n) {
    SpechtWorkspace ws(n);
    for (const ForkDiagram& d : enumerate_fork_diagrams(n)) {
      WebSum via_m;
      for (const auto& [m, c] : ws.expand(d).terms()) via_m.add_scaled(ws.webs_of(m), c);
      if (!(via_m == ws.webs_of(d))) {
        detail = "M-expansion and web reduction disagree";
        return false;
      }
      ++count;
    }
  }
  detail = "M-route equals the web route on all " + std::to_string(count) + " fork diagrams" +
           size_note(used);
  return true;
}

bool matrix_suite(int max_n, std::string& detail) {
  int used = std::min(max_n, 3);
  int weak_ok = 0, weak_total = 0;
  for (int n = 1; n <= used; ++n) {
    SpechtWorkspace ws(n);
    for (Basis from : {Basis::P, Basis::M, Basis::W})
      for (Basis to : {Basis::P, Basis::M, Basis::W}) {
        if (from == to) continue;
        TransitionMatrix m = ws.transition(from, to);
        if (!is_unitriangular(m)) {
          detail = basis_name(from) + "->" + basis_name(to) +
                   " is not unitriangular at n=" + std::to_string(n);
          return false;
        }
        ++weak_total;
        if (weak_order_unitriangular(m)) ++weak_ok;
        for (size_t r = 0; r < m.entries.size(); ++r)
          if (m.entries[r][0] != (r == 0 ? 1 : 0)) {
            detail = "first column is not the first unit vector";
            return false;
          }
      }
    Int det = determinant(ws.transition(Basis::P, Basis::M).entries);
    if (det != 1 && det != -1) { detail = "P->M determinant is not a unit"; return false; }
    auto product = multiply(ws.transition(Basis::M, Basis::W).entries,
                            ws.transition(Basis::P, Basis::M).entries);
    if (product != ws.transition(Basis::P, Basis::W).entries) {
      detail = "P->W differs from the composite M->W * P->M";
      return false;
    }
  }
  detail = "six base changes unitriangular in the move order, unit determinant, composite agrees" +
           size_note(used) + "; the coarser weak order suffices for " + std::to_string(weak_ok) +
           "/" + std::to_string(weak_total) + " of them";
  return true;
}

bool representation_suite(int max_n, std::string& detail) {
  int used = std::min(max_n, 3);
  for (int n = 1; n <= used; ++n) {
    RepresentationReport rep = check_representation(n);
    if (!rep.ok) {
      detail = "relations fail at n=" + std::to_string(n) + ": " + rep.first_violation;
      return false;
    }
  }
  detail = "involution, commutation and braid relations hold on the M basis" + size_note(used);
  return true;
}

std::vector<CheckResult> run_all(int n, unsigned long seed) {
  std::vector<CheckResult> out;
  auto run = [&out](const std::string& name, auto&& fn) {
    CheckResult r{name, false, {}};
    r.pass = fn(r.detail);
    out.push_back(std::move(r));
  };
  run("dimension-counts", [&](std::string& d) { return dimension_counts(n, d); });
  run("tableau-action-laws", [&](std::string& d) { return tableau_action_laws(n, d); });
  run("sigma-round-trip", [&](std::string& d) { return sigma_round_trip(n, d); });
  run("inversion-monotonicity", [&](std::string& d) { return inversion_monotonicity(std::min(3 * n, 12), d); });
  run("weak-order-axioms", [&](std::string& d) { return weak_order_axioms(n, d); });
  run("weak-order-vs-word-orders", [&](std::string& d) { return weak_order_vs_word_orders(n, d); });
  run("bijections", [&](std::string& d) { return bijection_suite(n, d); });
  run("fork-census", [&](std::string& d) { return fork_census(n, d); });
  run("web-relations", [&](std::string& d) { return web_relation_coefficients(d); });
  run("act-web-involution", [&](std::string& d) { return act_web_involution(std::min(n, 2), d); });
  run("route-equality", [&](std::string& d) { return route_equality(n, d); });
  run("reduction-confluence",
      [&](std::string& d) { return reduction_confluence(n, 200, seed, d); });
  run("oracle-equivalence", [&](std::string& d) { return oracle_equivalence(n, d); });
  run("matrices", [&](std::string& d) { return matrix_suite(n, d); });
  run("representation", [&](std::string& d) { return representation_suite(n, d); });
  return out;
}

}  // namespace checks
}  // namespace spechtweb
