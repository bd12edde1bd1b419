#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace spechtweb {

/// Permutation of {1..n} in one-line notation, 1-based.
///
/// Composition is fixed left-to-right throughout the project:
/// (p.then(q))(x) = q(p(x)).  All action laws are stated and tested
/// under this convention.
class Permutation {
 public:
  explicit Permutation(int n_points);  // identity
  static Permutation from_one_line(std::vector<int> images);
  static Permutation transposition(int n_points, int a, int b);
  static Permutation adjacent(int n_points, int i);  // s_i = (i, i+1)

  int points() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<size_t>(x) - 1]; }
  const std::vector<int>& one_line() const { return images_; }

  Permutation then(const Permutation& q) const;
  Permutation inverse() const;
  bool is_identity() const;
  int length() const;  // Coxeter length = number of inversions

  /// A reduced word, applied left to right: p = s_{w[0]} then s_{w[1]} ...
  std::vector<int> reduced_word() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Letters of a boundary word, totally ordered - < 0 < +.
enum class Letter : unsigned char { minus = 0, zero = 1, plus = 2 };

class BoundaryWord {
 public:
  BoundaryWord() = default;
  explicit BoundaryWord(std::vector<Letter> letters);
  static BoundaryWord parse(std::string_view text);  // over "+0-"

  int size() const { return static_cast<int>(letters_.size()); }
  Letter at(int i) const { return letters_[static_cast<size_t>(i) - 1]; }  // 1-based
  std::string str() const;
  bool balanced() const;  // equal counts of the three letters

  auto operator<=>(const BoundaryWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// A 3 x n filling of {1..3n}.  Non-standard fillings are representable
/// (the symmetric-group action produces them transiently); every
/// basis-indexing operation requires is_standard().
class Tableau {
 public:
  Tableau(int n, std::vector<std::vector<int>> rows);
  static Tableau superstandard(int n);  // column j = {3j-2, 3j-1, 3j}

  int cols() const { return n_; }
  int points() const { return 3 * n_; }
  int at(int row, int col) const;  // row in 1..3, col in 1..n
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> column(int col) const;
  std::vector<int> column_word() const;  // column-reading word
  int row_of(int entry) const;           // 1..3
  bool is_standard() const;

  auto operator<=>(const Tableau&) const = default;

 private:
  int n_;
  std::vector<std::vector<int>> rows_;  // 3 rows of n entries
};

/// Right action by permuting entries: entry e is replaced by sigma(e) in place.
/// act(act(t, p), q) == act(t, p.then(q)).
Tableau act(const Tableau& t, const Permutation& sigma);

/// The unique sigma with act(superstandard(n), sigma) == t.  Requires t standard.
Permutation sigma_of(const Tableau& t);

/// Position i is marked by the row of entry i: row 1 -> '+', 2 -> '0', 3 -> '-'.
BoundaryWord word_of(const Tableau& t);

/// Number of pairs i < j with w_i > w_j under - < 0 < +.
long long inversions(const BoundaryWord& w);

/// w ≺ v: w is obtained from v by replacing, at exactly two (not necessarily
/// adjacent) positions, a pair (+,0) with (0,+), (+,-) with (-,+), or
/// (0,-) with (-,0).
bool precedes(const BoundaryWord& w, const BoundaryWord& v);

/// Weak Bruhat order on tableaux via t = superstandard . sigma:
/// a <= b iff len(sigma_b) == len(sigma_a) + len(sigma_a^-1 then sigma_b),
/// i.e. a reduced word of sigma_a extends, letter by letter from the first,
/// to one of sigma_b.  Validated against brute-force prefix search and
/// against the adjacent-move characterisation of the word order.
bool weak_leq(const Tableau& a, const Tableau& b);

/// All standard Young tableaux of shape (n,n,n), ordered lexicographically
/// by column-reading word (equivalently by the one-line notation of sigma_of,
/// which makes the order a linear extension of weak_leq).
std::vector<Tableau> enumerate_syt(int n);

/// Hook length count 2*(3n)! / (n! (n+1)! (n+2)!).
long long syt_count(int n);

}  // namespace spechtweb
