#include "spechtweb/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "spechtweb/ints.hpp"

namespace spechtweb {

Permutation::Permutation(int n_points) {
  if (n_points < 0) throw std::invalid_argument("negative permutation size");
  images_.resize(static_cast<size_t>(n_points));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  Permutation p(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size(), false);
  for (int x : images) {
    if (x < 1 || x > static_cast<int>(images.size()) || seen[static_cast<size_t>(x) - 1])
      throw std::invalid_argument("one-line notation is not a bijection");
    seen[static_cast<size_t>(x) - 1] = true;
  }
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int n_points, int a, int b) {
  Permutation p(n_points);
  if (a < 1 || b < 1 || a > n_points || b > n_points || a == b)
    throw std::invalid_argument("bad transposition");
  std::swap(p.images_[static_cast<size_t>(a) - 1], p.images_[static_cast<size_t>(b) - 1]);
  return p;
}

Permutation Permutation::adjacent(int n_points, int i) {
  if (i < 1 || i + 1 > n_points) throw std::invalid_argument("generator index out of range");
  return transposition(n_points, i, i + 1);
}

Permutation Permutation::then(const Permutation& q) const {
  if (points() != q.points()) throw std::invalid_argument("size mismatch in composition");
  Permutation r(points());
  for (size_t i = 0; i < images_.size(); ++i)
    r.images_[i] = q.images_[static_cast<size_t>(images_[i]) - 1];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r(points());
  for (size_t i = 0; i < images_.size(); ++i)
    r.images_[static_cast<size_t>(images_[i]) - 1] = static_cast<int>(i) + 1;
  return r;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (size_t i = 0; i < images_.size(); ++i)
    for (size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inv;
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  // Peeling descents from the left: if w has a descent at position i then
  // w = s_i then w', where w' is w with positions i, i+1 swapped.
  std::vector<int> word;
  std::vector<int> v = images_;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] > v[i + 1]) {
        word.push_back(static_cast<int>(i) + 1);
        std::swap(v[i], v[i + 1]);
        changed = true;
        break;
      }
    }
  }
  return word;
}

BoundaryWord::BoundaryWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

BoundaryWord BoundaryWord::parse(std::string_view text) {
  std::vector<Letter> ls;
  ls.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+': ls.push_back(Letter::plus); break;
      case '0': ls.push_back(Letter::zero); break;
      case '-': ls.push_back(Letter::minus); break;
      default: throw std::invalid_argument("boundary word letter must be one of +0-");
    }
  }
  return BoundaryWord(std::move(ls));
}

std::string BoundaryWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_)
    s.push_back(l == Letter::plus ? '+' : (l == Letter::zero ? '0' : '-'));
  return s;
}

bool BoundaryWord::balanced() const {
  int c[3] = {0, 0, 0};
  for (Letter l : letters_) ++c[static_cast<int>(l)];
  return c[0] == c[1] && c[1] == c[2];
}

Tableau::Tableau(int n, std::vector<std::vector<int>> rows) : n_(n), rows_(std::move(rows)) {
  if (n_ < 1) throw std::invalid_argument("tableau needs n >= 1");
  if (rows_.size() != 3) throw std::invalid_argument("tableau needs exactly 3 rows");
  std::vector<bool> seen(static_cast<size_t>(3 * n_), false);
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != n_) throw std::invalid_argument("ragged tableau row");
    for (int e : row) {
      if (e < 1 || e > 3 * n_ || seen[static_cast<size_t>(e) - 1])
        throw std::invalid_argument("tableau entries must be a permutation of 1..3n");
      seen[static_cast<size_t>(e) - 1] = true;
    }
  }
}

Tableau Tableau::superstandard(int n) {
  if (n < 1) throw std::invalid_argument("superstandard tableau needs n >= 1");
  std::vector<std::vector<int>> rows(3, std::vector<int>(static_cast<size_t>(n)));
  for (int c = 1; c <= n; ++c)
    for (int r = 1; r <= 3; ++r) rows[static_cast<size_t>(r) - 1][static_cast<size_t>(c) - 1] = 3 * (c - 1) + r;
  return Tableau(n, std::move(rows));
}

int Tableau::at(int row, int col) const {
  if (row < 1 || row > 3 || col < 1 || col > n_) throw std::invalid_argument("cell out of range");
  return rows_[static_cast<size_t>(row) - 1][static_cast<size_t>(col) - 1];
}

std::vector<int> Tableau::column(int col) const {
  return {at(1, col), at(2, col), at(3, col)};
}

std::vector<int> Tableau::column_word() const {
  std::vector<int> w;
  w.reserve(static_cast<size_t>(3 * n_));
  for (int c = 1; c <= n_; ++c)
    for (int r = 1; r <= 3; ++r) w.push_back(at(r, c));
  return w;
}

int Tableau::row_of(int entry) const {
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= n_; ++c)
      if (at(r, c) == entry) return r;
  throw std::invalid_argument("entry not present");
}

bool Tableau::is_standard() const {
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c < n_; ++c)
      if (at(r, c) >= at(r, c + 1)) return false;
  for (int r = 1; r < 3; ++r)
    for (int c = 1; c <= n_; ++c)
      if (at(r, c) >= at(r + 1, c)) return false;
  return true;
}

Tableau act(const Tableau& t, const Permutation& sigma) {
  if (sigma.points() != t.points()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::vector<int>> rows = t.rows();
  for (auto& row : rows)
    for (int& e : row) e = sigma(e);
  return Tableau(t.cols(), std::move(rows));
}

Permutation sigma_of(const Tableau& t) {
  if (!t.is_standard()) throw std::invalid_argument("sigma_of requires a standard tableau");
  std::vector<int> images(static_cast<size_t>(t.points()));
  for (int c = 1; c <= t.cols(); ++c)
    for (int r = 1; r <= 3; ++r) images[static_cast<size_t>(3 * (c - 1) + r) - 1] = t.at(r, c);
  return Permutation::from_one_line(std::move(images));
}

BoundaryWord word_of(const Tableau& t) {
  if (!t.is_standard()) throw std::invalid_argument("word_of requires a standard tableau");
  std::vector<Letter> ls(static_cast<size_t>(t.points()));
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= t.cols(); ++c)
      ls[static_cast<size_t>(t.at(r, c)) - 1] =
          r == 1 ? Letter::plus : (r == 2 ? Letter::zero : Letter::minus);
  return BoundaryWord(std::move(ls));
}

long long inversions(const BoundaryWord& w) {
  long long count = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (static_cast<int>(w.at(i)) > static_cast<int>(w.at(j))) ++count;
  return count;
}

bool precedes(const BoundaryWord& w, const BoundaryWord& v) {
  if (w.size() != v.size()) throw std::invalid_argument("word length mismatch");
  int i = 0, j = 0;
  for (int k = 1; k <= w.size(); ++k) {
    if (w.at(k) == v.at(k)) continue;
    if (i == 0) i = k;
    else if (j == 0) j = k;
    else return false;  // more than two differences
  }
  if (j == 0) return false;  // fewer than two differences
  // v carries the larger letter first; w is v with the pair exchanged.
  return v.at(i) > v.at(j) && w.at(i) == v.at(j) && w.at(j) == v.at(i);
}

bool weak_leq(const Tableau& a, const Tableau& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("tableau size mismatch");
  Permutation u = sigma_of(a), w = sigma_of(b);
  Permutation rest = u.inverse().then(w);
  return w.length() == u.length() + rest.length();
}

namespace {

void enumerate_rec(int n, int next_value, std::vector<int>& filled,  // filled[r] = row length
                   std::vector<std::vector<int>>& rows, std::vector<Tableau>& out) {
  if (next_value > 3 * n) {
    out.emplace_back(n, rows);
    return;
  }
  for (int r = 0; r < 3; ++r) {
    if (filled[static_cast<size_t>(r)] == n) continue;
    if (r > 0 && filled[static_cast<size_t>(r)] >= filled[static_cast<size_t>(r) - 1]) continue;
    rows[static_cast<size_t>(r)][static_cast<size_t>(filled[static_cast<size_t>(r)])] = next_value;
    ++filled[static_cast<size_t>(r)];
    enumerate_rec(n, next_value + 1, filled, rows, out);
    --filled[static_cast<size_t>(r)];
  }
}

}  // namespace

std::vector<Tableau> enumerate_syt(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_syt needs n >= 1");
  std::vector<Tableau> out;
  std::vector<int> filled(3, 0);
  std::vector<std::vector<int>> rows(3, std::vector<int>(static_cast<size_t>(n), 0));
  enumerate_rec(n, 1, filled, rows, out);
  std::sort(out.begin(), out.end(), [](const Tableau& x, const Tableau& y) {
    return x.column_word() < y.column_word();
  });
  return out;
}

long long syt_count(int n) {
  if (n < 1) throw std::invalid_argument("syt_count needs n >= 1");
  auto factorial = [](int k) {
    Int f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  Int num = 2 * factorial(3 * n);
  Int den = factorial(n) * factorial(n + 1) * factorial(n + 2);
  Int q = num / den;
  if (q * den != num) throw std::logic_error("hook length formula did not divide evenly");
  return q.convert_to<long long>();
}

}  // namespace spechtweb
