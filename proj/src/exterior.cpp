#include "ellconf/exterior.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ellconf {

int edge_index(int i, int j, int n) {
  // lex rank of (i,j) with 1 <= i < j <= n
  return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

std::pair<int, int> edge_of_index(int e, int n) {
  for (int i = 1; i < n; ++i) {
    int cnt = n - i;
    if (e < cnt) return {i, i + 1 + e};
    e -= cnt;
  }
  throw std::out_of_range("edge_of_index");
}

GenCode gen_w(int i, int j, int n) {
  if (i == j) throw std::invalid_argument("gen_w: equal indices");
  if (i > j) std::swap(i, j);  // w_{j,i} := w_{i,j}, no sign
  if (i < 1 || j > n) throw std::out_of_range("gen_w: index out of range");
  return static_cast<GenCode>(2 * n + edge_index(i, j, n));
}

int gen_count(int n) { return 2 * n + n * (n - 1) / 2; }

std::string gen_name(GenCode g, int n) {
  std::ostringstream os;
  if (is_w(g, n)) {
    auto [i, j] = edge_of_index(g - 2 * n, n);
    os << "w(" << i << "," << j << ")";
  } else if (g % 2 == 0) {
    os << "x" << xy_point(g);
  } else {
    os << "y" << xy_point(g);
  }
  return os.str();
}

std::pair<int, int> Monomial::bidegree(int n) const {
  int p = 0, q = 0;
  for (GenCode c : g) (is_w(c, n) ? q : p)++;
  return {p, q};
}

int Monomial::weight(int n) const {
  int w = 0;
  for (GenCode c : g) {
    if (is_x(c, n)) ++w;
    if (is_y(c, n)) --w;
  }
  return w;
}

std::optional<std::pair<Monomial, int>> sort_word(std::vector<GenCode> w) {
  // insertion sort counting inversions; all generators are odd
  int inv = 0;
  for (size_t i = 1; i < w.size(); ++i) {
    GenCode v = w[i];
    size_t j = i;
    while (j > 0 && w[j - 1] > v) {
      w[j] = w[j - 1];
      --j;
      ++inv;
    }
    w[j] = v;
  }
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return std::nullopt;
  return std::make_pair(Monomial{std::move(w)}, inv % 2 == 0 ? 1 : -1);
}

void MultiVector::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

Rational MultiVector::coeff(const Monomial& m) const {
  auto it = t.find(m);
  return it == t.end() ? Rational(0) : it->second;
}

std::optional<std::pair<int, int>> MultiVector::bidegree() const {
  std::optional<std::pair<int, int>> d;
  for (auto& [m, c] : t) {
    auto b = m.bidegree(n);
    if (!d)
      d = b;
    else if (*d != b)
      return std::nullopt;
  }
  return d;
}

MultiVector mv_gen(int n, GenCode g) {
  MultiVector v(n);
  v.add(Monomial{{g}}, Rational(1));
  return v;
}

MultiVector mv_mono(int n, std::vector<GenCode> word) {
  MultiVector v(n);
  if (auto s = sort_word(std::move(word)))
    v.add(s->first, Rational(s->second));
  return v;
}

MultiVector mv_scalar(int n, const Rational& c) {
  MultiVector v(n);
  v.add(Monomial{}, c);
  return v;
}

MultiVector operator+(const MultiVector& a, const MultiVector& b) {
  if (a.n != b.n) throw std::invalid_argument("ambient mismatch");
  MultiVector r = a;
  for (auto& [m, c] : b.t) r.add(m, c);
  return r;
}

MultiVector operator-(const MultiVector& a, const MultiVector& b) {
  if (a.n != b.n) throw std::invalid_argument("ambient mismatch");
  MultiVector r = a;
  for (auto& [m, c] : b.t) r.add(m, -c);
  return r;
}

MultiVector operator*(const Rational& c, const MultiVector& a) {
  MultiVector r(a.n);
  if (c == 0) return r;
  for (auto& [m, x] : a.t) r.t.emplace(m, c * x);
  return r;
}

namespace {
// merge two sorted square-free words with the Koszul sign
std::optional<std::pair<Monomial, int>> merge_words(const Monomial& a,
                                                    const Monomial& b) {
  Monomial r;
  r.g.reserve(a.g.size() + b.g.size());
  size_t i = 0, j = 0;
  long crossings = 0;
  while (i < a.g.size() && j < b.g.size()) {
    if (a.g[i] < b.g[j]) {
      r.g.push_back(a.g[i++]);
    } else if (b.g[j] < a.g[i]) {
      // b[j] jumps over the remaining a-letters, all odd
      crossings += static_cast<long>(a.g.size() - i);
      r.g.push_back(b.g[j++]);
    } else {
      return std::nullopt;
    }
  }
  while (i < a.g.size()) r.g.push_back(a.g[i++]);
  while (j < b.g.size()) r.g.push_back(b.g[j++]);
  return std::make_pair(std::move(r), crossings % 2 == 0 ? 1 : -1);
}
}  // namespace

MultiVector mul(const MultiVector& a, const MultiVector& b) {
  if (a.n != b.n) throw std::invalid_argument("mul: ambient mismatch");
  MultiVector r(a.n);
  for (auto& [ma, ca] : a.t)
    for (auto& [mb, cb] : b.t)
      if (auto m = merge_words(ma, mb))
        r.add(m->first, ca * cb * m->second);
  return r;
}

MultiVector apply(const Derivation& d, const MultiVector& v) {
  if (d.n != v.n) throw std::invalid_argument("apply: ambient mismatch");
  MultiVector r(v.n);
  for (auto& [m, c] : v.t) {
    for (size_t k = 0; k < m.g.size(); ++k) {
      auto it = d.image.find(m.g[k]);
      if (it == d.image.end())
        throw std::invalid_argument("derivation image missing for " +
                                    gen_name(m.g[k], v.n));
      if (it->second.zero()) continue;
      // all generators have total degree 1, so deg(prefix) = k
      int sign = (d.odd && k % 2 == 1) ? -1 : 1;
      Monomial pre{std::vector<GenCode>(m.g.begin(), m.g.begin() + k)};
      Monomial suf{std::vector<GenCode>(m.g.begin() + k + 1, m.g.end())};
      for (auto& [mi, ci] : it->second.t) {
        auto left = merge_words(pre, mi);
        if (!left) continue;
        auto full = merge_words(left->first, suf);
        if (!full) continue;
        r.add(full->first, c * ci *
                               Rational(sign * left->second * full->second));
      }
    }
  }
  return r;
}

MultiVector substitute(const MultiVector& v,
                       const std::map<GenCode, MultiVector>& images) {
  for (auto& [g, img] : images) {
    Monomial src{{g}};
    auto bd = img.bidegree();
    if (!img.zero() && (!bd || *bd != src.bidegree(v.n)))
      throw std::invalid_argument("substitute: inhomogeneous image for " +
                                  gen_name(g, v.n));
  }
  MultiVector r(v.n);
  for (auto& [m, c] : v.t) {
    MultiVector acc = mv_scalar(v.n, c);
    for (GenCode g : m.g) {
      auto it = images.find(g);
      acc = mul(acc, it == images.end() ? mv_gen(v.n, g) : it->second);
      if (acc.zero()) break;
    }
    for (auto& [mm, cc] : acc.t) r.add(mm, cc);
  }
  return r;
}

std::optional<std::pair<Monomial, int>> act_permutation(
    const Monomial& m, const std::vector<int>& perm, int n) {
  std::vector<GenCode> w;
  w.reserve(m.g.size());
  for (GenCode g : m.g) {
    if (is_w(g, n)) {
      auto [i, j] = edge_of_index(g - 2 * n, n);
      w.push_back(gen_w(perm[i], perm[j], n));
    } else if (g % 2 == 0) {
      w.push_back(gen_x(perm[xy_point(g)]));
    } else {
      w.push_back(gen_y(perm[xy_point(g)]));
    }
  }
  return sort_word(std::move(w));
}

MultiVector act_permutation(const MultiVector& v,
                            const std::vector<int>& perm) {
  MultiVector r(v.n);
  for (auto& [m, c] : v.t)
    if (auto s = act_permutation(m, perm, v.n))
      r.add(s->first, c * Rational(s->second));
  return r;
}

std::string to_string(const Monomial& m, int n) {
  if (m.g.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < m.g.size(); ++i) {
    if (i) s += "*";
    s += gen_name(m.g[i], n);
  }
  return s;
}

std::string to_string(const MultiVector& v) {
  if (v.zero()) return "0";
  std::string s;
  for (auto& [m, c] : v.t) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*" + to_string(m, v.n);
  }
  return s;
}

}  // namespace ellconf
