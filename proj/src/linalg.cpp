#include "ellconf/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellconf {

Rational SparseVector::get(int i) const {
  auto it = std::lower_bound(
      e.begin(), e.end(), i,
      [](const std::pair<int, Rational>& p, int k) { return p.first < k; });
  if (it != e.end() && it->first == i) return it->second;
  return Rational(0);
}

void SparseVector::set(int i, const Rational& c) {
  auto it = std::lower_bound(
      e.begin(), e.end(), i,
      [](const std::pair<int, Rational>& p, int k) { return p.first < k; });
  if (it != e.end() && it->first == i) {
    if (c == 0)
      e.erase(it);
    else
      it->second = c;
  } else if (c != 0) {
    e.insert(it, {i, c});
  }
}

SparseVector sv_from_dense(const std::vector<Rational>& d) {
  SparseVector v;
  for (int i = 0; i < static_cast<int>(d.size()); ++i)
    if (d[i] != 0) v.e.emplace_back(i, d[i]);
  return v;
}

SparseVector sv_unit(int i) {
  SparseVector v;
  v.e.emplace_back(i, Rational(1));
  return v;
}

SparseVector sv_axpy(const SparseVector& a, const Rational& c,
                     const SparseVector& b) {
  if (c == 0) return a;
  SparseVector r;
  r.e.reserve(a.e.size() + b.e.size());
  size_t i = 0, j = 0;
  while (i < a.e.size() || j < b.e.size()) {
    if (j == b.e.size() ||
        (i < a.e.size() && a.e[i].first < b.e[j].first)) {
      r.e.push_back(a.e[i++]);
    } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
      r.e.emplace_back(b.e[j].first, c * b.e[j].second);
      ++j;
    } else {
      Rational s = a.e[i].second + c * b.e[j].second;
      if (s != 0) r.e.emplace_back(a.e[i].first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

SparseVector sv_scale(const Rational& c, const SparseVector& a) {
  SparseVector r;
  if (c == 0) return r;
  r.e.reserve(a.e.size());
  for (auto& [i, x] : a.e) r.e.emplace_back(i, c * x);
  return r;
}

Rational sv_dot(const SparseVector& a, const SparseVector& b) {
  Rational s(0);
  size_t i = 0, j = 0;
  while (i < a.e.size() && j < b.e.size()) {
    if (a.e[i].first < b.e[j].first)
      ++i;
    else if (b.e[j].first < a.e[i].first)
      ++j;
    else {
      s += a.e[i].second * b.e[j].second;
      ++i;
      ++j;
    }
  }
  return s;
}

int sv_max_index(const SparseVector& a) {
  return a.e.empty() ? -1 : a.e.back().first;
}

std::vector<int> SubspaceBasis::pivots() const {
  std::vector<int> p;
  p.reserve(rows_.size());
  for (auto& r : rows_) p.push_back(r.leading());
  return p;
}

SparseVector SubspaceBasis::reduce(const SparseVector& v,
                                   SparseVector* coords) const {
  // In RREF, eliminating a pivot column only touches columns to its right,
  // so a single left-to-right sweep suffices.
  SparseVector r = v;
  if (coords) coords->e.clear();
  size_t k = 0;
  while (k < r.e.size()) {
    auto it = pivot_row_.find(r.e[k].first);
    if (it == pivot_row_.end()) {
      ++k;
      continue;
    }
    Rational c = r.e[k].second;
    if (coords) coords->set(it->second, c);
    r = sv_axpy(r, -c, rows_[it->second]);
    // position k now holds a strictly later column (or ran off the end)
  }
  return r;
}

bool SubspaceBasis::insert(SparseVector v) {
  v = reduce(v);
  if (v.zero()) return false;
  Rational lead = v.leading_coeff();
  if (lead != 1) v = sv_scale(Rational(1) / lead, v);
  int pivot = v.leading();
  // back-substitute into existing rows
  for (auto& r : rows_) {
    Rational c = r.get(pivot);
    if (c != 0) r = sv_axpy(r, -c, v);
  }
  auto pos = std::lower_bound(
      rows_.begin(), rows_.end(), pivot,
      [](const SparseVector& a, int p) { return a.leading() < p; });
  int idx = static_cast<int>(pos - rows_.begin());
  rows_.insert(pos, std::move(v));
  pivot_row_.clear();
  for (int i = 0; i < static_cast<int>(rows_.size()); ++i)
    pivot_row_[rows_[i].leading()] = i;
  (void)idx;
  return true;
}

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (auto& [c, v] : row[r].e) t.row[c].e.emplace_back(r, v);
  return t;  // per-row entries already in increasing r order
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
  SparseVector y;
  for (int r = 0; r < rows; ++r) {
    Rational s = sv_dot(row[r], x);
    if (s != 0) y.e.emplace_back(r, s);
  }
  return y;
}

std::vector<SparseVector> SparseMatrix::columns() const {
  std::vector<SparseVector> c(cols);
  for (int r = 0; r < rows; ++r)
    for (auto& [j, v] : row[r].e) c[j].e.emplace_back(r, v);
  return c;
}

bool SparseMatrix::is_zero() const {
  for (auto& r : row)
    if (!r.zero()) return false;
  return true;
}

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  SparseMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    SparseVector acc;
    for (auto& [k, v] : a.row[i].e) acc = sv_axpy(acc, v, b.row[k]);
    c.row[i] = std::move(acc);
  }
  return c;
}

SparseMatrix mat_identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.row[i] = sv_unit(i);
  return m;
}

Reduction reduce(const SparseMatrix& m) {
  Reduction out;
  out.row_space = SubspaceBasis(m.cols);
  for (auto& r : m.row) out.row_space.insert(r);
  out.rank = out.row_space.dim();

  // kernel from the RREF: one generator per free column
  out.kernel = SubspaceBasis(m.cols);
  std::vector<char> is_pivot(m.cols, 0);
  for (int p : out.row_space.pivots()) is_pivot[p] = 1;
  for (int j = 0; j < m.cols; ++j) {
    if (is_pivot[j]) continue;
    SparseVector v;
    for (auto& r : out.row_space.rows()) {
      Rational c = r.get(j);
      if (c != 0) v.e.emplace_back(r.leading(), -c);
    }
    v.set(j, Rational(1));
    out.kernel.insert(std::move(v));
  }
  return out;
}

int quotient_dim(int ambient, const std::vector<SparseVector>& gens) {
  SubspaceBasis b(ambient);
  for (auto& g : gens) {
    if (sv_max_index(g) >= ambient)
      throw std::invalid_argument("quotient_dim: generator exceeds ambient");
    b.insert(g);
  }
  return ambient - b.dim();
}

int quotient_dim_dense(int ambient,
                       const std::vector<std::vector<Rational>>& gens) {
  std::vector<SparseVector> sv;
  sv.reserve(gens.size());
  for (auto& g : gens) {
    if (static_cast<int>(g.size()) != ambient)
      throw std::invalid_argument("quotient_dim: generator length mismatch");
    sv.push_back(sv_from_dense(g));
  }
  return quotient_dim(ambient, sv);
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("intersect: ambient mismatch");
  int n = a.ambient();
  // Zassenhaus: echelonize rows [a|a] and [b|0]; rows with zero left half
  // have right halves spanning the intersection.
  SubspaceBasis big(2 * n);
  for (auto& r : a.rows()) {
    SparseVector w = r;
    for (auto& [i, c] : r.e) w.e.emplace_back(i + n, c);
    // entries already ordered: left block then right block
    big.insert(std::move(w));
  }
  for (auto& r : b.rows()) big.insert(r);
  SubspaceBasis out(n);
  for (auto& r : big.rows()) {
    if (r.leading() >= n) {
      SparseVector w;
      for (auto& [i, c] : r.e) w.e.emplace_back(i - n, c);
      out.insert(std::move(w));
    }
  }
  return out;
}

SubspaceBasis echelonize(int ambient, const std::vector<SparseVector>& vecs) {
  SubspaceBasis b(ambient);
  for (auto& v : vecs) b.insert(v);
  return b;
}

}  // namespace ellconf
