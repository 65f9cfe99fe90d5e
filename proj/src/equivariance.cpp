#include "ellconf/equivariance.hpp"

#include <algorithm>
#include <numeric>

namespace ellconf {

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int> transposition12(int n) {
  auto p = identity_perm(n);
  if (n >= 2) std::swap(p[1], p[2]);
  return p;
}

std::vector<int> cycle_n(int n) {
  auto p = identity_perm(n);
  for (int i = 1; i < n; ++i) p[i] = i + 1;
  if (n >= 1) p[n] = 1;
  return p;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> p(n + 1);
    for (int i = 0; i < n; ++i) p[i + 1] = base[i];
    out.push_back(std::move(p));
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<int> compose_perms(const std::vector<int>& a,
                               const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (size_t i = 1; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rest - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

long long conjugacy_class_size(int n, const std::vector<int>& lambda) {
  // n! / z_lambda with z_lambda = prod(parts) * prod(mult_j!)
  long long fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  long long z = 1;
  std::map<int, int> mult;
  for (int part : lambda) {
    z *= part;
    ++mult[part];
  }
  for (auto& [part, m] : mult)
    for (int i = 2; i <= m; ++i) z *= i;
  return fact / z;
}

std::vector<int> class_representative(int n, const std::vector<int>& lambda) {
  std::vector<int> p(n + 1);
  int start = 1;
  for (int part : lambda) {
    for (int i = 0; i < part; ++i)
      p[start + i] = start + (i + 1) % part;
    start += part;
  }
  return p;
}

SparseMatrix perm_matrix_a(Model& m, int p, int q,
                           const std::vector<int>& perm) {
  const Model::Slice& s = m.slice(p, q);
  SparseMatrix out(s.dim(), s.dim());
  std::vector<std::vector<std::pair<int, Rational>>> rows(s.dim());
  for (int j = 0; j < s.dim(); ++j) {
    MultiVector v(m.n());
    v.add(s.elems[j], Rational(1));
    SparseVector col = m.nf(act_permutation(v, perm), p, q);
    for (auto& [r, c] : col.e) rows[r].emplace_back(j, c);
  }
  for (int r = 0; r < s.dim(); ++r) out.row[r].e = std::move(rows[r]);
  return out;
}

SparseMatrix perm_matrix_b(Model& m, int p, int q,
                           const std::vector<int>& perm) {
  const WeightBlocks& b = m.slice_b(p, q);
  const std::vector<int>& weights = m.slice(p, q).weight;
  SparseMatrix pa = perm_matrix_a(m, p, q, perm);
  SparseMatrix out(b.dim, b.dim);
  std::vector<std::vector<std::pair<int, Rational>>> rows(b.dim);
  for (int j = 0; j < b.dim; ++j) {
    SparseVector col = b.to_coords(pa.apply(b.basis_vector(j)), weights);
    for (auto& [r, c] : col.e) rows[r].emplace_back(j, c);
  }
  for (int r = 0; r < b.dim; ++r) out.row[r].e = std::move(rows[r]);
  return out;
}

namespace {

// joint kernel of (g - 1) for each generator matrix g, per weight block
WeightBlocks invariants_from(const std::vector<SparseMatrix>& gens,
                             const std::vector<int>& coord_weight) {
  int ambient = static_cast<int>(coord_weight.size());
  std::map<int, std::vector<int>> by_weight;
  for (int i = 0; i < ambient; ++i) by_weight[coord_weight[i]].push_back(i);
  std::map<int, SubspaceBasis> blocks;
  for (auto& [wt, idx] : by_weight) {
    int local = static_cast<int>(idx.size());
    std::map<int, int> local_of;
    for (int i = 0; i < local; ++i) local_of[idx[i]] = i;
    SparseMatrix stacked(static_cast<int>(gens.size()) * local, local);
    for (size_t g = 0; g < gens.size(); ++g)
      for (int i = 0; i < local; ++i) {
        SparseVector row;
        for (auto& [cidx, c] : gens[g].row[idx[i]].e)
          row.e.emplace_back(local_of.at(cidx), c);
        std::sort(row.e.begin(), row.e.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
        row.set(i, row.get(i) - 1);
        stacked.row[g * local + i] = std::move(row);
      }
    SubspaceBasis ker = reduce(stacked).kernel;
    SubspaceBasis global(ambient);
    for (const SparseVector& kv : ker.rows()) {
      SparseVector gv;
      for (auto& [li, c] : kv.e) gv.e.emplace_back(idx[li], c);
      global.insert(std::move(gv));
    }
    blocks.emplace(wt, std::move(global));
  }
  return make_weight_blocks(ambient, std::move(blocks));
}

}  // namespace

WeightBlocks invariant_slice(Model& m, ModelId which, int p, int q) {
  std::vector<std::vector<int>> gens;
  if (m.n() >= 2) gens.push_back(transposition12(m.n()));
  if (m.n() >= 3) gens.push_back(cycle_n(m.n()));
  std::vector<SparseMatrix> mats;
  if (which == ModelId::UA) {
    for (auto& g : gens) mats.push_back(perm_matrix_a(m, p, q, g));
    if (mats.empty()) {
      int d = m.dim(ModelId::A, p, q);
      mats.push_back(mat_identity(d));
    }
    return invariants_from(mats, m.slice(p, q).weight);
  }
  if (which == ModelId::UB) {
    for (auto& g : gens) mats.push_back(perm_matrix_b(m, p, q, g));
    if (mats.empty()) mats.push_back(mat_identity(m.slice_b(p, q).dim));
    return invariants_from(mats, m.slice_b(p, q).coord_weight);
  }
  throw std::invalid_argument("invariant_slice: expected UA or UB");
}

long reynolds_dim(Model& m, ModelId which, int p, int q) {
  int n = m.n();
  Rational total(0);
  long long order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  for (const auto& lambda : partitions_of(n)) {
    std::vector<int> rep = class_representative(n, lambda);
    SparseMatrix pm = which == ModelId::UA ? perm_matrix_a(m, p, q, rep)
                      : which == ModelId::UB
                          ? perm_matrix_b(m, p, q, rep)
                          : throw std::invalid_argument(
                                "reynolds_dim: expected UA or UB");
    Rational trace(0);
    for (int i = 0; i < pm.rows; ++i) trace += pm.get(i, i);
    total += rat(conjugacy_class_size(n, lambda)) * trace;
  }
  total /= rat(order);
  if (total.get_den() != 1)
    throw std::runtime_error("reynolds_dim: non-integer average");
  return total.get_num().get_si();
}

std::map<int, int> irrep_multiplicities(const std::map<int, int>& weight_dims) {
  auto dim_at = [&](int w) {
    auto it = weight_dims.find(w);
    return it == weight_dims.end() ? 0 : it->second;
  };
  int top = 0;
  for (auto& [w, d] : weight_dims) {
    if (d < 0) throw std::runtime_error("irrep_multiplicities: negative dim");
    if (d != dim_at(-w))
      throw std::runtime_error("irrep_multiplicities: asymmetric profile");
    top = std::max(top, std::abs(w));
  }
  std::map<int, int> mult;
  for (int k = 0; k <= top; ++k) {
    int mk = dim_at(k) - dim_at(k + 2);
    if (mk < 0)
      throw std::runtime_error(
          "irrep_multiplicities: weight profile is not a sum of irreducibles");
    if (mk > 0) mult[k] = mk;
  }
  return mult;
}

Derivation sl2_e(int n) {
  Derivation d;
  d.n = n;
  d.odd = false;
  for (int i = 1; i <= n; ++i) {
    d.image[gen_x(i)] = MultiVector(n);
    d.image[gen_y(i)] = mv_gen(n, gen_x(i));
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) d.image[gen_w(i, j, n)] = MultiVector(n);
  return d;
}

Derivation sl2_f(int n) {
  Derivation d;
  d.n = n;
  d.odd = false;
  for (int i = 1; i <= n; ++i) {
    d.image[gen_x(i)] = mv_gen(n, gen_y(i));
    d.image[gen_y(i)] = MultiVector(n);
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) d.image[gen_w(i, j, n)] = MultiVector(n);
  return d;
}

SparseMatrix derivation_matrix_a(Model& m, const Derivation& d, int p, int q) {
  const Model::Slice& s = m.slice(p, q);
  SparseMatrix out(s.dim(), s.dim());
  std::vector<std::vector<std::pair<int, Rational>>> rows(s.dim());
  for (int j = 0; j < s.dim(); ++j) {
    MultiVector v(m.n());
    v.add(s.elems[j], Rational(1));
    MultiVector dv = m.nf_mv(apply(d, v));
    if (dv.zero()) continue;
    SparseVector col = m.nf(dv, p, q);
    for (auto& [r, c] : col.e) rows[r].emplace_back(j, c);
  }
  for (int r = 0; r < s.dim(); ++r) out.row[r].e = std::move(rows[r]);
  return out;
}

SparseMatrix derivation_matrix_b(Model& m, const Derivation& d, int p, int q) {
  const WeightBlocks& b = m.slice_b(p, q);
  const std::vector<int>& weights = m.slice(p, q).weight;
  SparseMatrix da = derivation_matrix_a(m, d, p, q);
  SparseMatrix out(b.dim, b.dim);
  std::vector<std::vector<std::pair<int, Rational>>> rows(b.dim);
  for (int j = 0; j < b.dim; ++j) {
    SparseVector col = b.to_coords(da.apply(b.basis_vector(j)), weights);
    for (auto& [r, c] : col.e) rows[r].emplace_back(j, c);
  }
  for (int r = 0; r < b.dim; ++r) out.row[r].e = std::move(rows[r]);
  return out;
}

MultiVector unipotent_subst(const MultiVector& v) {
  std::map<GenCode, MultiVector> images;
  for (int i = 1; i <= v.n; ++i)
    images[gen_x(i)] = mv_gen(v.n, gen_x(i)) + mv_gen(v.n, gen_y(i));
  return substitute(v, images);
}

MultiVector weight_component(const MultiVector& v, int w) {
  MultiVector out(v.n);
  for (auto& [m, c] : v.t)
    if (m.weight(v.n) == w) out.add(m, c);
  return out;
}

}  // namespace ellconf
