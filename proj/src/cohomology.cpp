#include "ellconf/cohomology.hpp"

#include <algorithm>

namespace ellconf {

std::string to_string(Space s) {
  switch (s) {
    case Space::Conf: return "conf";
    case Space::UConf: return "uconf";
    case Space::M: return "m";
    case Space::UM: return "um";
  }
  return "?";
}

ModelId model_of(Space s) {
  switch (s) {
    case Space::Conf: return ModelId::A;
    case Space::UConf: return ModelId::UA;
    case Space::M: return ModelId::B;
    case Space::UM: return ModelId::UB;
  }
  return ModelId::A;
}

Poly1 poly1_mul(const Poly1& a, const Poly1& b) {
  Poly1 r;
  for (auto& [i, c] : a)
    for (auto& [j, d] : b) {
      r[i + j] += c * d;
      if (r[i + j] == 0) r.erase(i + j);
    }
  return r;
}

Poly2 poly2_mul(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (auto& [e, c] : a)
    for (auto& [f, d] : b) {
      auto key = std::make_pair(e.first + f.first, e.second + f.second);
      r[key] += c * d;
      if (r[key] == 0) r.erase(key);
    }
  return r;
}

GrothPoly groth_mul(const GrothPoly& a, const GrothPoly& b) {
  GrothPoly r;
  for (auto& [e, ra] : a)
    for (auto& [f, rb] : b) {
      auto key = std::make_pair(e.first + f.first, e.second + f.second);
      for (auto& [ka, ma] : ra)
        for (auto& [kb, mb] : rb)
          for (int k = std::abs(ka - kb); k <= ka + kb; k += 2)
            r[key][k] += ma * mb;
    }
  return r;
}

Poly2 groth_to_poly2(const GrothPoly& g) {
  Poly2 r;
  for (auto& [e, reps] : g) {
    long long d = 0;
    for (auto& [k, m] : reps) d += static_cast<long long>(m) * (k + 1);
    if (d != 0) r[e] = d;
  }
  return r;
}

Poly2 truncated_series(int n) {
  Poly2 t;
  for (int k = 0; 2 * k <= n; ++k) t[{2 * k, 3 * k}] = k + 1;
  for (int k = 0; 2 * k + 3 <= n; ++k) t[{2 * k + 3, 3 * k + 4}] = k + 1;
  return t;
}

namespace {
Poly1 poly2_at_v1(const Poly2& p) {
  Poly1 r;
  for (auto& [e, c] : p) {
    r[e.first] += c;
    if (r[e.first] == 0) r.erase(e.first);
  }
  return r;
}

GrothPoly groth_right_factor(int n) {
  // the zero-sum factor: V_i at u^{2i}v^{3i} for i <= floor((n-1)/2) and
  // V_{i-1} at u^{2i+1}v^{3i+1} for 1 <= i <= floor(n/2) - 1
  GrothPoly g;
  for (int i = 0; 2 * i <= n - 1; ++i) g[{2 * i, 3 * i}][i] = 1;
  for (int i = 1; i <= n / 2 - 1; ++i) g[{2 * i + 1, 3 * i + 1}][i - 1] = 1;
  return g;
}

GrothPoly groth_curve_factor() {
  // the elliptic-curve factor V_0 + V_1 uv + V_0 u^2 v^2
  GrothPoly g;
  g[{0, 0}][0] = 1;
  g[{1, 1}][1] = 1;
  g[{2, 2}][0] = 1;
  return g;
}
}  // namespace

GrothPoly closed_groth(Space s, int n) {
  if (s == Space::UM) return groth_right_factor(n);
  if (s == Space::UConf)
    return groth_mul(groth_curve_factor(), groth_right_factor(n));
  throw std::invalid_argument("closed_groth: no closed form for this space");
}

Poly2 closed_hodge(Space s, int n) {
  if (s == Space::UM) return truncated_series(n - 1);
  if (s == Space::UConf) {
    Poly2 curve{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}};  // (1+uv)^2
    return poly2_mul(curve, truncated_series(n - 1));
  }
  throw std::invalid_argument("closed_hodge: no closed form for this space");
}

Poly1 closed_betti(Space s, int n) { return poly2_at_v1(closed_hodge(s, n)); }

const WeightBlocks& Cohomology::invariants(ModelId which, int p, int q) {
  auto key = std::make_tuple(static_cast<int>(which), p, q);
  auto it = inv_.find(key);
  if (it != inv_.end()) return it->second;
  return inv_.emplace(key, invariant_slice(m_, which, p, q)).first->second;
}

int Cohomology::space_dim(ModelId id, int p, int q) {
  switch (id) {
    case ModelId::A: return m_.dim(ModelId::A, p, q);
    case ModelId::B: return m_.dim(ModelId::B, p, q);
    case ModelId::UA:
    case ModelId::UB: return invariants(id, p, q).dim;
    default: throw std::invalid_argument("space_dim: unsupported model");
  }
}

std::vector<int> Cohomology::space_weights(ModelId id, int p, int q) {
  switch (id) {
    case ModelId::A: return m_.slice(p, q).weight;
    case ModelId::B: return m_.slice_b(p, q).coord_weight;
    case ModelId::UA:
    case ModelId::UB: return invariants(id, p, q).coord_weight;
    default: throw std::invalid_argument("space_weights: unsupported model");
  }
}

SparseMatrix Cohomology::space_diff(ModelId id, int p, int q) {
  if (id == ModelId::A) return m_.diff(p, q);
  if (id == ModelId::B) return m_.diff_b(p, q);
  const WeightBlocks& src = invariants(id, p, q);
  if (q < 1) return SparseMatrix(0, src.dim);
  const WeightBlocks& dst = invariants(id, p + 2, q - 1);
  ModelId base_id = id == ModelId::UA ? ModelId::A : ModelId::B;
  std::vector<int> tgt_weights = space_weights(base_id, p + 2, q - 1);
  const SparseMatrix& base =
      id == ModelId::UA ? m_.diff(p, q) : m_.diff_b(p, q);
  SparseMatrix out(dst.dim, src.dim);
  std::vector<std::vector<std::pair<int, Rational>>> rows(dst.dim);
  for (int j = 0; j < src.dim; ++j) {
    SparseVector col = dst.to_coords(base.apply(src.basis_vector(j)), tgt_weights);
    for (auto& [r, c] : col.e) rows[r].emplace_back(j, c);
  }
  for (int r = 0; r < dst.dim; ++r) out.row[r].e = std::move(rows[r]);
  return out;
}

SparseVector Cohomology::space_coords(ModelId id, int p, int q,
                                      const MultiVector& v) {
  SparseVector a = m_.nf(v, p, q);
  switch (id) {
    case ModelId::A:
      return a;
    case ModelId::B:
      return m_.slice_b(p, q).to_coords(a, m_.slice(p, q).weight);
    case ModelId::UA:
      return invariants(id, p, q).to_coords(a, m_.slice(p, q).weight);
    case ModelId::UB: {
      SparseVector b = m_.slice_b(p, q).to_coords(a, m_.slice(p, q).weight);
      return invariants(id, p, q).to_coords(b, m_.slice_b(p, q).coord_weight);
    }
    default:
      throw std::invalid_argument("space_coords: unsupported model");
  }
}

const CohSlice& Cohomology::slice(ModelId id, int p, int q) {
  auto key = std::make_tuple(static_cast<int>(id), p, q);
  auto it = slices_.find(key);
  if (it != slices_.end()) return it->second;
  return slices_.emplace(key, build_slice(id, p, q)).first->second;
}

CohSlice Cohomology::build_slice(ModelId id, int p, int q) {
  CohSlice cs;
  cs.model = id;
  cs.p = p;
  cs.q = q;
  int dim_src = space_dim(id, p, q);
  cs.cocycles = SubspaceBasis(dim_src);
  cs.coboundaries = SubspaceBasis(dim_src);
  if (dim_src == 0) return cs;
  std::vector<int> weights = space_weights(id, p, q);
  SparseMatrix dout = space_diff(id, p, q);
  std::vector<SparseVector> din_cols;
  if (p >= 2 && q + 1 <= n() - 1 && space_dim(id, p - 2, q + 1) > 0)
    din_cols = space_diff(id, p - 2, q + 1).columns();

  std::map<int, std::vector<int>> by_weight;
  for (int i = 0; i < dim_src; ++i) by_weight[weights[i]].push_back(i);
  std::map<int, std::vector<SparseVector>> cob_by_weight;
  for (auto& col : din_cols) {
    if (col.zero()) continue;
    cob_by_weight[weights[col.leading()]].push_back(col);
    cs.coboundaries.insert(col);
  }

  for (auto& [wt, idx] : by_weight) {
    int local = static_cast<int>(idx.size());
    std::map<int, int> local_of;
    for (int i = 0; i < local; ++i) local_of[idx[i]] = i;
    // kernel of the outgoing differential restricted to this weight block
    SparseMatrix sub(dout.rows, local);
    for (int r = 0; r < dout.rows; ++r) {
      SparseVector row;
      for (auto& [cidx, c] : dout.row[r].e) {
        auto lit = local_of.find(cidx);
        if (lit != local_of.end()) row.e.emplace_back(lit->second, c);
      }
      sub.row[r] = std::move(row);
    }
    SubspaceBasis ker = reduce(sub).kernel;
    SubspaceBasis grown(dim_src);
    auto cit = cob_by_weight.find(wt);
    if (cit != cob_by_weight.end())
      for (auto& col : cit->second) grown.insert(col);
    int block_dim = 0;
    for (const SparseVector& kv : ker.rows()) {
      SparseVector global;
      for (auto& [li, c] : kv.e) global.e.emplace_back(idx[li], c);
      cs.cocycles.insert(global);
      if (grown.insert(global)) {
        cs.reps.push_back(std::move(global));
        ++block_dim;
      }
    }
    cs.dim += block_dim;
    if (block_dim > 0) cs.weight_dims[wt] = block_dim;
  }
  return cs;
}

namespace {
// iterate over every potentially nonzero bidegree of the model
template <typename F>
void for_slices(int n, F&& f) {
  for (int q = 0; q <= n - 1; ++q)
    for (int p = 0; p <= 2 * (n - q); ++p) f(p, q);
}
}  // namespace

Poly1 Cohomology::betti_polynomial(Space s) {
  Poly1 r;
  ModelId id = model_of(s);
  for_slices(n(), [&](int p, int q) {
    int d = slice(id, p, q).dim;
    if (d > 0) r[p + q] += d;
  });
  return r;
}

Poly2 Cohomology::hodge_polynomial(Space s) {
  Poly2 r;
  ModelId id = model_of(s);
  for_slices(n(), [&](int p, int q) {
    int d = slice(id, p, q).dim;
    if (d > 0) r[{p + q, p + 2 * q}] += d;
  });
  return r;
}

GrothPoly Cohomology::grothendieck_polynomial(Space s) {
  GrothPoly r;
  ModelId id = model_of(s);
  for_slices(n(), [&](int p, int q) {
    const CohSlice& cs = slice(id, p, q);
    if (cs.dim == 0) return;
    for (auto& [k, m] : irrep_multiplicities(cs.weight_dims))
      r[{p + q, p + 2 * q}][k] += m;
  });
  return r;
}

}  // namespace ellconf
