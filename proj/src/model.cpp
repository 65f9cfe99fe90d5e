#include "ellconf/model.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace ellconf {

std::string to_string(ModelId m) {
  switch (m) {
    case ModelId::A: return "A";
    case ModelId::B: return "B";
    case ModelId::D: return "D";
    case ModelId::UA: return "UA";
    case ModelId::UB: return "UB";
  }
  return "?";
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  k = std::min(k, n - k);
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long stirling_first(int n, int k) {
  // c(n, k): unsigned, c(0,0)=1, c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<long long>> c(n + 1, std::vector<long long>(n + 1, 0));
  c[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= i; ++j)
      c[i][j] = (j > 0 ? c[i - 1][j - 1] : 0) + (i - 1) * c[i - 1][j];
  return c[n][k];
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n + 1) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  // returns false if already joined
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    p[b] = a;  // keep the minimal vertex as representative
    return true;
  }
};

bool is_acyclic(int n, const std::vector<uint8_t>& edges) {
  Dsu d(n);
  for (uint8_t e : edges) {
    auto [i, j] = edge_of_index(e, n);
    if (!d.join(i, j)) return false;
  }
  return true;
}

// path between a and b in the forest, as edge indices; empty if disconnected
std::vector<uint8_t> forest_path(int n, const std::vector<uint8_t>& edges,
                                 int a, int b) {
  std::vector<std::vector<std::pair<int, uint8_t>>> adj(n + 1);
  for (uint8_t e : edges) {
    auto [i, j] = edge_of_index(e, n);
    adj[i].push_back({j, e});
    adj[j].push_back({i, e});
  }
  std::vector<int> par(n + 1, -1);
  std::vector<uint8_t> par_edge(n + 1, 0);
  std::queue<int> bfs;
  bfs.push(a);
  par[a] = a;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    if (v == b) break;
    for (auto [w, e] : adj[v])
      if (par[w] < 0) {
        par[w] = v;
        par_edge[w] = e;
        bfs.push(w);
      }
  }
  std::vector<uint8_t> path;
  if (par[b] < 0) return path;
  for (int v = b; v != a; v = par[v]) path.push_back(par_edge[v]);
  return path;
}

// merge two disjoint sorted edge sets, with the Koszul sign of the shuffle
std::optional<std::pair<std::vector<uint8_t>, int>> merge_edge_sets(
    const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
  std::vector<uint8_t> r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  long crossings = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      r.push_back(a[i++]);
    } else if (b[j] < a[i]) {
      crossings += static_cast<long>(a.size() - i);
      r.push_back(b[j++]);
    } else {
      return std::nullopt;
    }
  }
  while (i < a.size()) r.push_back(a[i++]);
  while (j < b.size()) r.push_back(b[j++]);
  return std::make_pair(std::move(r), crossings % 2 == 0 ? 1 : -1);
}

}  // namespace

bool is_nbc_forest(int n, const std::vector<uint8_t>& edges) {
  if (!is_acyclic(n, edges)) return false;
  int total = n * (n - 1) / 2;
  std::vector<char> in_set(total, 0);
  for (uint8_t e : edges) in_set[e] = 1;
  for (int e = 0; e < total; ++e) {
    if (in_set[e]) continue;
    auto [i, j] = edge_of_index(e, n);
    auto path = forest_path(n, edges, i, j);
    if (path.empty()) continue;
    uint8_t min_path = *std::min_element(path.begin(), path.end());
    if (e < min_path) return false;  // path is a broken circuit
  }
  return true;
}

std::vector<NbcForest> enumerate_nbc_forests(int n, int q) {
  std::vector<NbcForest> out;
  if (q < 0 || q > n - 1) return out;
  int total = n * (n - 1) / 2;
  std::vector<uint8_t> cur;
  // choose increasing edge indices, pruning non-forests early
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == q) {
      if (is_nbc_forest(n, cur)) out.push_back(NbcForest{cur});
      return;
    }
    int need = q - static_cast<int>(cur.size());
    for (int e = next; e + need <= total; ++e) {
      cur.push_back(static_cast<uint8_t>(e));
      if (is_acyclic(n, cur)) self(self, e + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Model::Model(int n, const Cache* cache) : n_(n), cache_(cache) {
  if (n < 1) throw std::invalid_argument("Model: n must be >= 1");
  d_.n = n;
  d_.odd = true;
  for (int i = 1; i <= n; ++i) {
    d_.image[gen_x(i)] = MultiVector(n);
    d_.image[gen_y(i)] = MultiVector(n);
  }
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      MultiVector u = mv_gen(n, gen_x(i)) - mv_gen(n, gen_x(j));
      MultiVector v = mv_gen(n, gen_y(i)) - mv_gen(n, gen_y(j));
      d_.image[gen_w(i, j, n)] = mul(u, v);
    }
}

const Model::StraightTerms& Model::straighten(const EdgeSet& s) {
  auto it = straight_.find(s);
  if (it != straight_.end()) return it->second;

  StraightTerms result;
  if (!is_acyclic(n_, s)) {
    // a dependent edge set is zero in the quotient
    return straight_.emplace(s, std::move(result)).first->second;
  }
  int total = n_ * (n_ - 1) / 2;
  std::vector<char> in_set(total, 0);
  for (uint8_t e : s) in_set[e] = 1;
  int found = -1;
  std::vector<uint8_t> path;
  for (int e = 0; e < total && found < 0; ++e) {
    if (in_set[e]) continue;
    auto [i, j] = edge_of_index(e, n_);
    auto p = forest_path(n_, s, i, j);
    if (p.empty()) continue;
    if (e < *std::min_element(p.begin(), p.end())) {
      found = e;
      path = std::move(p);
    }
  }
  if (found < 0) {
    result.push_back({s, 1});
    return straight_.emplace(s, std::move(result)).first->second;
  }

  // circuit C = {found} + path, with `found` its lex-least edge; the
  // boundary relation rewrites the broken circuit into sets containing it
  std::sort(path.begin(), path.end());
  std::vector<uint8_t> circuit = path;
  circuit.insert(circuit.begin(), static_cast<uint8_t>(found));
  std::vector<uint8_t> rest;
  for (uint8_t e : s)
    if (std::find(path.begin(), path.end(), e) == path.end())
      rest.push_back(e);
  auto split = merge_edge_sets(path, rest);  // e_S = sign0 e_path ^ e_rest
  int sign0 = split->second;

  std::map<EdgeSet, long long> acc;
  for (size_t i = 1; i < circuit.size(); ++i) {
    // e_path = sum_{i>=1} (-1)^{i+1} e_{C - C[i]}   (0-based i)
    std::vector<uint8_t> term = circuit;
    term.erase(term.begin() + i);
    auto merged = merge_edge_sets(term, rest);
    if (!merged) continue;  // cannot happen: circuit-found edge is fresh
    long long coeff = sign0 * merged->second * (i % 2 == 1 ? 1 : -1);
    for (auto& [set2, c2] : straighten(merged->first)) {
      acc[set2] += coeff * c2;
    }
  }
  for (auto& [set2, c2] : acc)
    if (c2 != 0) result.push_back({set2, c2});
  return straight_.emplace(s, std::move(result)).first->second;
}

namespace {
std::string slice_key(const char* what, int n, int p, int q) {
  std::ostringstream os;
  os << what << "-n" << n << "-p" << p << "-q" << q;
  return os.str();
}

std::optional<GenCode> parse_gen(const std::string& s, int n) {
  if (s.size() < 2) return std::nullopt;
  try {
    if (s[0] == 'x' || s[0] == 'y') {
      int i = std::stoi(s.substr(1));
      if (i < 1 || i > n) return std::nullopt;
      return s[0] == 'x' ? gen_x(i) : gen_y(i);
    }
    if (s[0] == 'w') {
      int i, j;
      if (sscanf(s.c_str(), "w(%d,%d)", &i, &j) != 2) return std::nullopt;
      if (i < 1 || j < 1 || i >= j || j > n) return std::nullopt;
      return gen_w(i, j, n);
    }
  } catch (...) {
  }
  return std::nullopt;
}
}  // namespace

const Model::Slice& Model::slice(int p, int q) {
  auto key = std::make_pair(p, q);
  auto it = slices_.find(key);
  if (it != slices_.end()) return it->second;
  return slices_.emplace(key, build_slice(p, q)).first->second;
}

Model::Slice Model::build_slice(int p, int q) {
  Slice s;
  s.p = p;
  s.q = q;
  if (p < 0 || q < 0 || q > n_ - 1 || p > 2 * (n_ - q)) return s;

  if (cache_) {
    if (auto payload = cache_->get(slice_key("basisA", n_, p, q))) {
      std::istringstream is(*payload);
      std::string line;
      bool ok = true;
      while (ok && std::getline(is, line)) {
        std::istringstream ls(line);
        Monomial m;
        std::string tok;
        while (ls >> tok) {
          auto g = parse_gen(tok, n_);
          if (!g || (!m.g.empty() && m.g.back() >= *g)) {
            ok = false;
            break;
          }
          m.g.push_back(*g);
        }
        if (ok) s.elems.push_back(std::move(m));
      }
      if (ok && !s.elems.empty()) {
        for (int i = 0; i < s.dim(); ++i) {
          s.index[s.elems[i]] = i;
          s.weight.push_back(s.elems[i].weight(n_));
        }
        return s;
      }
      s = Slice{};  // corrupted entry: recompute
      s.p = p;
      s.q = q;
    }
  }

  auto fit = forests_.find(q);
  if (fit == forests_.end())
    fit = forests_.emplace(q, enumerate_nbc_forests(n_, q)).first;
  for (const NbcForest& f : fit->second) {
    // component representatives: minimal vertices
    Dsu d(n_);
    for (uint8_t e : f.edges) {
      auto [i, j] = edge_of_index(e, n_);
      d.join(i, j);
    }
    std::vector<GenCode> avail;
    for (int v = 1; v <= n_; ++v)
      if (d.find(v) == v) {
        avail.push_back(gen_x(v));
        avail.push_back(gen_y(v));
      }
    if (p > static_cast<int>(avail.size())) continue;
    std::vector<GenCode> wcodes;
    for (uint8_t e : f.edges) wcodes.push_back(static_cast<GenCode>(2 * n_ + e));
    // p-subsets of avail in lex order
    std::vector<int> idx(p);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Monomial m;
      for (int k : idx) m.g.push_back(avail[k]);
      m.g.insert(m.g.end(), wcodes.begin(), wcodes.end());
      s.elems.push_back(std::move(m));
      if (p == 0) break;
      int k = p - 1;
      while (k >= 0 && idx[k] == static_cast<int>(avail.size()) - p + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int l = k + 1; l < p; ++l) idx[l] = idx[l - 1] + 1;
    }
  }
  for (int i = 0; i < s.dim(); ++i) {
    s.index[s.elems[i]] = i;
    s.weight.push_back(s.elems[i].weight(n_));
  }
  if (cache_ && s.dim() > 0) {
    std::ostringstream os;
    for (auto& m : s.elems) {
      for (size_t i = 0; i < m.g.size(); ++i)
        os << (i ? " " : "") << gen_name(m.g[i], n_);
      os << "\n";
    }
    cache_->put(slice_key("basisA", n_, p, q), os.str());
  }
  return s;
}

int Model::dim(ModelId m, int p, int q) {
  switch (m) {
    case ModelId::A:
      return slice(p, q).dim();
    case ModelId::B:
      return slice_b(p, q).dim;
    case ModelId::D:
      if (q != 0) return 0;
      return p == 0 || p == 2 ? 1 : (p == 1 ? 2 : 0);
    default:
      throw std::invalid_argument("Model::dim: unsupported model id");
  }
}

MultiVector Model::nf_mv(const MultiVector& v) {
  MultiVector out(n_);
  for (auto& [m, c] : v.t) {
    // split letters and edges; letter codes precede w codes, so the word is
    // already a letter block followed by an edge block
    std::vector<GenCode> letters;
    EdgeSet edges;
    for (GenCode g : m.g) {
      if (is_w(g, n_))
        edges.push_back(static_cast<uint8_t>(g - 2 * n_));
      else
        letters.push_back(g);
    }
    for (auto& [forest, fc] : straighten(edges)) {
      Dsu d(n_);
      for (uint8_t e : forest) {
        auto [i, j] = edge_of_index(e, n_);
        d.join(i, j);
      }
      // collapse x/y indices to component representatives
      std::vector<GenCode> word;
      word.reserve(letters.size());
      for (GenCode g : letters) {
        int rep = d.find(xy_point(g));
        word.push_back(g % 2 == 0 ? gen_x(rep) : gen_y(rep));
      }
      auto sorted = sort_word(std::move(word));
      if (!sorted) continue;
      Monomial full = sorted->first;
      for (uint8_t e : forest)
        full.g.push_back(static_cast<GenCode>(2 * n_ + e));
      out.add(full, c * rat(static_cast<long>(fc * sorted->second)));
    }
  }
  return out;
}

SparseVector Model::nf(const MultiVector& v, int p, int q) {
  const Slice& s = slice(p, q);
  MultiVector m = nf_mv(v);
  SparseVector out;
  std::map<int, Rational> acc;
  for (auto& [mono, c] : m.t) {
    if (mono.bidegree(n_) != std::make_pair(p, q))
      throw std::invalid_argument("nf: element not homogeneous of bidegree");
    auto it = s.index.find(mono);
    if (it == s.index.end())
      throw std::logic_error("nf: normal form missed the basis");
    acc[it->second] = c;
  }
  for (auto& [i, c] : acc) out.e.emplace_back(i, c);
  return out;
}

SparseVector Model::nf(const MultiVector& v) {
  auto bd = v.bidegree();
  if (!bd) {
    if (v.zero()) return SparseVector{};
    throw std::invalid_argument("nf: inhomogeneous element");
  }
  return nf(v, bd->first, bd->second);
}

MultiVector Model::expand(int p, int q, const SparseVector& coords) {
  const Slice& s = slice(p, q);
  MultiVector v(n_);
  for (auto& [i, c] : coords.e) v.add(s.elems.at(i), c);
  return v;
}

const SparseMatrix& Model::diff(int p, int q) {
  auto key = std::make_pair(p, q);
  auto it = diffs_.find(key);
  if (it != diffs_.end()) return it->second;
  return diffs_.emplace(key, build_diff(p, q)).first->second;
}

SparseMatrix Model::build_diff(int p, int q) {
  const Slice& src = slice(p, q);
  int target_dim = q >= 1 ? slice(p + 2, q - 1).dim() : 0;
  std::string key = slice_key("diffA", n_, p, q);
  if (cache_) {
    if (auto payload = cache_->get(key)) {
      if (auto m = parse_matrix(*payload))
        if (m->rows == target_dim && m->cols == src.dim()) return *m;
    }
  }
  SparseMatrix m(target_dim, src.dim());
  if (q >= 1) {
    std::vector<std::vector<std::pair<int, Rational>>> rows(target_dim);
    for (int j = 0; j < src.dim(); ++j) {
      MultiVector e(n_);
      e.add(src.elems[j], Rational(1));
      SparseVector col = nf(apply(d_, e), p + 2, q - 1);
      for (auto& [r, c] : col.e) rows[r].emplace_back(j, c);
    }
    for (int r = 0; r < target_dim; ++r) m.row[r].e = std::move(rows[r]);
  }
  if (cache_) cache_->put(key, serialize_matrix(m));
  return m;
}

SparseVector WeightBlocks::to_coords(const SparseVector& v,
                                     const std::vector<int>& ambient_weight) const {
  std::map<int, SparseVector> parts;
  for (auto& [i, c] : v.e) parts[ambient_weight.at(i)].e.emplace_back(i, c);
  SparseVector out;
  for (auto& [wt, part] : parts) {
    const SubspaceBasis* basis = nullptr;
    int offset = 0;
    for (size_t b = 0; b < blocks.size(); ++b)
      if (blocks[b].first == wt) {
        basis = &blocks[b].second;
        offset = block_offset[b];
        break;
      }
    if (!basis) throw std::runtime_error("to_coords: vector not in subspace");
    SparseVector coords;
    if (!basis->reduce(part, &coords).zero())
      throw std::runtime_error("to_coords: vector not in subspace");
    for (auto& [r, c] : coords.e) out.e.emplace_back(offset + r, c);
  }
  std::sort(out.e.begin(), out.e.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  return out;
}

SparseVector WeightBlocks::to_ambient(const SparseVector& coords) const {
  SparseVector v;
  for (auto& [k, c] : coords.e) v = sv_axpy(v, c, basis_vector(k));
  return v;
}

SparseVector WeightBlocks::basis_vector(int k) const {
  for (size_t b = 0; b < blocks.size(); ++b) {
    int next = b + 1 < blocks.size() ? block_offset[b + 1] : dim;
    if (k < next) return blocks[b].second.rows().at(k - block_offset[b]);
  }
  throw std::out_of_range("basis_vector");
}

std::map<int, int> WeightBlocks::weight_dims() const {
  std::map<int, int> d;
  for (auto& [wt, basis] : blocks)
    if (basis.dim() > 0) d[wt] = basis.dim();
  return d;
}

WeightBlocks make_weight_blocks(int ambient,
                                std::map<int, SubspaceBasis> by_weight) {
  WeightBlocks wb;
  wb.ambient = ambient;
  for (auto& [wt, basis] : by_weight) {
    if (basis.dim() == 0) continue;
    wb.block_offset.push_back(wb.dim);
    wb.dim += basis.dim();
    for (int i = 0; i < basis.dim(); ++i) wb.coord_weight.push_back(wt);
    wb.blocks.emplace_back(wt, std::move(basis));
  }
  return wb;
}

const WeightBlocks& Model::slice_b(int p, int q) {
  auto key = std::make_pair(p, q);
  auto it = slices_b_.find(key);
  if (it != slices_b_.end()) return it->second;
  return slices_b_.emplace(key, build_slice_b(p, q)).first->second;
}

WeightBlocks Model::build_slice_b(int p, int q) {
  int ambient = slice(p, q).dim();
  std::map<int, SubspaceBasis> by_weight;
  if (ambient == 0) return make_weight_blocks(ambient, {});
  if (p == 0) {
    // every w-monomial is a product of w generators, so B^{0,q} = A^{0,q}
    SubspaceBasis id(ambient);
    for (int i = 0; i < ambient; ++i) id.insert(sv_unit(i));
    by_weight.emplace(0, std::move(id));
    return make_weight_blocks(ambient, std::move(by_weight));
  }
  const WeightBlocks& prev = slice_b(p - 1, q);
  // the differences x_1-x_k span all u_{i,j}, likewise for y
  std::vector<std::pair<MultiVector, int>> multipliers;
  for (int k = 2; k <= n_; ++k) {
    multipliers.emplace_back(mv_gen(n_, gen_x(1)) - mv_gen(n_, gen_x(k)), 1);
    multipliers.emplace_back(mv_gen(n_, gen_y(1)) - mv_gen(n_, gen_y(k)), -1);
  }
  for (int k = 0; k < prev.dim; ++k) {
    MultiVector base = expand(p - 1, q, prev.basis_vector(k));
    int wt = prev.coord_weight[k];
    for (auto& [mult, mwt] : multipliers) {
      SparseVector v = nf(mul(base, mult), p, q);
      if (v.zero()) continue;
      by_weight.try_emplace(wt + mwt, ambient).first->second.insert(std::move(v));
    }
  }
  return make_weight_blocks(ambient, std::move(by_weight));
}

const SparseMatrix& Model::diff_b(int p, int q) {
  auto key = std::make_pair(p, q);
  auto it = diffs_b_.find(key);
  if (it != diffs_b_.end()) return it->second;
  return diffs_b_.emplace(key, build_diff_b(p, q)).first->second;
}

SparseMatrix Model::build_diff_b(int p, int q) {
  const WeightBlocks& src = slice_b(p, q);
  if (q < 1) return SparseMatrix(0, src.dim);
  const WeightBlocks& dst = slice_b(p + 2, q - 1);
  const std::vector<int>& dst_weights = slice(p + 2, q - 1).weight;
  SparseMatrix m(dst.dim, src.dim);
  std::vector<std::vector<std::pair<int, Rational>>> rows(dst.dim);
  const SparseMatrix& dA = diff(p, q);
  for (int j = 0; j < src.dim; ++j) {
    SparseVector col = dst.to_coords(dA.apply(src.basis_vector(j)), dst_weights);
    for (auto& [r, c] : col.e) rows[r].emplace_back(j, c);
  }
  for (int r = 0; r < dst.dim; ++r) m.row[r].e = std::move(rows[r]);
  return m;
}

std::vector<Monomial> Model::free_slice_monomials(int p, int q) const {
  std::vector<Monomial> out;
  int letters = 2 * n_, edges = n_ * (n_ - 1) / 2;
  if (p < 0 || q < 0 || p > letters || q > edges) return out;
  std::vector<std::vector<GenCode>> letter_sets, edge_sets;
  auto combos = [](int total, int k, int base,
                   std::vector<std::vector<GenCode>>& sink) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<GenCode> set;
      for (int i : idx) set.push_back(static_cast<GenCode>(base + i));
      sink.push_back(std::move(set));
      if (k == 0) break;
      int t = k - 1;
      while (t >= 0 && idx[t] == total - k + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int l = t + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
  };
  combos(letters, p, 0, letter_sets);
  combos(edges, q, 2 * n_, edge_sets);
  for (auto& ls : letter_sets)
    for (auto& es : edge_sets) {
      Monomial m;
      m.g = ls;
      m.g.insert(m.g.end(), es.begin(), es.end());
      out.push_back(std::move(m));
    }
  return out;
}

std::vector<MultiVector> Model::relation_generators() const {
  std::vector<MultiVector> rels;
  for (int i = 1; i < n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      MultiVector w = mv_gen(n_, gen_w(i, j, n_));
      rels.push_back(mul(mv_gen(n_, gen_x(i)) - mv_gen(n_, gen_x(j)), w));
      rels.push_back(mul(mv_gen(n_, gen_y(i)) - mv_gen(n_, gen_y(j)), w));
    }
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      for (int k = j + 1; k <= n_; ++k) {
        MultiVector wij = mv_gen(n_, gen_w(i, j, n_));
        MultiVector wjk = mv_gen(n_, gen_w(j, k, n_));
        MultiVector wki = mv_gen(n_, gen_w(k, i, n_));
        rels.push_back(mul(wij, wjk) - mul(wij, wki) + mul(wjk, wki));
      }
  return rels;
}

long Model::oracle_quotient_dim(ModelId m, int p, int q) const {
  if (m != ModelId::A)
    throw std::invalid_argument("oracle_quotient_dim: only model A");
  long long size = binomial(2 * n_, p) * binomial(n_ * (n_ - 1) / 2, q);
  if (size > 1000000)
    throw GuardExceeded("oracle_quotient_dim: free slice exceeds guard");
  std::vector<Monomial> free_basis = free_slice_monomials(p, q);
  std::map<Monomial, int> index;
  for (int i = 0; i < static_cast<int>(free_basis.size()); ++i)
    index[free_basis[i]] = i;

  SubspaceBasis span(static_cast<int>(free_basis.size()));
  auto add_products = [&](const MultiVector& rel, int rp, int rq) {
    for (const Monomial& mono : free_slice_monomials(p - rp, q - rq)) {
      MultiVector mv(n_);
      mv.add(mono, Rational(1));
      MultiVector prod = mul(rel, mv);
      if (prod.zero()) continue;
      SparseVector row;
      for (auto& [mm, c] : prod.t) row.set(index.at(mm), c);
      span.insert(std::move(row));
    }
  };
  for (const MultiVector& rel : relation_generators()) {
    auto bd = rel.bidegree();
    if (p >= bd->first && q >= bd->second)
      add_products(rel, bd->first, bd->second);
  }
  return static_cast<long>(free_basis.size()) - span.dim();
}

}  // namespace ellconf
