#include "ellconf/classes.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace ellconf {

std::string to_string(ClassName c) {
  switch (c) {
    case ClassName::Alpha: return "alpha";
    case ClassName::AlphaBar: return "alphabar";
    case ClassName::Beta: return "beta";
    case ClassName::Gamma: return "gamma";
    case ClassName::GammaBar: return "gammabar";
  }
  return "?";
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

NamedClass build_class(Model& m, ClassName name) {
  int n = m.n();
  MultiVector v(n);
  switch (name) {
    case ClassName::Gamma:
      for (int i = 1; i <= n; ++i) v = v + mv_gen(n, gen_x(i));
      break;
    case ClassName::GammaBar:
      for (int i = 1; i <= n; ++i) v = v + mv_gen(n, gen_y(i));
      break;
    case ClassName::Alpha:
    case ClassName::AlphaBar: {
      if (n <= 2) throw std::invalid_argument("alpha requires n > 2");
      auto letter = name == ClassName::Alpha ? gen_x : gen_y;
      for (int k = 1; k < n; ++k)
        for (int h = k + 1; h <= n; ++h)
          for (int i = 1; i <= n; ++i) {
            if (i == k || i == h) continue;
            v = v + mv_mono(n, {letter(i), gen_w(k, h, n)}) -
                mv_mono(n, {letter(k), gen_w(k, h, n)});
          }
      break;
    }
    case ClassName::Beta: {
      if (n <= 3) throw std::invalid_argument("beta requires n > 3");
      for (int k = 1; k < n; ++k)
        for (int h = k + 1; h <= n; ++h)
          for (int i = 1; i <= n; ++i) {
            if (i == k || i == h) continue;
            for (int j = 1; j <= n; ++j) {
              if (j == k || j == h || j == i) continue;
              MultiVector xs = rat(3) * mv_gen(n, gen_x(i)) -
                               mv_gen(n, gen_x(j)) -
                               rat(2) * mv_gen(n, gen_x(k));
              MultiVector ys = mv_gen(n, gen_y(j)) - mv_gen(n, gen_y(k));
              v = v + mul(mul(xs, ys), mv_gen(n, gen_w(k, h, n)));
            }
          }
      break;
    }
  }
  NamedClass nc{name, n, m.nf_mv(v)};
  if (!m.nf_mv(apply(m.differential(), nc.value)).zero())
    throw std::logic_error("build_class: differential of " + to_string(name) +
                           " is nonzero");
  return nc;
}

Rational monomial_coefficient(Model& m, const MultiVector& v,
                              const Monomial& target) {
  auto [p, q] = target.bidegree(m.n());
  const Model::Slice& s = m.slice(p, q);
  if (!s.index.count(target))
    throw std::invalid_argument("monomial_coefficient: not a basis monomial");
  return m.nf_mv(v).coeff(target);
}

std::pair<Monomial, int> power_monomial(int n, int q) {
  // the interleaved chain word x_1 w_{1,2} x_3 w_{3,4} ..., sorted into the
  // basis order together with the reordering sign
  if (n < 2 * q) throw std::invalid_argument("power_monomial: n < 2q");
  std::vector<GenCode> word;
  for (int i = 1; i <= q; ++i) {
    word.push_back(gen_x(2 * i - 1));
    word.push_back(gen_w(2 * i - 1, 2 * i, n));
  }
  return *sort_word(std::move(word));
}

std::pair<Monomial, int> mixed_power_monomial(int n, int q) {
  if (n < 2 * q + 1)
    throw std::invalid_argument("mixed_power_monomial: n < 2q+1");
  std::vector<GenCode> word;
  for (int i = 1; i <= q; ++i) {
    word.push_back(gen_x(2 * i - 1));
    word.push_back(gen_w(2 * i - 1, 2 * i, n));
  }
  word.push_back(gen_y(2 * q + 1));
  return *sort_word(std::move(word));
}

namespace {
Rational int_pow(long base, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= rat(base);
  return r;
}
Rational factorial(int q) {
  Rational r(1);
  for (int i = 2; i <= q; ++i) r *= rat(i);
  return r;
}
}  // namespace

Rational a_closed(int n, int q) {
  Rational sign = q % 2 == 0 ? rat(1) : rat(-1);
  return sign * factorial(q) * int_pow(n, q - 1) * rat(n - 2 * q);
}

Rational b_closed(int n, int q) {
  Rational sign = q % 2 == 0 ? rat(1) : rat(-1);
  return rat(2) * sign * factorial(q) * int_pow(n, q - 1) * rat(n - 2 * q - 1);
}

bool determinant_identity(int q) {
  // sum over S_q of sgn(sigma) x^{#fixed} as integer coefficient vectors
  std::vector<long long> lhs(q + 1, 0);
  std::vector<int> perm(q);
  for (int i = 0; i < q; ++i) perm[i] = i;
  do {
    int fix = 0;
    std::vector<char> seen(q, 0);
    int transpositions = 0;
    for (int i = 0; i < q; ++i) {
      if (perm[i] == i) ++fix;
      if (!seen[i]) {
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
          seen[j] = 1;
          ++len;
        }
        transpositions += len - 1;
      }
    }
    lhs[fix] += transpositions % 2 == 0 ? 1 : -1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  // (x-1)^{q-1} (x+q-1)
  std::vector<long long> rhs{1};
  for (int i = 0; i < q - 1; ++i) {
    std::vector<long long> next(rhs.size() + 1, 0);
    for (size_t j = 0; j < rhs.size(); ++j) {
      next[j + 1] += rhs[j];
      next[j] -= rhs[j];
    }
    rhs = std::move(next);
  }
  std::vector<long long> full(rhs.size() + 1, 0);
  for (size_t j = 0; j < rhs.size(); ++j) {
    full[j + 1] += rhs[j];
    full[j] += rhs[j] * (q - 1);
  }
  full.resize(q + 1, 0);
  return lhs == full;
}

namespace {

// true if the cocycle (given in normal form) is a coboundary inside the
// zero-sum subalgebra; vanishing in the invariant cohomology follows by
// averaging
bool is_b_coboundary(Cohomology& coh, const MultiVector& v, int p, int q) {
  SparseVector c = coh.space_coords(ModelId::B, p, q, v);
  return coh.slice(ModelId::B, p, q).coboundaries.contains(c);
}

std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace

Report verify_power_nonvanishing(Cohomology& coh) {
  Report rep;
  Model& m = coh.model();
  int n = m.n();
  NamedClass alpha = build_class(m, ClassName::Alpha);
  MultiVector pow = alpha.value;
  for (int q = 1; 2 * q <= n; ++q) {
    if (q > 1) pow = m.nf_mv(mul(pow, alpha.value));
    auto [mono, sign] = power_monomial(n, q);
    Rational got = rat(sign) * monomial_coefficient(m, pow, mono);
    Rational want = a_closed(n, q);
    rep.checks.push_back(
        {"a_" + std::to_string(q),
         "coefficient of the chain monomial in the q-th power of the degree-2 "
         "class equals (-1)^q q! n^{q-1} (n-2q)",
         got == want, "got " + rat_str(got) + ", want " + rat_str(want)});
    if (n > 2 * q) {
      bool nonzero = !pow.zero() && !is_b_coboundary(coh, pow, q, q);
      rep.checks.push_back({"alpha^" + std::to_string(q) + "_nonzero",
                            "the q-th power survives in cohomology for n>2q",
                            nonzero, nonzero ? "not a coboundary" : "vanishes"});
    }
  }
  if (n > 3) {
    NamedClass beta = build_class(m, ClassName::Beta);
    MultiVector mixed = beta.value;
    for (int q = 1; 2 * q + 1 <= n; ++q) {
      if (q > 1) mixed = m.nf_mv(mul(mixed, alpha.value));
      // here the closed form matches the coefficient of the sorted basis
      // monomial directly, without the reordering sign (machine-determined
      // convention, exercised at q = 1, 2 which cover both sign regimes)
      Rational got = monomial_coefficient(m, mixed, mixed_power_monomial(n, q).first);
      Rational want = b_closed(n, q);
      rep.checks.push_back(
          {"b_" + std::to_string(q),
           "coefficient of the marked chain monomial in alpha^{q-1} beta "
           "equals 2 (-1)^q q! n^{q-1} (n-2q-1)",
           got == want, "got " + rat_str(got) + ", want " + rat_str(want)});
      if (n > 2 * q + 1) {
        bool nonzero =
            !mixed.zero() && !is_b_coboundary(coh, mixed, q + 1, q);
        rep.checks.push_back(
            {"alpha^" + std::to_string(q - 1) + "beta_nonzero",
             "alpha^{q-1} beta survives in cohomology for n>2q+1", nonzero,
             nonzero ? "not a coboundary" : "vanishes"});
      }
    }
  }
  // the power alpha^{floor((n+1)/2)} dies in cohomology
  int top = (n + 1) / 2;
  if (top <= n - 1) {
    MultiVector v = alpha.value;
    for (int i = 1; i < top; ++i) v = m.nf_mv(mul(v, alpha.value));
    bool dies = v.zero() || is_b_coboundary(coh, v, top, top);
    rep.checks.push_back({"alpha_top_vanishes",
                          "alpha^{floor((n+1)/2)} = 0 in cohomology", dies,
                          v.zero() ? "zero on the nose" : "a coboundary"});
  }
  return rep;
}

namespace {

// monomials a^i abar^{k-i} as dense coefficient vectors of length k+1;
// the lowering operator maps a^i abar^j to i a^{i-1} abar^{j+1}
std::vector<Rational> lower_orbit_element(int top, int j, int k) {
  // f^j(a^top) * padding not needed: returns f^j(a^top) as an element of
  // degree-(top) part, coefficients indexed by abar-exponent
  std::vector<Rational> v(top + 1, Rational(0));
  // f^j(a^top) = top (top-1) ... (top-j+1) a^{top-j} abar^j
  Rational c(1);
  for (int s = 0; s < j; ++s) c *= rat(top - s);
  v[j] = c;
  (void)k;
  return v;
}

// dimension of degree-k part of the SL2-ideal generated by g^{(e)} inside
// the polynomial algebra on (a, abar): spans f^j(a^e) times all monomials of
// degree k - e
long long ideal_rank(int e, int k) {
  if (k < e) return 0;
  SubspaceBasis span(k + 1);
  for (int j = 0; j <= e; ++j) {
    std::vector<Rational> gen = lower_orbit_element(e, j, e);
    for (int s = 0; s <= k - e; ++s) {
      // multiply by a^{k-e-s} abar^{s}: shifts the abar-exponent by s
      SparseVector row;
      for (int t = 0; t <= e; ++t)
        if (gen[t] != 0) row.set(t + s, gen[t]);
      span.insert(std::move(row));
    }
  }
  return span.dim();
}

}  // namespace

PresentationReport verify_presentation(Cohomology& coh) {
  PresentationReport rep;
  int n = coh.n();
  rep.n = n;
  if (n < 4)
    throw std::invalid_argument("verify_presentation: requires n >= 4");

  for (int q = 0; q <= n - 1; ++q)
    for (int p = 0; p <= 2 * (n - q); ++p) {
      int d = coh.slice(ModelId::UB, p, q).dim;
      if (d > 0) rep.h_dims[p + q] += d;
    }

  int ma = (n + 1) / 2;
  std::vector<int> candidates;
  for (int e : {n / 2 - 1, n / 2, n / 2 + 1})
    if (e >= 0) candidates.push_back(e);
  int max_deg = 2 * n + 3;
  std::vector<int> matches;
  for (int e : candidates) {
    std::map<int, long long>& dims = rep.candidate_dims[e];
    for (int k = 0; 2 * k <= max_deg; ++k) {
      long long even = (k + 1) - ideal_rank(ma, k);
      if (even > 0) dims[2 * k] += even;
      if (2 * k + 3 <= max_deg) {
        // the b-line: ambient S^k times b, killed by both a^e b and the
        // b-multiples of a^{ma}; b^2 = 0 holds for free since b is odd
        long long killed = std::max(ideal_rank(e, k), ideal_rank(ma, k));
        long long odd = (k + 1) - killed;
        if (odd > 0) dims[2 * k + 3] += odd;
      }
    }
    bool match = true;
    for (int d = 0; d <= max_deg; ++d) {
      long long want = rep.h_dims.count(d) ? rep.h_dims.at(d) : 0;
      long long got = dims.count(d) ? dims.at(d) : 0;
      if (want != got) match = false;
    }
    if (match) matches.push_back(e);
  }
  rep.checks.push_back(
      {"unique_exponent",
       "exactly one candidate exponent in the relation a^e b matches the "
       "computed cohomology degreewise",
       matches.size() == 1, "matched candidates: " + std::to_string(matches.size())});
  if (matches.size() == 1) {
    rep.matched_exponent = matches[0];
    rep.floor_half_exponent_matches = matches[0] == n / 2;
  }

  // multiplicativity: the top-weight lines of the matched quotient are hit
  // by actual products of representatives
  Model& m = coh.model();
  NamedClass alpha = build_class(m, ClassName::Alpha);
  NamedClass beta = n > 3 ? build_class(m, ClassName::Beta)
                          : NamedClass{ClassName::Beta, n, MultiVector(n)};
  MultiVector pow = m.nf_mv(mv_scalar(n, rat(1)));
  for (int k = 1; k < ma; ++k) {
    pow = m.nf_mv(mul(pow, alpha.value));
    const CohSlice& cs = coh.slice(ModelId::UB, k, k);
    bool top_line = !cs.weight_dims.empty() &&
                    cs.weight_dims.rbegin()->first == k &&
                    cs.weight_dims.rbegin()->second == 1;
    bool survive = !pow.zero() && !is_b_coboundary(coh, pow, k, k);
    rep.checks.push_back(
        {"even_top_weight_" + std::to_string(2 * k),
         "the even-degree cohomology has a one-dimensional top weight line "
         "spanned by the corresponding power",
         top_line && survive, ""});
  }
  if (rep.matched_exponent >= 0) {
    MultiVector mixed = beta.value;
    for (int k = 0; k < rep.matched_exponent; ++k) {
      if (k > 0) mixed = m.nf_mv(mul(mixed, alpha.value));
      const CohSlice& cs = coh.slice(ModelId::UB, k + 2, k + 1);
      bool top_line = !cs.weight_dims.empty() &&
                      cs.weight_dims.rbegin()->first == k &&
                      cs.weight_dims.rbegin()->second == 1;
      bool survive = !mixed.zero() && !is_b_coboundary(coh, mixed, k + 2, k + 1);
      rep.checks.push_back(
          {"odd_top_weight_" + std::to_string(2 * k + 3),
           "the odd-degree cohomology has a one-dimensional top weight line "
           "spanned by alpha^k beta",
           top_line && survive, ""});
    }
  }
  rep.pass = rep.matched_exponent >= 0 &&
             std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const Check& c) { return c.pass; });
  return rep;
}

namespace {

struct GeneratedSpans {
  // echelon span per bidegree, in invariant coordinates, optionally seeded
  // with the coboundary space
  std::map<std::pair<int, int>, SubspaceBasis> spans;
};

// closes the list of seed classes under multiplication, keeping only
// products that enlarge the span at their bidegree
GeneratedSpans generate_subalgebra(Cohomology& coh, ModelId which,
                                   const std::vector<MultiVector>& gens,
                                   bool seed_coboundaries) {
  Model& m = coh.model();
  int n = m.n();
  GeneratedSpans out;
  auto span_at = [&](int p, int q) -> SubspaceBasis& {
    auto key = std::make_pair(p, q);
    auto it = out.spans.find(key);
    if (it == out.spans.end()) {
      SubspaceBasis s(coh.space_dim(which, p, q));
      if (seed_coboundaries)
        for (const SparseVector& row :
             coh.slice(which, p, q).coboundaries.rows())
          s.insert(row);
      it = out.spans.emplace(key, std::move(s)).first;
    }
    return it->second;
  };
  std::deque<MultiVector> queue;
  MultiVector one = mv_scalar(n, rat(1));
  if (span_at(0, 0).insert(coh.space_coords(which, 0, 0, one)))
    queue.push_back(one);
  while (!queue.empty()) {
    MultiVector base = queue.front();
    queue.pop_front();
    for (const MultiVector& g : gens) {
      MultiVector prod = m.nf_mv(mul(base, g));
      if (prod.zero()) continue;
      auto [p, q] = *prod.bidegree();
      if (q > n - 1 || p > 2 * (n - q)) continue;
      if (span_at(p, q).insert(coh.space_coords(which, p, q, prod)))
        queue.push_back(prod);
    }
  }
  return out;
}

}  // namespace

Report verify_generation(Cohomology& coh) {
  Report rep;
  Model& m = coh.model();
  int n = m.n();
  std::vector<MultiVector> gens;
  gens.push_back(build_class(m, ClassName::Gamma).value);
  gens.push_back(build_class(m, ClassName::GammaBar).value);
  if (n > 2) {
    gens.push_back(build_class(m, ClassName::Alpha).value);
    gens.push_back(build_class(m, ClassName::AlphaBar).value);
  }
  if (n > 3) gens.push_back(build_class(m, ClassName::Beta).value);

  GeneratedSpans spans = generate_subalgebra(coh, ModelId::UA, gens, true);
  std::map<int, long long> generated;
  for (auto& [pq, span] : spans.spans) {
    long long extra =
        span.dim() - coh.slice(ModelId::UA, pq.first, pq.second).coboundaries.dim();
    if (extra > 0) generated[pq.first + pq.second] += extra;
  }
  Poly1 betti = coh.betti_polynomial(Space::UConf);
  for (auto& [deg, want] : betti) {
    long long got = generated.count(deg) ? generated.at(deg) : 0;
    rep.checks.push_back({"degree_" + std::to_string(deg),
                          "products of the five distinguished classes span "
                          "the invariant cohomology in this degree",
                          got == want,
                          "generated " + std::to_string(got) + " of " +
                              std::to_string(want)});
  }
  for (auto& [deg, got] : generated)
    if (!betti.count(deg))
      rep.checks.push_back({"degree_" + std::to_string(deg),
                            "no products survive where the cohomology vanishes",
                            false, "spurious classes"});
  return rep;
}

Report verify_formality(Cohomology& coh) {
  Report rep;
  Model& m = coh.model();
  int n = m.n();
  if (n <= 3)
    throw std::invalid_argument("verify_formality: requires n >= 4");
  std::vector<MultiVector> gens{build_class(m, ClassName::Alpha).value,
                                build_class(m, ClassName::AlphaBar).value,
                                build_class(m, ClassName::Beta).value};
  GeneratedSpans k = generate_subalgebra(coh, ModelId::UB, gens, false);

  bool diag = true, cocycle = true, disjoint = true, dims = true;
  std::string dim_details;
  for (int q = 0; q <= n - 1; ++q)
    for (int p = 0; p <= 2 * (n - q); ++p) {
      auto it = k.spans.find({p, q});
      int kdim = it == k.spans.end() ? 0 : it->second.dim();
      if (kdim > 0 && !(p == q || p == q + 1)) diag = false;
      const CohSlice& cs = coh.slice(ModelId::UB, p, q);
      if (kdim != cs.dim) {
        dims = false;
        dim_details += "(" + std::to_string(p) + "," + std::to_string(q) +
                       "): " + std::to_string(kdim) + " vs " +
                       std::to_string(cs.dim) + "; ";
      }
      if (it != k.spans.end()) {
        for (const SparseVector& row : it->second.rows())
          if (!cs.cocycles.contains(row)) cocycle = false;
        if (intersect(it->second, cs.coboundaries).dim() != 0)
          disjoint = false;
      }
    }
  rep.checks.push_back({"cocycles",
                        "the subalgebra generated by the degree-2 and "
                        "degree-3 classes consists of cocycles",
                        cocycle, ""});
  rep.checks.push_back(
      {"avoids_coboundaries",
       "the generated subalgebra meets the coboundaries only in zero",
       disjoint, ""});
  rep.checks.push_back({"full_dimension",
                        "the generated subalgebra has the dimension of the "
                        "cohomology in every bidegree",
                        dims, dim_details});
  rep.checks.push_back({"diagonal_support",
                        "the generated subalgebra is concentrated in "
                        "bidegrees (i,i) and (i+1,i)",
                        diag, ""});
  return rep;
}

}  // namespace ellconf
