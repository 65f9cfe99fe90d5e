#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellconf/equivariance.hpp"
#include "ellconf/model.hpp"

namespace ellconf {

// the four spaces whose cohomology the tool reports: ordered and unordered
// configurations, and their zero-sum variants
enum class Space { Conf, UConf, M, UM };
std::string to_string(Space s);
ModelId model_of(Space s);

// univariate polynomial in t: degree -> coefficient
using Poly1 = std::map<int, long long>;
// bivariate polynomial in (u, v) = (degree, weight): exponents -> coefficient
using Poly2 = std::map<std::pair<int, int>, long long>;
// bivariate polynomial with coefficients in the representation ring:
// exponents -> multiset of irreducibles {k -> multiplicity of V_k}
using GrothPoly = std::map<std::pair<int, int>, std::map<int, int>>;

Poly1 poly1_mul(const Poly1& a, const Poly1& b);
Poly2 poly2_mul(const Poly2& a, const Poly2& b);
// product in the representation ring: V_a V_b = V_{a+b} + V_{a+b-2} + ... +
// V_{|a-b|} (Clebsch-Gordan)
GrothPoly groth_mul(const GrothPoly& a, const GrothPoly& b);
// forget the representations: sum of dims (k+1) per exponent pair
Poly2 groth_to_poly2(const GrothPoly& g);

// T_n(u,v): the expansion of (1 + u^3 v^4) / (1 - u^2 v^3)^2 truncated at
// u-degree n; the coefficient of u^{2k}v^{3k} is k+1, of u^{2k+3}v^{3k+4}
// is k+1
Poly2 truncated_series(int n);

// closed generating-series forms, defined for UConf and UM; throws otherwise
Poly1 closed_betti(Space s, int n);
Poly2 closed_hodge(Space s, int n);
GrothPoly closed_groth(Space s, int n);

// cohomology of one bidegree of one model
struct CohSlice {
  ModelId model = ModelId::A;
  int p = 0, q = 0;
  int dim = 0;
  // cocycle coordinate vectors spanning the cohomology modulo coboundaries,
  // in the model's own coordinates, deterministic choice
  std::vector<SparseVector> reps;
  SubspaceBasis cocycles;      // kernel of the outgoing differential
  SubspaceBasis coboundaries;  // image of the incoming differential
  std::map<int, int> weight_dims;  // torus-weight profile of the cohomology
};

// Cohomology of the four models attached to one point count, with cached
// invariant slices and polynomial assembly.  Coordinates: model A uses the
// nbc basis of A^{p,q}; model B uses B coordinates; UA/UB use coordinates in
// the invariant basis.
class Cohomology {
 public:
  explicit Cohomology(Model& m) : m_(m) {}

  Model& model() { return m_; }
  int n() const { return m_.n(); }

  // invariant slices (UA over A coordinates, UB over B coordinates), cached
  const WeightBlocks& invariants(ModelId which, int p, int q);

  int space_dim(ModelId id, int p, int q);
  std::vector<int> space_weights(ModelId id, int p, int q);
  // differential (p,q) -> (p+2,q-1) in space coordinates
  SparseMatrix space_diff(ModelId id, int p, int q);
  // coordinates of a normal-formed homogeneous element in the space; throws
  // if the element lies outside the space
  SparseVector space_coords(ModelId id, int p, int q, const MultiVector& v);

  const CohSlice& slice(ModelId id, int p, int q);

  Poly1 betti_polynomial(Space s);
  Poly2 hodge_polynomial(Space s);
  GrothPoly grothendieck_polynomial(Space s);

 private:
  CohSlice build_slice(ModelId id, int p, int q);

  Model& m_;
  std::map<std::tuple<int, int, int>, WeightBlocks> inv_;
  std::map<std::tuple<int, int, int>, CohSlice> slices_;
};

}  // namespace ellconf
