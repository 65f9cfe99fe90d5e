#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellconf/cache.hpp"
#include "ellconf/exterior.hpp"
#include "ellconf/linalg.hpp"

namespace ellconf {

enum class ModelId { A, B, D, UA, UB };
std::string to_string(ModelId);

// thrown when a brute-force computation would exceed its resource guard
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// q-edge forest on vertices 1..n containing no broken circuit of the braid
// matroid with respect to the lexicographic edge order.
struct NbcForest {
  std::vector<uint8_t> edges;  // edge indices, strictly increasing
  auto operator<=>(const NbcForest&) const = default;
};

std::vector<NbcForest> enumerate_nbc_forests(int n, int q);
bool is_nbc_forest(int n, const std::vector<uint8_t>& edges);

long long binomial(int n, int k);
// unsigned Stirling number of the first kind c(n, k)
long long stirling_first(int n, int k);

// A family of weight-homogeneous echelon bases describing a torus-stable
// subspace of a coordinate space; coordinates of the subspace are blocked by
// weight in increasing order.
struct WeightBlocks {
  int ambient = 0;
  int dim = 0;
  std::vector<std::pair<int, SubspaceBasis>> blocks;  // weight ascending
  std::vector<int> coord_weight;                      // per subspace coord
  std::vector<int> block_offset;

  // coordinates of an ambient vector in this basis; ambient_weight gives the
  // weight of each ambient coordinate; throws if the vector is outside the
  // span or mixes undecomposable weights
  SparseVector to_coords(const SparseVector& v,
                         const std::vector<int>& ambient_weight) const;
  SparseVector to_ambient(const SparseVector& coords) const;
  SparseVector basis_vector(int k) const;
  std::map<int, int> weight_dims() const;
};

WeightBlocks make_weight_blocks(int ambient,
                                std::map<int, SubspaceBasis> by_weight);

// The Kriz model for n points: quotient algebra A with its nbc-forest
// normal-form basis, the subalgebra B generated by the x/y differences and
// the w generators, the two-generator subalgebra D, differential matrices,
// and an independent brute-force dimension oracle.
class Model {
 public:
  explicit Model(int n, const Cache* cache = nullptr);

  int n() const { return n_; }

  struct Slice {
    int p = 0, q = 0;
    std::vector<Monomial> elems;       // canonical order
    std::map<Monomial, int> index;
    std::vector<int> weight;           // per element
    int dim() const { return static_cast<int>(elems.size()); }
  };

  // normal-form basis of A^{p,q}; empty outside 0<=q<=n-1, 0<=p<=2(n-q)
  const Slice& slice(int p, int q);
  int dim(ModelId m, int p, int q);  // models A, B, D

  // straightening of a square-free word of w-edges modulo the three-term
  // relations: a signed integer combination of nbc forests
  using EdgeSet = std::vector<uint8_t>;
  using StraightTerms = std::vector<std::pair<EdgeSet, long long>>;
  const StraightTerms& straighten(const EdgeSet& edges);

  // normal form as an element of Lambda supported on basis monomials
  MultiVector nf_mv(const MultiVector& v);
  // coordinates in the canonical basis of A^{p,q}; v must be homogeneous
  SparseVector nf(const MultiVector& v, int p, int q);
  SparseVector nf(const MultiVector& v);  // infers the bidegree
  MultiVector expand(int p, int q, const SparseVector& coords);

  // d : A^{p,q} -> A^{p+2,q-1}, columns indexed by the source basis
  const SparseMatrix& diff(int p, int q);
  const Derivation& differential() const { return d_; }

  // B^{p,q} as a torus-graded subspace of A^{p,q}
  const WeightBlocks& slice_b(int p, int q);
  // d : B^{p,q} -> B^{p+2,q-1} in B coordinates
  const SparseMatrix& diff_b(int p, int q);

  // slice dimension recomputed without the nbc basis: enumerate the free
  // slice of Lambda, enumerate relation multiples landing in it, row-reduce
  long oracle_quotient_dim(ModelId m, int p, int q) const;

  // relation ideal generators, for tests: (x_i-x_j)w_ij, (y_i-y_j)w_ij and
  // the three-term elements
  std::vector<MultiVector> relation_generators() const;

  std::vector<Monomial> free_slice_monomials(int p, int q) const;

 private:
  Slice build_slice(int p, int q);
  WeightBlocks build_slice_b(int p, int q);
  SparseMatrix build_diff(int p, int q);
  SparseMatrix build_diff_b(int p, int q);

  int n_;
  const Cache* cache_ = nullptr;
  Derivation d_;
  std::map<int, std::vector<NbcForest>> forests_;
  std::map<EdgeSet, StraightTerms> straight_;
  std::map<std::pair<int, int>, Slice> slices_;
  std::map<std::pair<int, int>, SparseMatrix> diffs_;
  std::map<std::pair<int, int>, WeightBlocks> slices_b_;
  std::map<std::pair<int, int>, SparseMatrix> diffs_b_;
};

}  // namespace ellconf
