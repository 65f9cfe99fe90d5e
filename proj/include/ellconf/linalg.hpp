#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ellconf/rational.hpp"

namespace ellconf {

// Sparse coordinate vector: (index, coefficient) pairs, indices strictly
// increasing, no zero coefficients stored.
struct SparseVector {
  std::vector<std::pair<int, Rational>> e;

  bool zero() const { return e.empty(); }
  int leading() const { return e.front().first; }
  const Rational& leading_coeff() const { return e.front().second; }
  Rational get(int i) const;
  void set(int i, const Rational& c);  // insert/overwrite, keeps order

  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

SparseVector sv_from_dense(const std::vector<Rational>& d);
SparseVector sv_unit(int i);
// a + c*b
SparseVector sv_axpy(const SparseVector& a, const Rational& c,
                     const SparseVector& b);
SparseVector sv_scale(const Rational& c, const SparseVector& a);
Rational sv_dot(const SparseVector& a, const SparseVector& b);
int sv_max_index(const SparseVector& a);

// Echelon basis of a subspace: rows in reduced row echelon form, pivot
// columns strictly increasing across rows, each pivot entry 1.  The RREF of
// a span is unique, so a SubspaceBasis is a canonical representation of the
// subspace it spans.
class SubspaceBasis {
 public:
  SubspaceBasis() : ambient_(0) {}
  explicit SubspaceBasis(int ambient) : ambient_(ambient) {}

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseVector>& rows() const { return rows_; }
  std::vector<int> pivots() const;

  // Remainder of v after eliminating every pivot column.  If coords is
  // non-null it receives the coefficients used, indexed by row.
  SparseVector reduce(const SparseVector& v,
                      SparseVector* coords = nullptr) const;
  bool contains(const SparseVector& v) const { return reduce(v).zero(); }
  // Inserts v, restoring RREF; returns true iff the dimension grew.
  bool insert(SparseVector v);

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  int ambient_;
  std::vector<SparseVector> rows_;
  std::unordered_map<int, int> pivot_row_;
};

// Sparse rational matrix, row-major.
struct SparseMatrix {
  int rows = 0, cols = 0;
  std::vector<SparseVector> row;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), row(r) {}

  Rational get(int r, int c) const { return row[r].get(c); }
  void set(int r, int c, const Rational& v) { row[r].set(c, v); }
  SparseMatrix transposed() const;
  // y = M x with x a sparse column vector of length cols.
  SparseVector apply(const SparseVector& x) const;
  // column c as a sparse vector of length rows
  std::vector<SparseVector> columns() const;
  bool is_zero() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

SparseMatrix mat_mul(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix mat_identity(int n);

struct Reduction {
  int rank = 0;
  SubspaceBasis row_space;  // RREF of the row span
  SubspaceBasis kernel;     // RREF basis of the null space
};

// Full reduction: rank, echelon row space and kernel.  Exact; the result is
// independent of row order because the RREF of a span is unique.
Reduction reduce(const SparseMatrix& m);

// dim(ambient) - rank(generators); throws on an index out of range.
int quotient_dim(int ambient, const std::vector<SparseVector>& gens);
// Dense-entry variant; throws if generator lengths disagree with ambient.
int quotient_dim_dense(int ambient,
                       const std::vector<std::vector<Rational>>& gens);

// Intersection of two subspaces of the same ambient space (Zassenhaus).
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

SubspaceBasis echelonize(int ambient, const std::vector<SparseVector>& vecs);

}  // namespace ellconf
