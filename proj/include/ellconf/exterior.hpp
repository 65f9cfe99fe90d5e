#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellconf/rational.hpp"

namespace ellconf {

// Generators of the free graded-commutative algebra on n points:
// odd generators x_i, y_i (bidegree (1,0)) and w_{i,j} = w_{j,i}
// (bidegree (0,1)).  A generator is a small integer code under the fixed
// total order x_1 < y_1 < x_2 < y_2 < ... < x_n < y_n < w_{1,2} < w_{1,3}
// < ... < w_{n-1,n}; every sign in the artifact flows from this order.
using GenCode = uint16_t;

inline GenCode gen_x(int i) { return static_cast<GenCode>(2 * (i - 1)); }
inline GenCode gen_y(int i) { return static_cast<GenCode>(2 * (i - 1) + 1); }
int edge_index(int i, int j, int n);                // lex rank of (i,j), i<j
std::pair<int, int> edge_of_index(int e, int n);
GenCode gen_w(int i, int j, int n);                 // normalizes i>j, no sign
inline bool is_w(GenCode g, int n) { return g >= 2 * n; }
inline bool is_x(GenCode g, int n) { return g < 2 * n && g % 2 == 0; }
inline bool is_y(GenCode g, int n) { return g < 2 * n && g % 2 == 1; }
inline int xy_point(GenCode g) { return g / 2 + 1; }  // valid for x/y codes
int gen_count(int n);
std::string gen_name(GenCode g, int n);

// Square-free word of generators, strictly increasing.
struct Monomial {
  std::vector<GenCode> g;

  auto operator<=>(const Monomial&) const = default;
  // (p, q) = (#x + #y, #w)
  std::pair<int, int> bidegree(int n) const;
  int weight(int n) const;  // #x-letters - #y-letters
};

// Sorts an arbitrary word of odd generators; returns the sorted monomial and
// the Koszul sign, or nothing if a generator repeats.
std::optional<std::pair<Monomial, int>> sort_word(std::vector<GenCode> w);

// Element of the free algebra: finitely many monomials with nonzero
// rational coefficients, all sharing the ambient point count n.
struct MultiVector {
  int n = 0;
  std::map<Monomial, Rational> t;

  explicit MultiVector(int n_ = 0) : n(n_) {}
  bool zero() const { return t.empty(); }
  void add(const Monomial& m, const Rational& c);
  Rational coeff(const Monomial& m) const;
  // homogeneous bidegree, or nothing (nullopt also for the zero element)
  std::optional<std::pair<int, int>> bidegree() const;

  friend bool operator==(const MultiVector&, const MultiVector&) = default;
};

MultiVector mv_gen(int n, GenCode g);
MultiVector mv_mono(int n, std::vector<GenCode> word);  // sorts with sign
MultiVector mv_scalar(int n, const Rational& c);
MultiVector operator+(const MultiVector& a, const MultiVector& b);
MultiVector operator-(const MultiVector& a, const MultiVector& b);
MultiVector operator*(const Rational& c, const MultiVector& a);
// graded-commutative product; throws on ambient mismatch
MultiVector mul(const MultiVector& a, const MultiVector& b);

// Degree-preserving derivation determined by generator images.
// Even: D(ab) = D(a)b + aD(b).  Odd: D(ab) = D(a)b + (-1)^{deg a} aD(b)
// with deg the total degree p+q.  Images must be present for every
// generator the argument uses.
struct Derivation {
  int n = 0;
  bool odd = false;
  std::map<GenCode, MultiVector> image;
};

MultiVector apply(const Derivation& d, const MultiVector& v);

// Unique algebra-homomorphism extension of generator images.  A missing
// image means the generator maps to itself.  Every image must be
// homogeneous of the same bidegree as its source generator.
MultiVector substitute(const MultiVector& v,
                       const std::map<GenCode, MultiVector>& images);

// x_i -> x_{perm[i]}, y_i -> y_{perm[i]}, w_{i,j} -> w_{perm[i],perm[j]};
// perm is 1-based of size n+1 (index 0 unused).
MultiVector act_permutation(const MultiVector& v,
                            const std::vector<int>& perm);
std::optional<std::pair<Monomial, int>> act_permutation(
    const Monomial& m, const std::vector<int>& perm, int n);

std::string to_string(const MultiVector& v);
std::string to_string(const Monomial& m, int n);

}  // namespace ellconf
