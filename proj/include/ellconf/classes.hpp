#pragma once

#include <string>
#include <vector>

#include "ellconf/cohomology.hpp"

namespace ellconf {

enum class ClassName { Alpha, AlphaBar, Beta, Gamma, GammaBar };
std::string to_string(ClassName c);

// a distinguished cocycle, stored in normal form
struct NamedClass {
  ClassName name;
  int n;
  MultiVector value;
};

// Builds the class and enforces that it is a cocycle.  Throws
// std::invalid_argument if n is too small (alpha/alphabar need n > 2, beta
// needs n > 3) and std::logic_error if the differential is nonzero.
NamedClass build_class(Model& m, ClassName name);

// coefficient of a normal-form basis monomial in the normal form of v;
// throws std::invalid_argument if the target is not a basis monomial
Rational monomial_coefficient(Model& m, const MultiVector& v,
                              const Monomial& target);

// the witness monomials of the power lemmas: a_q is the coefficient of the
// interleaved word x_1 w_{1,2} x_3 w_{3,4} ... x_{2q-1} w_{2q-1,2q} in
// alpha^q, and b_q the coefficient of that word times y_{2q+1} in
// alpha^{q-1} beta; returned as the sorted basis monomial together with the
// reordering sign
std::pair<Monomial, int> power_monomial(int n, int q);
std::pair<Monomial, int> mixed_power_monomial(int n, int q);
Rational a_closed(int n, int q);  // (-1)^q q! n^{q-1} (n-2q)
Rational b_closed(int n, int q);  // 2 (-1)^q q! n^{q-1} (n-2q-1)

// sum over permutations of sgn(sigma) x^{#fixed points} equals
// (x-1)^{q-1} (x+q-1); checked by brute-force enumeration
bool determinant_identity(int q);

struct Check {
  std::string name;
  std::string claim;  // the mathematical statement being verified
  bool pass = false;
  std::string details;
};

struct Report {
  std::vector<Check> checks;
  bool pass() const;
};

// For every q with 2q <= n: a_q extraction matches the closed form, and for
// n > 2q the class alpha^q is not a coboundary.  Likewise for
// alpha^{q-1} beta with 2q+1 <= n / n > 2q+1.  Also checks
// alpha^{floor((n+1)/2)} = 0 in cohomology.
Report verify_power_nonvanishing(Cohomology& coh);

struct PresentationReport {
  int n = 0;
  // total cohomology dimension of the zero-sum model per degree
  std::map<int, long long> h_dims;
  // quotient dimension per degree for each candidate exponent e in the
  // relation family (a^{floor((n+1)/2)}, a^e b, b^2)
  std::map<int, std::map<int, long long>> candidate_dims;
  int matched_exponent = -1;
  bool floor_half_exponent_matches = false;  // matched == floor(n/2)
  bool pass = false;
  std::vector<Check> checks;
};

// Compares H(UB) degreewise against the quotient of the free graded algebra
// on the pair (a, abar) in degree 2 and b in degree 3, modulo the
// SL2-stable ideal generated by a^{floor((n+1)/2)}, a^e b and b^2, for the
// candidate exponents e in {floor(n/2)-1, floor(n/2), floor(n/2)+1}.  The
// ideal is saturated degreewise by repeated lowering (f) and multiplication.
PresentationReport verify_presentation(Cohomology& coh);

// the classes of gamma, gammabar, alpha, alphabar, beta generate the full
// invariant cohomology: the span of their products matches the Betti
// numbers in every degree
Report verify_generation(Cohomology& coh);

// formality witness: K = subalgebra of the invariant zero-sum model
// generated by alpha, alphabar, beta satisfies (1) K consists of cocycles,
// (2) K meets the coboundaries only in 0, (3) dim K^{p,q} = dim H^{p,q}
Report verify_formality(Cohomology& coh);

}  // namespace ellconf
