#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "../vendor/doctest.h"

#include "ellconf/exterior.hpp"

using namespace ellconf;

namespace {

MultiVector x(int n, int i) { return mv_gen(n, gen_x(i)); }
MultiVector y(int n, int i) { return mv_gen(n, gen_y(i)); }
MultiVector w(int n, int i, int j) { return mv_gen(n, gen_w(i, j, n)); }

}  // namespace

TEST_CASE("generator order and names") {
  CHECK(gen_x(1) < gen_y(1));
  CHECK(gen_y(2) < gen_w(1, 2, 2));
  CHECK(gen_w(2, 1, 3) == gen_w(1, 2, 3));  // symmetric, no sign
  CHECK(gen_name(gen_x(1), 3) == "x1");
  CHECK(gen_name(gen_w(1, 2, 3), 3) == "w(1,2)");
  CHECK(edge_of_index(edge_index(2, 3, 4), 4) == std::pair{2, 3});
}

TEST_CASE("odd multiplication") {
  int n = 2;
  CHECK(mul(x(n, 1), x(n, 1)).zero());  // square-free
  // odd transposition picks up a sign
  CHECK(mul(x(n, 2), x(n, 1)) == rat(-1) * mul(x(n, 1), x(n, 2)));
  // (x1 - x2)(y1 - y2) expands with signs
  MultiVector prod = mul(x(n, 1) - x(n, 2), y(n, 1) - y(n, 2));
  MultiVector want = mv_mono(n, {gen_x(1), gen_y(1)}) -
                     mv_mono(n, {gen_x(1), gen_y(2)}) -
                     mv_mono(n, {gen_x(2), gen_y(1)}) +
                     mv_mono(n, {gen_x(2), gen_y(2)});
  CHECK(prod == want);
}

TEST_CASE("graded commutativity on homogeneous elements") {
  int n = 3;
  // odd * odd anticommutes, even (w) commutes with everything
  MultiVector a = x(n, 1) + rat(2) * y(n, 2);        // degree 1
  MultiVector b = y(n, 3) - x(n, 2);                 // degree 1
  CHECK(mul(a, b) == rat(-1) * mul(b, a));
  MultiVector c = w(n, 1, 2);                        // degree 1, odd too
  CHECK(mul(a, c) == rat(-1) * mul(c, a));
  MultiVector ab = mul(a, b);                        // degree 2, even
  CHECK(mul(ab, c) == mul(c, ab));
}

TEST_CASE("sort_word computes Koszul signs") {
  auto sorted = sort_word({gen_y(1), gen_x(1)});
  REQUIRE(sorted.has_value());
  CHECK(sorted->second == -1);
  CHECK(sorted->first.g == std::vector<GenCode>{gen_x(1), gen_y(1)});
  CHECK_FALSE(sort_word({gen_x(1), gen_x(1)}).has_value());
}

TEST_CASE("derivations satisfy the Leibniz rule") {
  int n = 2;
  Derivation d;
  d.n = n;
  d.odd = true;
  for (int i = 1; i <= n; ++i) {
    d.image[gen_x(i)] = MultiVector(n);
    d.image[gen_y(i)] = MultiVector(n);
  }
  d.image[gen_w(1, 2, n)] = mul(x(n, 1) - x(n, 2), y(n, 1) - y(n, 2));

  CHECK(apply(d, x(n, 1)).zero());
  CHECK(apply(d, y(n, 2)).zero());
  CHECK(apply(d, w(n, 1, 2)) == d.image[gen_w(1, 2, n)]);

  // odd Leibniz on a product of odd elements: d(ab) = d(a)b - a d(b)
  MultiVector a = x(n, 1), b = w(n, 1, 2);
  CHECK(apply(d, mul(a, b)) ==
        mul(apply(d, a), b) - mul(a, apply(d, b)));
}

TEST_CASE("substitution is the algebra-homomorphism extension") {
  int n = 2;
  MultiVector v = mul(x(n, 1), y(n, 2)) + w(n, 1, 2);
  CHECK(substitute(v, {}) == v);  // identity

  // the rotation (0 -1; 1 0): x1 -> y1, y1 -> -x1
  std::map<GenCode, MultiVector> rot{{gen_x(1), y(n, 1)},
                                     {gen_y(1), rat(-1) * x(n, 1)}};
  CHECK(substitute(x(n, 1), rot) == y(n, 1));
  CHECK(substitute(y(n, 1), rot) == rat(-1) * x(n, 1));
  CHECK(substitute(mul(x(n, 1), y(n, 1)), rot) == mul(x(n, 1), y(n, 1)));
}

TEST_CASE("permutation action") {
  int n = 2;
  // (1 2) fixes w_{1,2} because w is symmetric in its indices
  std::vector<int> t{0, 2, 1};
  CHECK(act_permutation(w(n, 1, 2), t) == w(n, 1, 2));
  CHECK(act_permutation(x(n, 1), t) == x(n, 2));

  // composition law on a sample element, n = 3
  int m = 3;
  std::vector<int> s{0, 2, 3, 1}, u{0, 2, 1, 3};
  MultiVector v = mul(x(m, 1), w(m, 2, 3)) + rat(3) * mul(y(m, 2), y(m, 3));
  std::vector<int> su{0, 0, 0, 0};
  for (int i = 1; i <= m; ++i) su[i] = s[u[i]];
  CHECK(act_permutation(act_permutation(v, u), s) == act_permutation(v, su));
}
