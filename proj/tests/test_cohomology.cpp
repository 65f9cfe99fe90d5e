#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "../vendor/doctest.h"

#include "ellconf/cohomology.hpp"

using namespace ellconf;

TEST_CASE("series expansion of (1 + u^3 v^4) / (1 - u^2 v^3)^2") {
  Poly2 t = truncated_series(5);
  CHECK(t[{0, 0}] == 1);
  CHECK(t[{2, 3}] == 2);
  CHECK(t[{3, 4}] == 1);
  CHECK(t[{4, 6}] == 3);
  CHECK(t[{5, 7}] == 2);
}

TEST_CASE("representation-ring product") {
  GrothPoly a, b;
  a[{0, 0}][1] = 1;  // V_1
  b[{0, 0}][1] = 1;
  GrothPoly p = groth_mul(a, b);  // V_1 * V_1 = V_2 + V_0
  CHECK(p[{0, 0}] == std::map<int, int>{{0, 1}, {2, 1}});
  CHECK(groth_to_poly2(p)[{0, 0}] == 4);
}

TEST_CASE("Betti polynomials") {
  Model m2(2);
  Cohomology c2(m2);
  CHECK(c2.betti_polynomial(Space::UConf) ==
        Poly1{{0, 1}, {1, 2}, {2, 1}});
  CHECK(c2.betti_polynomial(Space::Conf) ==
        Poly1{{0, 1}, {1, 4}, {2, 5}, {3, 2}});

  Model m3(3);
  Cohomology c3(m3);
  CHECK(c3.betti_polynomial(Space::UConf) ==
        Poly1{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}});

  Model m4(4);
  Cohomology c4(m4);
  CHECK(c4.betti_polynomial(Space::UM) == Poly1{{0, 1}, {2, 2}, {3, 1}});
}

TEST_CASE("Hodge polynomial at n = 3") {
  Model m(3);
  Cohomology c(m);
  // (1+uv)^2 (1 + 2 u^2 v^3)
  Poly2 want = poly2_mul(Poly2{{{0, 0}, 1}, {{1, 1}, 2}, {{2, 2}, 1}},
                         Poly2{{{0, 0}, 1}, {{2, 3}, 2}});
  CHECK(c.hodge_polynomial(Space::UConf) == want);
  CHECK(c.hodge_polynomial(Space::UConf) == closed_hodge(Space::UConf, 3));
}

TEST_CASE("representation content of small spaces") {
  Model m4(4);
  Cohomology c(m4);
  GrothPoly um = c.grothendieck_polynomial(Space::UM);
  CHECK(um[{3, 4}] == std::map<int, int>{{0, 1}});  // V_0 at u^3 v^4
  GrothPoly uc = c.grothendieck_polynomial(Space::UConf);
  CHECK(uc[{0, 0}] == std::map<int, int>{{0, 1}});
  CHECK(uc[{1, 1}] == std::map<int, int>{{1, 1}});
  CHECK(um == closed_groth(Space::UM, 4));
}

TEST_CASE("closed forms match computation for n = 2 and 3") {
  for (int n = 2; n <= 3; ++n) {
    Model m(n);
    Cohomology c(m);
    CHECK(c.betti_polynomial(Space::UConf) == closed_betti(Space::UConf, n));
    CHECK(c.hodge_polynomial(Space::UConf) == closed_hodge(Space::UConf, n));
    CHECK(c.grothendieck_polynomial(Space::UConf) ==
          closed_groth(Space::UConf, n));
    CHECK(c.grothendieck_polynomial(Space::UM) == closed_groth(Space::UM, n));
  }
  CHECK_THROWS(closed_betti(Space::Conf, 3));
}

TEST_CASE("dimension of one invariant zero-sum cohomology slice, n = 5") {
  Model m(5);
  Cohomology c(m);
  CHECK(c.slice(ModelId::UB, 2, 2).dim == 3);  // V_2 on the even diagonal
}

TEST_CASE("Euler characteristic is preserved by cohomology") {
  Model m(3);
  Cohomology c(m);
  long long chi_model = 0;
  for (int q = 0; q <= 2; ++q)
    for (int p = 0; p <= 2 * (3 - q); ++p)
      chi_model += ((p + q) % 2 ? -1 : 1) * m.dim(ModelId::A, p, q);
  long long chi = 0;
  for (auto& [i, b] : c.betti_polynomial(Space::Conf))
    chi += (i % 2 ? -1 : 1) * b;
  CHECK(chi_model == chi);
}
