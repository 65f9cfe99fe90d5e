#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "../vendor/doctest.h"

#include "ellconf/classes.hpp"
#include "ellconf/equivariance.hpp"

using namespace ellconf;

TEST_CASE("construction of the distinguished classes") {
  Model m2(2);
  NamedClass g = build_class(m2, ClassName::Gamma);
  CHECK(g.value == mv_gen(2, gen_x(1)) + mv_gen(2, gen_x(2)));
  CHECK_THROWS_AS(build_class(m2, ClassName::Alpha), std::invalid_argument);

  Model m3(3);
  NamedClass a = build_class(m3, ClassName::Alpha);  // cocycle enforced
  Monomial x3w12{{gen_x(3), gen_w(1, 2, 3)}};
  CHECK(monomial_coefficient(m3, a.value, x3w12) == rat(1));
  Monomial x1w12{{gen_x(1), gen_w(1, 2, 3)}};
  CHECK(monomial_coefficient(m3, a.value, x1w12) == rat(-1));

  Model m4(4);
  NamedClass b = build_class(m4, ClassName::Beta);
  Monomial x3y4w12{{gen_x(3), gen_y(4), gen_w(1, 2, 4)}};
  CHECK(monomial_coefficient(m4, b.value, x3y4w12) == rat(3));
}

TEST_CASE("classes are invariant and related by the lowering operator") {
  Model m(4);
  NamedClass a = build_class(m, ClassName::Alpha);
  NamedClass ab = build_class(m, ClassName::AlphaBar);
  NamedClass b = build_class(m, ClassName::Beta);
  CHECK(m.nf_mv(apply(sl2_f(4), a.value)) == ab.value);
  for (auto& g : {transposition12(4), cycle_n(4)}) {
    CHECK(m.nf_mv(act_permutation(a.value, g)) == a.value);
    CHECK(m.nf_mv(act_permutation(b.value, g)) == b.value);
  }
}

TEST_CASE("coefficient extraction against the closed forms") {
  CHECK(a_closed(3, 1) == rat(-1));
  CHECK(a_closed(5, 2) == rat(10));
  CHECK(a_closed(4, 2) == rat(0));
  CHECK(b_closed(6, 2) == rat(24));

  // a_2 at n = 5: coefficient of the interleaved chain monomial in alpha^2
  Model m5(5);
  NamedClass a5 = build_class(m5, ClassName::Alpha);
  MultiVector sq = m5.nf_mv(mul(a5.value, a5.value));
  auto [mono, sign] = power_monomial(5, 2);
  CHECK(rat(sign) * monomial_coefficient(m5, sq, mono) == a_closed(5, 2));

  // b_1 at n = 4: coefficient of x1 w(1,2) y3 in beta
  Model m4(4);
  NamedClass b4 = build_class(m4, ClassName::Beta);
  auto [mixed, msign] = mixed_power_monomial(4, 1);
  CHECK(monomial_coefficient(m4, b4.value, mixed) == b_closed(4, 1));
}

TEST_CASE("permutation determinant identity") {
  for (int q = 1; q <= 5; ++q) CHECK(determinant_identity(q));
}

TEST_CASE("power nonvanishing at n = 4") {
  Model m(4);
  Cohomology coh(m);
  Report rep = verify_power_nonvanishing(coh);
  CHECK(rep.pass());
  // alpha^2 must vanish at n = 4 (a_2 = 0 and degree exceeds the top)
  bool saw_top_vanishing = false;
  for (const Check& c : rep.checks)
    if (c.name == "alpha_top_vanishes") saw_top_vanishing = c.pass;
  CHECK(saw_top_vanishing);
}

TEST_CASE("presentation, generation and formality at n = 4") {
  Model m(4);
  Cohomology coh(m);
  PresentationReport pres = verify_presentation(coh);
  CHECK(pres.pass);
  CHECK(pres.matched_exponent == 1);  // floor(n/2) - 1
  CHECK_FALSE(pres.floor_half_exponent_matches);
  CHECK(verify_generation(coh).pass());
  CHECK(verify_formality(coh).pass());
}

TEST_CASE("presentation at n = 5 matches exponent 1") {
  Model m(5);
  Cohomology coh(m);
  PresentationReport pres = verify_presentation(coh);
  CHECK(pres.pass);
  CHECK(pres.matched_exponent == 1);
}
