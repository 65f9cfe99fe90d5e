#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "../vendor/doctest.h"

#include "ellconf/equivariance.hpp"
#include "ellconf/verify.hpp"

using namespace ellconf;

TEST_CASE("permutation matrices") {
  Model m2(2);
  CHECK(perm_matrix_a(m2, 1, 1, identity_perm(2)) == mat_identity(2));
  // (1 2) fixes w(1,2): the (0,1) slice matrix is (1)
  SparseMatrix t = perm_matrix_a(m2, 0, 1, transposition12(2));
  CHECK(t == mat_identity(1));

  // group law on a slice of n = 3
  Model m3(3);
  std::vector<int> s = cycle_n(3), u = transposition12(3);
  CHECK(mat_mul(perm_matrix_a(m3, 1, 1, s), perm_matrix_a(m3, 1, 1, u)) ==
        perm_matrix_a(m3, 1, 1, compose_perms(s, u)));
}

TEST_CASE("conjugacy classes") {
  // sizes sum to n!
  long long total = 0;
  for (auto& lambda : partitions_of(4)) total += conjugacy_class_size(4, lambda);
  CHECK(total == 24);
  CHECK(conjugacy_class_size(3, {3}) == 2);
  CHECK(conjugacy_class_size(3, {2, 1}) == 3);
}

TEST_CASE("invariant slices") {
  Model m2(2);
  CHECK(invariant_slice(m2, ModelId::UA, 0, 1).dim == 1);  // w(1,2)
  // UA and UB vanish above the q = p+1 diagonal
  Model m3(3);
  for (int q = 0; q <= 2; ++q)
    for (int p = 0; p <= 2 * (3 - q); ++p) {
      if (q <= p + 1) continue;
      CHECK(invariant_slice(m3, ModelId::UA, p, q).dim == 0);
      CHECK(invariant_slice(m3, ModelId::UB, p, q).dim == 0);
    }
}

TEST_CASE("averaging trace agrees with the kernel computation") {
  Model m(3);
  for (int q = 0; q <= 2; ++q)
    for (int p = 0; p <= 2 * (3 - q); ++p) {
      CHECK(reynolds_dim(m, ModelId::UA, p, q) ==
            invariant_slice(m, ModelId::UA, p, q).dim);
      CHECK(reynolds_dim(m, ModelId::UB, p, q) ==
            invariant_slice(m, ModelId::UB, p, q).dim);
    }
}

TEST_CASE("weight profiles and irreducible multiplicities") {
  Model m2(2);
  std::map<int, int> profile;
  for (int w : m2.slice(1, 0).weight) ++profile[w];
  CHECK(profile == std::map<int, int>{{1, 2}, {-1, 2}});

  CHECK(irrep_multiplicities({{1, 1}, {-1, 1}}) ==
        std::map<int, int>{{1, 1}});
  CHECK(irrep_multiplicities({{2, 1}, {0, 2}, {-2, 1}}) ==
        std::map<int, int>{{2, 1}, {0, 1}});
  // asymmetric profile is rejected
  CHECK_THROWS(irrep_multiplicities({{1, 2}, {-1, 1}}));
}

TEST_CASE("sl2 operators") {
  int n = 2;
  Derivation e = sl2_e(n), f = sl2_f(n);
  MultiVector x1 = mv_gen(n, gen_x(1)), y1 = mv_gen(n, gen_y(1));
  CHECK(apply(e, y1) == x1);
  CHECK(apply(f, x1) == y1);
  // h = ef - fe multiplies by the torus weight
  auto h = [&](const MultiVector& v) {
    return apply(e, apply(f, v)) - apply(f, apply(e, v));
  };
  CHECK(h(x1) == x1);
  CHECK(h(y1) == rat(-1) * y1);

  // e and f commute with the differential on a slice of n = 3
  Model m(3);
  Derivation e3 = sl2_e(3);
  SparseMatrix es = derivation_matrix_a(m, e3, 1, 1);
  SparseMatrix et = derivation_matrix_a(m, e3, 3, 0);
  CHECK(mat_mul(et, m.diff(1, 1)) == mat_mul(m.diff(1, 1), es));
}

TEST_CASE("weight-lowering maps are injective in nonnegative weight") {
  for (int n = 2; n <= 4; ++n) {
    Model m(n);
    for (int q = 0; q <= n - 1; ++q)
      for (int p = 0; p <= 2 * (n - q); ++p)
        for (int a = p % 2; a <= p; a += 2)
          CHECK(pi_a_injective(m, p, q, a));
  }
}

TEST_CASE("unipotent substitution and weight projection") {
  int n = 2;
  MultiVector x1 = mv_gen(n, gen_x(1)), y1 = mv_gen(n, gen_y(1));
  MultiVector yx = unipotent_subst(x1);
  CHECK(yx == x1 + y1);
  CHECK(weight_component(yx, 1) == x1);
  CHECK(weight_component(yx, -1) == y1);
  CHECK(weight_component(yx, 0).zero());
}
