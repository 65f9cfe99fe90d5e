#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "../vendor/doctest.h"

#include "ellconf/linalg.hpp"

using namespace ellconf;

namespace {

SparseVector sv(std::initializer_list<std::pair<int, long>> entries) {
  SparseVector v;
  for (auto& [i, c] : entries) v.set(i, rat(c));
  return v;
}

}  // namespace

TEST_CASE("reduction of trivial matrices") {
  SparseMatrix empty(0, 0);
  Reduction r = reduce(empty);
  CHECK(r.rank == 0);
  CHECK(r.row_space.dim() == 0);
  CHECK(r.kernel.dim() == 0);

  Reduction id = reduce(mat_identity(3));
  CHECK(id.rank == 3);
  CHECK(id.kernel.dim() == 0);
}

TEST_CASE("kernel vectors really lie in the kernel") {
  // rows: (1 2 3), (2 4 6), (0 1 1) -- rank 2, kernel dim 1
  SparseMatrix m(3, 3);
  m.row[0] = sv({{0, 1}, {1, 2}, {2, 3}});
  m.row[1] = sv({{0, 2}, {1, 4}, {2, 6}});
  m.row[2] = sv({{1, 1}, {2, 1}});
  Reduction r = reduce(m);
  CHECK(r.rank == 2);
  REQUIRE(r.kernel.dim() == 1);
  for (const SparseVector& k : r.kernel.rows())
    CHECK(m.apply(k).zero());
}

TEST_CASE("rank agrees with the rank of the transpose") {
  // deterministic pseudo-random small instances
  unsigned state = 12345;
  auto next = [&state]() {
    state = state * 1103515245u + 12345u;
    return static_cast<long>((state >> 16) % 7) - 3;
  };
  for (int trial = 0; trial < 10; ++trial) {
    SparseMatrix m(4, 5);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j) {
        long c = next();
        if (c != 0) m.set(i, j, rat(c));
      }
    CHECK(reduce(m).rank == reduce(m.transposed()).rank);
  }
}

TEST_CASE("quotient dimensions") {
  CHECK(quotient_dim(5, {}) == 5);
  CHECK(quotient_dim(3, {sv({{0, 1}}), sv({{0, 1}, {1, 1}})}) == 1);
  CHECK_THROWS(quotient_dim(2, {sv({{5, 1}})}));
}

TEST_CASE("subspace intersection") {
  SubspaceBasis a(3), b(3), diag(3);
  a.insert(sv({{0, 1}}));
  a.insert(sv({{1, 1}}));
  b.insert(sv({{2, 1}}));
  diag.insert(sv({{0, 1}, {1, 1}}));

  CHECK(intersect(a, a) == a);                 // idempotence
  CHECK(intersect(a, b).dim() == 0);           // complementary coordinates
  CHECK(intersect(diag, a) == diag);           // containment

  // Grassmann dimension formula on the same instances
  for (auto& [x, y] : {std::pair{a, b}, {diag, a}, {a, a}}) {
    SubspaceBasis sum = x;
    for (const SparseVector& r : y.rows()) sum.insert(r);
    CHECK(x.dim() + y.dim() == sum.dim() + intersect(x, y).dim());
  }
}

TEST_CASE("echelon basis is canonical and reduces members to zero") {
  SubspaceBasis s1 = echelonize(3, {sv({{0, 1}, {1, 1}}), sv({{1, 1}, {2, 1}})});
  SubspaceBasis s2 = echelonize(3, {sv({{0, 1}, {2, -1}}), sv({{1, 2}, {2, 2}})});
  CHECK(s1 == s2);  // same span, same RREF
  CHECK(s1.contains(sv({{0, 3}, {1, 1}, {2, -2}})));
  CHECK_FALSE(s1.contains(sv({{0, 1}})));

  SparseVector coords;
  CHECK(s1.reduce(sv({{0, 1}, {1, 1}}), &coords).zero());
  SparseVector rebuilt;
  for (auto& [i, c] : coords.e)
    rebuilt = sv_axpy(rebuilt, c, s1.rows()[i]);
  CHECK(rebuilt == sv({{0, 1}, {1, 1}}));
}
