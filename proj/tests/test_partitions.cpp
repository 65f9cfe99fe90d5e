#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "../vendor/doctest.h"

#include <algorithm>

#include "ellconf/equivariance.hpp"
#include "ellconf/partitions.hpp"

using namespace ellconf;

TEST_CASE("enumeration of marked partitions") {
  // n=2, p=0, q=1: forced to the single part (2) with the empty mark
  auto one = enumerate_marked(2, 0, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].parts == std::vector<std::pair<int, Mark>>{{2, Mark::One}});
  CHECK(one[0].edge_count() == 1);
  CHECK(one[0].letter_count() == 0);

  // the large example: parts (5,5,5,5,1,1,1) marked (xy,xy,xy,1,x,x,x)
  MarkedPartition big;
  big.parts = {{5, Mark::XY}, {5, Mark::XY}, {5, Mark::XY},
               {5, Mark::One}, {1, Mark::X}, {1, Mark::X}, {1, Mark::X}};
  CHECK(big.n() == 23);
  CHECK(big.edge_count() == 16);
  CHECK(big.letter_count() == 9);
  CHECK(big.weight() == 3);
  auto slice = enumerate_marked(23, 9, 16);
  CHECK(std::count(slice.begin(), slice.end(), big) == 1);
  CHECK(stabilizer(big).z_order == 22500);  // 5^4 * 3! * 3!
}

TEST_CASE("stabilizer orders") {
  // all singletons, unmarked: the full symmetric group
  MarkedPartition ones;
  for (int i = 0; i < 4; ++i) ones.parts.push_back({1, Mark::One});
  StabilizerInfo s = stabilizer(ones);
  CHECK(s.c_order == 1);
  CHECK(s.n_order == 24);
  CHECK(s.z_order == 24);
  CHECK(induced_dim(ones) == 1);

  MarkedPartition pair;
  pair.parts = {{2, Mark::One}};
  CHECK(stabilizer(pair).z_order == 2);
  CHECK(induced_dim(pair) == 1);
}

TEST_CASE("character triviality") {
  MarkedPartition pair;
  pair.parts = {{2, Mark::One}};
  CHECK(xi_is_trivial(pair));  // w(1,2) is invariant

  // two singletons marked x: sign (-1)^{1+1+1} = -1, anti-invariant
  MarkedPartition xx;
  xx.parts = {{1, Mark::X}, {1, Mark::X}};
  CHECK_FALSE(xi_is_trivial(xx));

  // any part of size >= 3 kills triviality
  MarkedPartition triple;
  triple.parts = {{3, Mark::One}};
  CHECK_FALSE(xi_is_trivial(triple));
}

TEST_CASE("oracles agree with the model, n = 3") {
  Model m(3);
  for (int q = 0; q <= 2; ++q)
    for (int p = 0; p <= 2 * (3 - q); ++p) {
      CHECK(slice_dimension_oracle(3, p, q) == m.dim(ModelId::A, p, q));
      CHECK(invariant_dimension_oracle(3, p, q) ==
            invariant_slice(m, ModelId::UA, p, q).dim);
      std::map<int, long long> profile;
      for (int w : m.slice(p, q).weight) ++profile[w];
      CHECK(weight_dimension_oracle(3, p, q) == profile);
    }
}

TEST_CASE("invariant count at n = 2, (2,0)") {
  // invariants of the (2,0) slice: x1y1 + x2y2 and x1y2 + x2y1
  CHECK(invariant_dimension_oracle(2, 2, 0) == 2);
  CHECK(slice_dimension_oracle(2, 2, 0) == 6);
}
