#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellconf/model.hpp"

namespace ellconf {

// mark on a block: subset of {x, y}; the order of the codes is the
// normalization order 1 < x < y < xy
enum class Mark : int { One = 0, X = 1, Y = 2, XY = 3 };

int mark_degree(Mark h);   // 0, 1, 1, 2
int mark_weight(Mark h);   // 0, +1, -1, 0
std::string mark_name(Mark h);

// Partition of n with each part labeled by a mark.  Parts are weakly
// decreasing; among equal parts, marks are weakly decreasing in the mark
// order.  Statistics: edge count |L| = n - #parts, letter count
// |H| = sum of mark degrees, weight = #x-marks - #y-marks.
struct MarkedPartition {
  std::vector<std::pair<int, Mark>> parts;

  auto operator<=>(const MarkedPartition&) const = default;
  int n() const;
  int edge_count() const;    // |L|
  int letter_count() const;  // |H|
  int weight() const;        // ||H||
};

// orders of the stabilizer of a marked set partition with these block sizes
// and marks: the block-rotation group, the group permuting identical
// (size, mark) blocks, and their semidirect product
struct StabilizerInfo {
  long long c_order = 1;  // product of part sizes
  long long n_order = 1;  // product of factorials of class multiplicities
  long long z_order = 1;  // c_order * n_order
};

// all marked partitions of n with edge count q and letter count p,
// deterministic order, no duplicates
std::vector<MarkedPartition> enumerate_marked(int n, int p, int q);

StabilizerInfo stabilizer(const MarkedPartition& mp);

// dimension of the representation induced from the stabilizer character
long long induced_dim(const MarkedPartition& mp);

// whether the stabilizer character is trivial: every part must have size 1
// or 2, and every class of identical (size, mark) blocks with multiplicity
// at least 2 must have positive sign (-1)^{size + deg(mark) + 1}
bool xi_is_trivial(const MarkedPartition& mp);

// sum of induced dimensions over the slice; equals dim A^{p,q}
long long slice_dimension_oracle(int n, int p, int q);
// number of trivial-character marked partitions; equals dim UA^{p,q}
long long invariant_dimension_oracle(int n, int p, int q);
// induced dimensions refined by weight; equals the torus-weight profile of
// A^{p,q}
std::map<int, long long> weight_dimension_oracle(int n, int p, int q);

}  // namespace ellconf
