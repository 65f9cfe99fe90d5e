#pragma once

#include <map>
#include <vector>

#include "ellconf/model.hpp"

namespace ellconf {

// permutations are 1-based vectors of size n+1 with index 0 unused
std::vector<int> identity_perm(int n);
std::vector<int> transposition12(int n);
std::vector<int> cycle_n(int n);
std::vector<std::vector<int>> all_permutations(int n);
std::vector<int> compose_perms(const std::vector<int>& a,
                               const std::vector<int>& b);  // a after b

// integer partitions of n, parts weakly decreasing, lex-descending order
std::vector<std::vector<int>> partitions_of(int n);
// size of the conjugacy class of S_n with cycle type lambda
long long conjugacy_class_size(int n, const std::vector<int>& lambda);
// a permutation with cycle type lambda
std::vector<int> class_representative(int n, const std::vector<int>& lambda);

// matrix of the permutation action on the canonical basis of A^{p,q}
SparseMatrix perm_matrix_a(Model& m, int p, int q, const std::vector<int>& perm);
// induced matrix on the subspace B^{p,q}, in B coordinates
SparseMatrix perm_matrix_b(Model& m, int p, int q, const std::vector<int>& perm);

// S_n-invariant subspace of A^{p,q} (UA) or B^{p,q} (UB), computed one
// torus-weight block at a time as the joint kernel of s - 1 for the two
// generating permutations (1 2) and (1 2 ... n)
WeightBlocks invariant_slice(Model& m, ModelId which, int p, int q);

// invariant dimension computed independently as the trace of the averaging
// operator, summed over conjugacy classes; throws if the average is not an
// integer
long reynolds_dim(Model& m, ModelId which, int p, int q);

// multiplicities of the irreducible sl2 representations V_k from a
// torus-weight profile: m_k = n_k - n_{k+2}.  Throws std::runtime_error if
// the profile is not symmetric or any multiplicity is negative.
std::map<int, int> irrep_multiplicities(const std::map<int, int>& weight_dims);

// raising and lowering operators: e sends y_i to x_i, f sends x_i to y_i;
// both are even derivations fixing the w generators
Derivation sl2_e(int n);
Derivation sl2_f(int n);
// matrix of an even derivation on A^{p,q} (B variant in B coordinates)
SparseMatrix derivation_matrix_a(Model& m, const Derivation& d, int p, int q);
SparseMatrix derivation_matrix_b(Model& m, const Derivation& d, int p, int q);

// algebra substitution x_i -> x_i + y_i, y_i -> y_i (the unipotent lowering
// flow used by the weight-pairing maps)
MultiVector unipotent_subst(const MultiVector& v);
// component of v of torus weight w
MultiVector weight_component(const MultiVector& v, int w);

}  // namespace ellconf
