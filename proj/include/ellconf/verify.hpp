#pragma once

#include <string>
#include <vector>

#include "ellconf/classes.hpp"

namespace ellconf {

struct VerificationReport {
  int n = 0;
  std::string suite;
  std::vector<Check> checks;
  bool pass() const;
};

// suites: "dims", "reps", "cohomology", "classes", "ring", "formality",
// "all"; throws std::invalid_argument for an unknown suite and
// GuardExceeded when the requested size is out of the supported range
VerificationReport verify_suite(const std::string& suite, int n,
                                const Cache* cache = nullptr);

// pi_a injectivity on one slice: the matrix of the weight-lowering map from
// the weight-(a+2) block of A^{p,q} to the weight-a block has zero kernel
bool pi_a_injective(Model& m, int p, int q, int a);

// resource policy: full suites run for n <= 6; n = 7 is admitted only for
// the zero-sum-subalgebra and classes workloads behind an explicit opt-in
bool guard_allows(int n, bool full_suite, bool allow_large);

}  // namespace ellconf
