// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <iostream>
#include <string>

#include "ellconf/verify.hpp"

using namespace ellconf;

namespace {

bool g_ok = true;

void criterion(int k, const std::string& desc, bool pass) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << k << ": " << desc
            << std::endl;
  g_ok = g_ok && pass;
}

}  // namespace

int main() {
  // criteria 1-3: closed-form reproduction of the Poincare, Hodge and
  // representation-ring polynomials of the unordered spaces, 2 <= n <= 6
  bool c1 = true, c2 = true, c3 = true;
  for (int n = 2; n <= 6; ++n) {
    Model m(n);
    Cohomology coh(m);
    c1 = c1 && coh.betti_polynomial(Space::UConf) == closed_betti(Space::UConf, n);
    c2 = c2 && coh.hodge_polynomial(Space::UConf) == closed_hodge(Space::UConf, n);
    c3 = c3 &&
         coh.grothendieck_polynomial(Space::UConf) == closed_groth(Space::UConf, n) &&
         coh.grothendieck_polynomial(Space::UM) == closed_groth(Space::UM, n);
  }
  criterion(1,
            "Poincare polynomial of unordered configurations equals "
            "(1+t)^2 T_{n-1}(t,1) for 2 <= n <= 6",
            c1);
  criterion(2,
            "Hodge polynomial of unordered configurations equals "
            "(1+uv)^2 T_{n-1}(u,v) for 2 <= n <= 6",
            c2);
  criterion(3,
            "representation-ring Hodge polynomial matches the closed product "
            "term by term, including the diagonal pattern V_i at u^{2i}v^{3i} "
            "and V_{i-1} at u^{2i+1}v^{3i+1}, for 2 <= n <= 6",
            c3);

  // criterion 4: coefficient extractions match the closed forms up to n = 7
  bool c4 = true;
  for (int q = 1; q <= 7; ++q) c4 = c4 && determinant_identity(q);
  for (int n = 3; n <= 7; ++n) {
    Model m(n);
    NamedClass alpha = build_class(m, ClassName::Alpha);
    MultiVector pow = alpha.value;
    for (int q = 1; 2 * q <= n; ++q) {
      if (q > 1) pow = m.nf_mv(mul(pow, alpha.value));
      auto [mono, sign] = power_monomial(n, q);
      bool got = rat(sign) * monomial_coefficient(m, pow, mono) == a_closed(n, q);
      if (!got)
        std::cout << "  detail: a coefficient mismatch at n=" << n
                  << " q=" << q << std::endl;
      c4 = c4 && got;
    }
    if (n > 3) {
      MultiVector mixed = build_class(m, ClassName::Beta).value;
      for (int q = 1; 2 * q + 1 <= n; ++q) {
        if (q > 1) mixed = m.nf_mv(mul(mixed, alpha.value));
        auto [mono, sign] = mixed_power_monomial(n, q);
        (void)sign;
        bool got = monomial_coefficient(m, mixed, mono) == b_closed(n, q);
        if (!got)
          std::cout << "  detail: b coefficient mismatch at n=" << n
                    << " q=" << q << std::endl;
        c4 = c4 && got;
      }
    }
  }
  criterion(4,
            "chain-monomial coefficients of alpha^q and alpha^{q-1}beta match "
            "(-1)^q q! n^{q-1}(n-2q) and 2(-1)^q q! n^{q-1}(n-2q-1) for n <= 7, "
            "and the permutation determinant identity holds for q <= 7",
            c4);

  // criterion 5: dimension oracles on every slice, n <= 5
  bool c5 = true;
  for (int n = 2; n <= 5; ++n) c5 = c5 && verify_suite("dims", n).pass();
  criterion(5,
            "forest-basis dimensions agree with the relation-ideal oracle and "
            "the marked-partition counts, and invariants vanish for q > p+1, "
            "on every slice with n <= 5",
            c5);

  // criterion 6: structural properties on every slice, n <= 5
  bool c6 = true;
  for (int n = 2; n <= 5; ++n) c6 = c6 && verify_suite("reps", n).pass();
  criterion(6,
            "d*d = 0, the permutation and sl2 actions commute with d, the sl2 "
            "commutator relations hold, the weight-lowering maps are injective "
            "for a >= 0, and the tensor splitting identity holds, n <= 5",
            c6);

  // criterion 7: ring presentation, generation and formality, 4 <= n <= 6
  bool c7 = true;
  for (int n = 4; n <= 6; ++n) {
    Model m(n);
    Cohomology coh(m);
    PresentationReport pres = verify_presentation(coh);
    std::cout << "  info: n=" << n << " matched b-relation exponent "
              << pres.matched_exponent << ", floor(n/2)=" << n / 2
              << ", equal: " << (pres.floor_half_exponent_matches ? "yes" : "no")
              << std::endl;
    c7 = c7 && pres.pass;
    c7 = c7 && verify_power_nonvanishing(coh).pass();  // incl. top power = 0
    c7 = c7 && verify_generation(coh).pass();
    c7 = c7 && verify_formality(coh).pass();
  }
  criterion(7,
            "the quotient presentation matches the invariant zero-sum "
            "cohomology for exactly one b-relation exponent (reported above), "
            "the top alpha power vanishes, and the generation and formality "
            "checks pass for 4 <= n <= 6",
            c7);

  // criterion 8: resource guard behavior
  bool c8 = guard_allows(6, true, false) && !guard_allows(7, true, true) &&
            !guard_allows(7, false, false) && guard_allows(7, false, true) &&
            !guard_allows(8, false, true);
  try {
    Model m7(7);
    m7.oracle_quotient_dim(ModelId::A, 7, 3);  // free slice over the limit
    c8 = false;
  } catch (const GuardExceeded&) {
  }
  criterion(8,
            "the resource guard admits full workloads only for n <= 6, admits "
            "n = 7 for zero-sum and classes workloads behind the opt-in flag, "
            "and the brute-force oracle refuses oversized free slices",
            c8);

  std::cout << (g_ok ? "ACCEPTANCE: all criteria passed"
                     : "ACCEPTANCE: some criteria FAILED")
            << std::endl;
  return g_ok ? 0 : 1;
}
