#pragma once

// Verification suites.  Each suite runs one acceptance-grade check over
// a deterministic (seeded) input set and reports case counts plus a
// list of human-readable failures.

#include <string>
#include <vector>

namespace hurwitz {

struct VerifyReport {
  std::string suite;
  long cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double wall_seconds = 0.0;
  bool ok() const { return failures.empty(); }
};

// the thirteen tabulated H(D) values, D = 0..24
VerifyReport verify_golden_table();

// divisor-sum relation, exact equality for 1 <= n <= n_max
VerifyReport verify_theorem1(long n_max = 500);

// weighted elliptic count vs divisor max-sum (+1/6 at squares)
VerifyReport verify_eq0(long n_max = 500);

// per-coset subtotals vs 1 + sgn(delta'-delta) (+1/6 at sqrt(n)Gamma),
// and per-n totals against the eq0 sides
VerifyReport verify_theorem2(long n_max = 200);

// alpha sums over Gamma equal (1+sgn(y-1))/2 on seeded rational (x,y)
VerifyReport verify_theorem21(int samples = 1000, unsigned long seed = 1);

// locate agrees with the word-tree brute force wherever the oracle
// horizon provably covers the answer
VerifyReport verify_tessellation_oracle(int samples = 500,
                                        unsigned long seed = 1);

// disjoint interiors, coverage, and the 3-fold / 4-fold incidence at
// P2 / P3 vertices
VerifyReport verify_tessellation_geometry(int samples = 500,
                                          unsigned long seed = 1);

// Delta(T g) = T Delta(g) membership equivalence on seeded (g, p)
VerifyReport verify_equivariance(int samples = 1000,
                                 unsigned long seed = 1);

// word_from_matrix o matrix_from_word = id on all reduced words
VerifyReport verify_word_roundtrip(int max_len = 12);

// locate((x,y)) = {g : [[y,x],[0,1]] g elliptic with fixed point in F^-}
VerifyReport verify_crosslink(int samples = 200, unsigned long seed = 1);

// the seeded sample points used by the tessellation suites, rendered
// through sample_report_tsv
std::string tessellation_sample_tsv(int samples = 500,
                                    unsigned long seed = 1);

// all of the above with acceptance parameters
std::vector<VerifyReport> verify_all(unsigned long seed = 1);

}  // namespace hurwitz
