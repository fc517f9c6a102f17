#ifndef LEFSCHETZ_VERIFY_HPP
#define LEFSCHETZ_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/classify.hpp"
#include "lefschetz/core.hpp"

namespace lefschetz {

struct Disagreement {
    std::string description;
    std::string repro;  // a command line that reproduces the comparison
};

struct SweepReport {
    long long checked = 0;
    long long undecided = 0;  // cascade declined (informational)
    std::vector<Disagreement> disagreements;

    bool clean() const { return disagreements.empty(); }
};

// All nonincreasing (n+1)-tuples with entries in [dmin, dmax].
std::vector<std::vector<int>> enumerate_tuples(int n, int dmin, int dmax);

// Cross-validates the determinant product formula against the brute-force
// integer determinant, and its prime divisors against the rank oracle, over
// every admissible tuple with the given bounds (entries down to dmin, which
// may be 1).
SweepReport verify_det_vs_oracle(int nmax, int dmax, int dmin = 1);

// Compares the closed-form cascade (oracle fallback disabled) with the rank
// oracle for both properties.
SweepReport verify_classify_vs_oracle(int nmax, int dmax, std::uint64_t pmax);

// Compares the syzygy-degree-bound route with the rank oracle.
SweepReport verify_mgd_vs_oracle(int nmax, int dmax,
                                 const std::vector<std::uint64_t>& characteristics);

// Compares the syzygy-gap criterion with the rank oracle over all semistable
// triples with entries up to abcmax, and checks the alternating family
// (2^m l, 2^m + 1, ...) in characteristic two.
SweepReport verify_syzgap_vs_oracle(int abcmax, const std::vector<std::uint64_t>& primes);

// Runs the conjecture monitors and folds counterexamples into a report.
SweepReport verify_conjectures(int nmin, int nmax, int dmax);

// Strong-property definition vs the extension-family route, and weak-property
// rank oracle vs the syzygy-degree-bound route.
SweepReport verify_cross_routes(int nmax, int dmax,
                                const std::vector<std::uint64_t>& characteristics);

}  // namespace lefschetz

#endif
