#ifndef LEFSCHETZ_DETFORMULA_HPP
#define LEFSCHETZ_DETFORMULA_HPP

#include <set>

#include "lefschetz/combinat.hpp"
#include "lefschetz/core.hpp"

namespace lefschetz {

// |det M_d| as a prime factorization, where M_d is the square matrix of
// multiplication by (x_1+...+x_n)^{d_0} between the two middle graded pieces
// of the quotient by the remaining pure powers.  Its prime divisors are
// exactly the characteristics in which the weak Lefschetz property fails
// (odd socle degree, d_0 at most the peak).
struct DeterminantReport {
    explicit DeterminantReport(DegreeTuple t) : tuple(std::move(t)) {}

    DegreeTuple tuple;
    PrimeFactorization magnitude;
    std::set<std::uint64_t> bad_primes;
    BigInt square_size = 0;
};

// Requires: socle degree odd and d_0 <= ceil(t/2).  Entries equal to 1 are
// accepted (validated against the brute-force determinant in the test suite).
// Throws MathError naming the violated hypothesis otherwise, or if the
// product formula ever leaves a negative exponent.
DeterminantReport proctor_determinant(const DegreeTuple& d);

std::set<std::uint64_t> bad_primes(const DegreeTuple& d);

// The one-entry case d_0 = d_1 + ... + d_n - n (n >= 2): the matrix is 1x1
// with entry the multinomial of (d_1 - 1, ..., d_n - 1), so the bad primes
// are its prime divisors.
PrimeFactorization large_top_multinomial(const DegreeTuple& d);
bool is_large_top_case(const DegreeTuple& d);
Verdict large_top_case(const DegreeTuple& d, Characteristic ch);

// Exact signed integer determinant of the same matrix, the independent
// cross-check for the product formula.  Guarded against absurd dimensions.
BigInt nilp_determinant_bruteforce(const DegreeTuple& d,
                                   std::size_t dimension_guard = 2000);

}  // namespace lefschetz

#endif
