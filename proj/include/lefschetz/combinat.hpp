#ifndef LEFSCHETZ_COMBINAT_HPP
#define LEFSCHETZ_COMBINAT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "lefschetz/bigint.hpp"

namespace lefschetz {

// A weak composition of k into n parts, componentwise bounded when produced
// by weak_compositions.
using WeakComposition = std::vector<int>;

// All compositions of k into bounds.size() parts with parts[i] <= bounds[i],
// in lexicographically descending order (the shared matrix layout).
std::vector<WeakComposition> weak_compositions(const std::vector<int>& bounds, int k);

// #C(n, bounds, k), computed by convolution (no enumeration); 0 for k < 0.
BigInt composition_count(const std::vector<int>& bounds, int k);

// delta_i = #C(n, bounds, i) - #C(n, bounds, i-1).
BigInt composition_count_delta(const std::vector<int>& bounds, int i);

// Indices of set bits; defined for positive n only.
std::vector<int> bit_positions(std::uint64_t n);

bool bits_disjoint(std::uint64_t a, std::uint64_t b);

// Number of carries when adding a and b in base p.  Equals the p-adic
// valuation of binom(a+b, a).
int carries_base_p(std::uint64_t a, std::uint64_t b, std::uint64_t p);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// The magnitude of a nonzero integer as {prime -> exponent}; the empty map is
// 1.  Every factorial-like quantity in this library lives here so that values
// such as the associated determinants never need to be materialised.
class PrimeFactorization {
  public:
    PrimeFactorization() = default;

    static PrimeFactorization one() { return PrimeFactorization(); }

    int exponent_of(std::uint64_t p) const;
    bool contains(std::uint64_t p) const { return exponent_of(p) > 0; }
    bool is_one() const { return factors_.empty(); }

    const std::map<std::uint64_t, int>& factors() const { return factors_; }
    std::vector<std::uint64_t> primes() const;

    void multiply_by(const PrimeFactorization& o);
    // Throws MathError if the quotient would not be an integer.
    void divide_by(const PrimeFactorization& o);
    void raise_to(int e);  // e >= 0

    BigInt to_integer() const;
    std::string to_string() const;  // e.g. "2^2 * 5"

    // Adds e to the exponent of p; e may be negative while building, but the
    // finished value must have all exponents nonnegative.
    void add_exponent(std::uint64_t p, int e);
    bool all_nonnegative() const;

    bool operator==(const PrimeFactorization& o) const { return factors_ == o.factors_; }

  private:
    std::map<std::uint64_t, int> factors_;
};

// Factorization of N! via Legendre's formula v_p(N!) = sum_j floor(N/p^j).
PrimeFactorization factorial_factorization(std::uint64_t n);

// Factorization of (sum parts)! / prod parts[i]!.
PrimeFactorization multinomial_factorization(const std::vector<int>& parts);

// Factorization of x (x+1) ... (x+m-1) = (x+m-1)!/(x-1)!; x >= 1.
PrimeFactorization rising_factorial_factorization(std::uint64_t x, std::uint64_t m);

// Trial-division factorization of a small positive integer (test oracle and
// witness formatting; not used on factorial-scale values).
PrimeFactorization factor_integer(const BigInt& value);

BigInt binomial(std::uint64_t n, std::uint64_t k);

// True iff the multinomial coefficient of `parts` is odd, decided by pairwise
// disjointness of the summands' bit positions.
bool is_multinomial_odd(const std::vector<int>& parts);

// Checks that of the two multinomial coefficients attached to a dominant
// tuple a0 >= a1 >= ... >= an >= 1 with a0 >= a1 + ... + an (n >= 2), at
// least one is even: the coefficient of (a0, ..., an) itself and the one of
// (a0 + 1 - sum(rest), a1, ..., an).  Returns true when the dichotomy holds;
// out parameters report which side is even.
bool one_or_other_even(const std::vector<int>& parts, bool* first_even = nullptr,
                       bool* second_even = nullptr);

}  // namespace lefschetz

#endif
