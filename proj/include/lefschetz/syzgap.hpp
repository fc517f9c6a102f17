#ifndef LEFSCHETZ_SYZGAP_HPP
#define LEFSCHETZ_SYZGAP_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "lefschetz/core.hpp"

namespace lefschetz {

// A generator triple scaled into sorted order, with its context prime.  The
// semistable flag records the strict triangle condition c < a + b, which is
// exactly stability of the associated syzygy bundle for pure-power triples.
struct ScaledTriple {
    std::array<BigRat, 3> entries;  // ascending
    std::uint64_t prime = 2;
    bool semistable = false;

    static ScaledTriple of(long long a, long long b, long long c, std::uint64_t p);
};

// Exact taxicab distance.
BigRat manhattan(const std::array<BigRat, 3>& x, const std::array<long long, 3>& y);

// A scaled point p^s * (a,b,c) lying within taxicab distance < 1 of an
// integer point with odd coordinate sum.
struct GapCertificate {
    int s = -1;  // negative scale exponent
    std::array<long long, 3> point{};
    BigRat distance;
};

struct HanResult {
    bool positive = false;
    std::optional<GapCertificate> witness;
};

// Decides positivity of the limiting syzygy-gap function: true iff some
// negative integer s and odd-sum integer point (u,v,w) satisfy
// mu(p^s (a,b,c), (u,v,w)) < 1.  Requires, after ascending sort,
// a <= b <= c < a+b.
HanResult han_delta_positive(long long a, long long b, long long c, std::uint64_t p);

// Same search with the sharpened threshold mu < 1 - p^s, which certifies a
// gap value strictly above one.  This is the failure test that remains valid
// when a+b+c is odd (where the gap has odd parity and the value 1 is
// harmless).
HanResult han_gap_exceeds_one(long long a, long long b, long long c, std::uint64_t p);

// Weak Lefschetz for K[x,y,z]/(x^a, y^b, z^c) by the syzygy-gap criterion.
// Requires each exponent strictly below the sum of the other two; callers
// fall back to the large-top-degree argument or the oracle otherwise.
Verdict wlp_three_gen_via_syzgap(long long a, long long b, long long c, std::uint64_t p);

// Strong Lefschetz for K[x,y]/(x^a, y^b), a >= b >= 2, through the family of
// three-generator algebras (a, b, a+b-2-2k) for 0 <= k <= b-2; the endpoint
// members reduce to single binomial coefficients.
Verdict slp_two_var(int a, int b, Characteristic ch);

// Strong Lefschetz for K[x,y]/(x^d, y^d): holds iff p = 0 or 2d-2 < p^s
// where s is the largest integer with p^{s-1} dividing (2d-1)(2d+1).
Verdict slp_dd_criterion(int d, Characteristic ch);

}  // namespace lefschetz

#endif
