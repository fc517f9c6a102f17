#include "lefschetz/detformula.hpp"

#include "lefschetz/oracle.hpp"

namespace lefschetz {

namespace {

void check_preconditions(const DegreeTuple& d) {
    const int t = d.socle_degree();
    LFS_REQUIRE(t % 2 == 1, "socle degree is even");
    LFS_REQUIRE(d[0] <= (t + 1) / 2, "top degree exceeds the peak");
    LFS_REQUIRE(d.n() >= 2, "need at least three generators");
}

PrimeFactorization composition_factorial(const WeakComposition& c) {
    PrimeFactorization f;
    for (int v : c) f.multiply_by(factorial_factorization(static_cast<std::uint64_t>(v)));
    return f;
}

}  // namespace

DeterminantReport proctor_determinant(const DegreeTuple& d) {
    check_preconditions(d);
    const int t = d.socle_degree();
    const int s = t / 2;
    const int d0 = d[0];

    std::vector<int> bounds;  // d_i - 1 for the trailing entries
    for (std::size_t i = 1; i < d.degrees().size(); ++i)
        bounds.push_back(d.degrees()[i] - 1);

    // Signed exponents while assembling; the result must come out nonnegative.
    PrimeFactorization acc;
    for (const auto& a : weak_compositions(bounds, s + 1 - d0))
        acc.multiply_by(composition_factorial(a));
    for (const auto& b : weak_compositions(bounds, s + 1)) {
        const PrimeFactorization denom = composition_factorial(b);
        for (const auto& [p, e] : denom.factors()) acc.add_exponent(p, -e);
    }

    for (int i = 0; i <= s + 1 - d0; ++i) {
        const BigInt delta = composition_count_delta(bounds, s + 1 - d0 - i);
        LFS_REQUIRE(delta >= INT32_MIN && delta <= INT32_MAX, "delta out of range");
        const int e = static_cast<int>(delta);
        if (e == 0) continue;
        const auto rf = rising_factorial_factorization(static_cast<std::uint64_t>(i + 1),
                                                       static_cast<std::uint64_t>(d0));
        for (const auto& [p, ex] : rf.factors()) acc.add_exponent(p, ex * e);
    }

    LFS_REQUIRE(acc.all_nonnegative(),
                "determinant formula left a negative exponent");

    DeterminantReport report(d);
    report.magnitude = acc;
    for (std::uint64_t p : acc.primes()) report.bad_primes.insert(p);
    report.square_size = composition_count(bounds, s + 1);
    return report;
}

std::set<std::uint64_t> bad_primes(const DegreeTuple& d) {
    return proctor_determinant(d).bad_primes;
}

bool is_large_top_case(const DegreeTuple& d) {
    if (d.n() < 2) return false;
    int rest = 0;
    for (std::size_t i = 1; i < d.degrees().size(); ++i) rest += d.degrees()[i];
    return d[0] == rest - d.n();
}

PrimeFactorization large_top_multinomial(const DegreeTuple& d) {
    LFS_REQUIRE(is_large_top_case(d), "top degree is not sum of the rest minus n");
    std::vector<int> parts;
    for (std::size_t i = 1; i < d.degrees().size(); ++i)
        parts.push_back(d.degrees()[i] - 1);
    return multinomial_factorization(parts);
}

Verdict large_top_case(const DegreeTuple& d, Characteristic ch) {
    const auto f = large_top_multinomial(d);
    if (ch.is_zero() || !f.contains(ch.value()))
        return Verdict::holds("theorem:one-entry-multinomial");
    return Verdict::fails("theorem:one-entry-multinomial",
                          PrimeWitness{ch.value(), f.exponent_of(ch.value())});
}

BigInt nilp_determinant_bruteforce(const DegreeTuple& d, std::size_t dimension_guard) {
    check_preconditions(d);
    const int t = d.socle_degree();
    const int s = t / 2;

    // The same map realised as a multiplication matrix over the integers:
    // x ell^{d_0} from degree s+1-d_0 to s+1 in the quotient of K[x_1..x_n]
    // by the trailing pure powers.
    std::vector<int> trailing(d.degrees().begin() + 1, d.degrees().end());
    GradedMatrix m = mult_map_matrix(trailing, Characteristic::zero(), s + 1 - d[0], d[0]);
    LFS_REQUIRE(m.n_rows() == m.n_cols(), "middle matrix is not square");
    LFS_REQUIRE(m.n_rows() <= dimension_guard, "matrix dimension guard exceeded");

    std::vector<std::vector<BigInt>> full(m.n_rows(), std::vector<BigInt>(m.n_cols()));
    for (std::size_t r = 0; r < m.n_rows(); ++r)
        for (std::size_t c = 0; c < m.n_cols(); ++c) full[r][c] = m.at(r, c);
    return determinant_integer(std::move(full));
}

}  // namespace lefschetz
