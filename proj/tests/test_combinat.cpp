#include <doctest.h>

#include <numeric>

#include "lefschetz/combinat.hpp"

using namespace lefschetz;

TEST_CASE("compositions: bounded enumeration in descending lex order") {
    CHECK(weak_compositions({2, 2}, 2) ==
          std::vector<WeakComposition>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(weak_compositions({3, 3, 0}, 1) ==
          std::vector<WeakComposition>{{1, 0, 0}, {0, 1, 0}});
    CHECK(weak_compositions({5}, 6).empty());
    CHECK(weak_compositions({3, 3}, 0) == std::vector<WeakComposition>{{0, 0}});
}

TEST_CASE("compositions: counts match enumeration and deltas") {
    const std::vector<std::vector<int>> bounds_list = {
        {1, 1}, {3, 3, 0}, {2, 4, 1}, {5, 5, 5}, {3, 3, 3, 3}};
    for (const auto& bounds : bounds_list) {
        const int total = std::accumulate(bounds.begin(), bounds.end(), 0);
        for (int k = -1; k <= total + 1; ++k) {
            CHECK(composition_count(bounds, k) == BigInt(weak_compositions(bounds, k).size()));
            // symmetry #C(k) = #C(total - k)
            if (k >= 0 && k <= total)
                CHECK(composition_count(bounds, k) == composition_count(bounds, total - k));
        }
        CHECK(composition_count_delta(bounds, 0) == 1);
    }
    CHECK(composition_count_delta({1, 1}, 1) == 1);
    CHECK(composition_count_delta({1, 1}, 2) == -1);
    CHECK(composition_count_delta({3, 3, 0}, 0) == 1);
}

TEST_CASE("bit positions") {
    CHECK(bit_positions(42) == std::vector<int>{1, 3, 5});
    for (int m = 0; m <= 8; ++m)
        CHECK(bit_positions(1ull << m) == std::vector<int>{m});
    CHECK(bit_positions(1) == std::vector<int>{0});
    CHECK_THROWS_AS((void)bit_positions(0), MathError);
}

TEST_CASE("kummer: carries equal the p-adic valuation of the binomial") {
    CHECK(carries_base_p(3, 6, 3) == 1);  // v_3(binom(9,3)) = v_3(84)
    CHECK(carries_base_p(0, 12345, 7) == 0);
    CHECK(carries_base_p(1, 1, 2) == 1);
    CHECK_THROWS_AS((void)carries_base_p(1, 1, 4), MathError);

    for (std::uint64_t n = 0; n <= 64; ++n) {
        for (std::uint64_t k = 0; k <= n; ++k) {
            const auto f = multinomial_factorization(
                {static_cast<int>(k), static_cast<int>(n - k)});
            for (std::uint64_t p : primes_up_to(31))
                CHECK(carries_base_p(k, n - k, p) == f.exponent_of(p));
        }
    }
}

TEST_CASE("factorizations: multinomials") {
    CHECK(multinomial_factorization({1, 1, 1}).to_string() == "2 * 3");
    CHECK(multinomial_factorization({4, 4, 4}).to_integer() == 34650);
    PrimeFactorization expected;
    expected.add_exponent(2, 1);
    expected.add_exponent(3, 2);
    expected.add_exponent(5, 2);
    expected.add_exponent(7, 1);
    expected.add_exponent(11, 1);
    CHECK(multinomial_factorization({4, 4, 4}) == expected);
    CHECK(multinomial_factorization({7, 0}).is_one());
}

TEST_CASE("factorizations: rising factorials") {
    CHECK(rising_factorial_factorization(1, 4).to_integer() == 24);
    CHECK(rising_factorial_factorization(3, 1).to_string() == "3");
    CHECK(rising_factorial_factorization(2, 3).to_integer() == 24);
    CHECK(rising_factorial_factorization(5, 0).is_one());
    // agrees with the direct product
    for (std::uint64_t x = 1; x <= 12; ++x)
        for (std::uint64_t m = 0; m <= 8; ++m) {
            BigInt direct = 1;
            for (std::uint64_t i = 0; i < m; ++i) direct *= x + i;
            CHECK(rising_factorial_factorization(x, m).to_integer() == direct);
        }
}

TEST_CASE("factorization arithmetic and trial division agree") {
    for (int v = 2; v <= 400; ++v) {
        const auto f = factor_integer(v);
        CHECK(f.to_integer() == v);
        for (const auto& [p, e] : f.factors()) CHECK(is_prime_u64(p));
    }
    auto a = factor_integer(360);
    a.divide_by(factor_integer(45));
    CHECK(a.to_integer() == 8);
    CHECK_THROWS_AS(factor_integer(8).divide_by(factor_integer(3)), MathError);
}

TEST_CASE("odd multinomials via disjoint bits") {
    CHECK(is_multinomial_odd({2, 1}));
    CHECK_FALSE(is_multinomial_odd({4, 4, 4}));
    CHECK(is_multinomial_odd({5, 2}));  // binom(7,2) = 21

    // equivalence with the 2-adic valuation, pairs up to 2^16
    for (int n = 0; n <= (1 << 16); n += 257) {
        for (int k = 0; k <= n; k += 101) {
            const bool bits = bits_disjoint(static_cast<std::uint64_t>(k),
                                            static_cast<std::uint64_t>(n - k));
            CHECK(is_multinomial_odd({k, n - k}) == bits);
        }
    }

    // exhaustive equivalence with the factorization route, up to four parts
    // of size <= 16
    for (int a = 0; a <= 16; ++a)
        for (int b = 0; b <= 16; ++b)
            for (int c = 0; c <= 16; ++c)
                CHECK(is_multinomial_odd({a, b, c}) ==
                      !multinomial_factorization({a, b, c}).contains(2));
    for (int a = 0; a <= 16; a += 2)
        for (int b = 0; b <= 16; ++b)
            for (int c = 0; c <= 16; ++c)
                for (int d = 0; d <= 16; d += 3)
                    CHECK(is_multinomial_odd({a, b, c, d}) ==
                          !multinomial_factorization({a, b, c, d}).contains(2));
}

TEST_CASE("double-odd binomial pairs happen exactly at (2^m l, 2^m + 1)") {
    for (int a = 2; a <= 64; ++a) {
        for (int b = 2; b <= a; ++b) {
            const bool both_odd = is_multinomial_odd({b - 1, a - 1}) &&
                                  is_multinomial_odd({b - 1, a - b + 1});
            bool shape = false;
            for (int m = 0; (1 << m) <= b; ++m) {
                if (b != (1 << m) + 1) continue;
                if (a % (1 << m) != 0) continue;
                const int l = a / (1 << m);
                if (l % 2 == 1 && l >= 3) shape = true;
            }
            CHECK(both_odd == shape);
        }
    }
}

TEST_CASE("one or the other multinomial is even") {
    bool first = false, second = false;
    CHECK(one_or_other_even({4, 2, 2}, &first, &second));
    CHECK(one_or_other_even({2, 1, 1}));
    CHECK(one_or_other_even({8, 1, 1}));
    CHECK_THROWS_AS((void)one_or_other_even({2, 1}), MathError);
    CHECK_THROWS_AS((void)one_or_other_even({2, 2, 2}), MathError);  // 2 < 2+2

    // exhaustive over the dominated range
    for (int a0 = 2; a0 <= 24; ++a0)
        for (int a1 = 1; a1 <= 8; ++a1)
            for (int a2 = 1; a2 <= a1; ++a2)
                if (a0 >= a1 + a2 && a0 >= a1)
                    CHECK(one_or_other_even({a0, a1, a2}));
}

TEST_CASE("binomial helper") {
    CHECK(binomial(9, 3) == 84);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
}
