#include <doctest.h>

#include "lefschetz/detformula.hpp"
#include "lefschetz/oracle.hpp"
#include "lefschetz/verify.hpp"

using namespace lefschetz;

TEST_CASE("pinned determinants from the quadruple remarks") {
    const DeterminantReport a = proctor_determinant(DegreeTuple::normalize({4, 4, 4, 1}));
    CHECK(a.magnitude.to_string() == "2^2 * 5");
    CHECK(a.magnitude.to_integer() == 20);
    CHECK(a.bad_primes == std::set<std::uint64_t>{2, 5});
    CHECK(a.square_size == 2);

    const DeterminantReport b = proctor_determinant(DegreeTuple::normalize({5, 5, 5, 2}));
    CHECK(b.magnitude.to_integer() == 43750);  // 2 * 5^5 * 7
    CHECK(b.magnitude.exponent_of(5) == 5);
    CHECK(b.bad_primes == std::set<std::uint64_t>{2, 5, 7});
    CHECK(b.square_size == 5);
}

TEST_CASE("preconditions are reported by name") {
    CHECK_THROWS_WITH_AS((void)proctor_determinant(DegreeTuple::normalize({3, 2, 2})),
                         "socle degree is even", MathError);
    CHECK_THROWS_WITH_AS((void)proctor_determinant(DegreeTuple::normalize({8, 2, 2})),
                         "top degree exceeds the peak", MathError);
}

TEST_CASE("signed brute-force determinants match the reported magnitudes") {
    CHECK(abs(nilp_determinant_bruteforce(DegreeTuple::normalize({4, 4, 4, 1}))) == 20);
    CHECK(abs(nilp_determinant_bruteforce(DegreeTuple::normalize({5, 5, 5, 2}))) == 43750);

    const DegreeTuple d222 = DegreeTuple::normalize({2, 2, 2});
    CHECK(abs(nilp_determinant_bruteforce(d222)) ==
          proctor_determinant(d222).magnitude.to_integer());
}

TEST_CASE("one-entry case: the multinomial primes are the bad primes") {
    const DegreeTuple d = DegreeTuple::normalize({3, 2, 2, 2});
    REQUIRE(is_large_top_case(d));
    CHECK(large_top_multinomial(d).to_integer() == 6);
    CHECK(large_top_case(d, Characteristic::of(2)).is_fails());
    CHECK(large_top_case(d, Characteristic::of(3)).is_fails());
    CHECK(large_top_case(d, Characteristic::of(5)).is_holds());
    CHECK(large_top_case(d, Characteristic::zero()).is_holds());

    const DegreeTuple e = DegreeTuple::normalize({6, 3, 3, 3});
    CHECK(large_top_multinomial(e).to_integer() == 90);
    for (std::uint64_t p : {2ull, 3ull, 5ull})
        CHECK(large_top_case(e, Characteristic::of(p)).is_fails());
    CHECK(large_top_case(e, Characteristic::of(7)).is_holds());

    const DegreeTuple f = DegreeTuple::normalize({12, 5, 5, 5});
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull})
        CHECK(large_top_case(f, Characteristic::of(p)).is_fails());
    CHECK(large_top_case(f, Characteristic::of(13)).is_holds());

    CHECK_FALSE(is_large_top_case(DegreeTuple::normalize({4, 2, 2})));
    CHECK_THROWS_AS((void)large_top_multinomial(DegreeTuple::normalize({4, 2, 2})),
                    MathError);
}

TEST_CASE("no bad prime ever exceeds ceil((t+1)/2)") {
    // includes the five-variable tuple (2,2,2,2,2) with t = 5
    const DeterminantReport r = proctor_determinant(DegreeTuple::normalize({2, 2, 2, 2, 2}));
    for (std::uint64_t p : r.bad_primes) CHECK(p <= 3);

    for (int n = 2; n <= 3; ++n) {
        for (const auto& raw : enumerate_tuples(n, 1, 6)) {
            if (raw[0] < 2) continue;
            const DegreeTuple d = DegreeTuple::normalize(raw);
            const int t = d.socle_degree();
            if (t % 2 == 0 || d[0] > (t + 1) / 2) continue;
            for (std::uint64_t p : bad_primes(d))
                CHECK(2 * p <= static_cast<std::uint64_t>(t) + 2);
        }
    }
}

TEST_CASE("formula vs brute force vs oracle across a small family") {
    const SweepReport report = verify_det_vs_oracle(3, 5);
    CHECK(report.checked > 100);
    for (const auto& d : report.disagreements) {
        CAPTURE(d.description);
        CHECK(false);
    }
}

TEST_CASE("dimension guard") {
    CHECK_THROWS_AS(
        (void)nilp_determinant_bruteforce(DegreeTuple::normalize({5, 5, 5, 2}), 3),
        MathError);
}
