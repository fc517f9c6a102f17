#include <doctest.h>

#include "lefschetz/oracle.hpp"
#include "lefschetz/syzgap.hpp"
#include "lefschetz/verify.hpp"

using namespace lefschetz;

TEST_CASE("manhattan distance in exact rationals") {
    std::array<BigRat, 3> x{BigRat(1), BigRat(1), BigRat(1)};
    CHECK(manhattan(x, {1, 1, 1}) == 0);

    std::array<BigRat, 3> h{BigRat(1, 2), BigRat(1, 2), BigRat(1, 2)};
    CHECK(manhattan(h, {0, 0, 1}) == BigRat(3, 2));

    std::array<BigRat, 3> m{BigRat(3), BigRat(5, 4), BigRat(3)};
    CHECK(manhattan(m, {3, 1, 3}) == BigRat(1, 4));
}

TEST_CASE("scaled triples normalize and flag the triangle condition") {
    const ScaledTriple t = ScaledTriple::of(13, 5, 12, 2);
    CHECK(t.entries[0] == 5);
    CHECK(t.entries[2] == 13);
    CHECK(t.semistable);
    CHECK_FALSE(ScaledTriple::of(5, 12, 17, 2).semistable);
    CHECK_THROWS_AS(ScaledTriple::of(1, 1, 1, 6), MathError);
}

TEST_CASE("positivity of the limiting gap on pinned triples") {
    // the alternating-family member with m = 2, l = 3, k = 1
    const HanResult hit = han_delta_positive(5, 12, 13, 2);
    CHECK(hit.positive);
    REQUIRE(hit.witness.has_value());
    CHECK(hit.witness->s == -2);
    // ascending coordinates (5,12,13)/4 = (5/4, 3, 13/4) sit next to (1,3,3)
    CHECK(hit.witness->point == std::array<long long, 3>{1, 3, 3});

    // the k = 0 endpoint where the weak property holds
    CHECK_FALSE(han_delta_positive(5, 12, 15, 2).positive);

    CHECK_FALSE(han_delta_positive(2, 2, 2, 5).positive);

    CHECK_THROWS_AS((void)han_delta_positive(2, 2, 5, 3), MathError);
}

TEST_CASE("witness scale shifts by one under scaling the triple by p") {
    // p^s (pa, pb, pc) = p^{s+1} (a, b, c): witnesses of the scaled triple at
    // depth s <= -2 are witnesses of the original at s + 1, and conversely.
    // Depth -1 of the scaled triple is new (the original integer point), so
    // positivity itself is only monotone, not preserved.
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (std::array<long long, 3> t :
             {std::array<long long, 3>{5, 12, 13}, {3, 4, 5}, {2, 3, 4}, {4, 4, 6}}) {
            const HanResult base = han_delta_positive(t[0], t[1], t[2], p);
            const HanResult scaled = han_delta_positive(
                t[0] * static_cast<long long>(p), t[1] * static_cast<long long>(p),
                t[2] * static_cast<long long>(p), p);
            if (base.positive) {
                CHECK(scaled.positive);
                if (scaled.witness->s <= -2) {
                    CHECK(scaled.witness->s == base.witness->s - 1);
                    CHECK(scaled.witness->point == base.witness->point);
                }
            } else if (scaled.positive) {
                // only the fresh top scale may account for it
                CHECK(scaled.witness->s == -1);
                CHECK((t[0] + t[1] + t[2]) % 2 == 1);
            }
        }
    }
}

TEST_CASE("three-generator weak property via the gap, pinned examples") {
    CHECK(wlp_three_gen_via_syzgap(5, 12, 13, 2).is_fails());
    CHECK(wlp_three_gen_via_syzgap(3, 3, 3, 7).is_holds());
    CHECK(wlp_three_gen_via_syzgap(5, 5, 5, 7).is_holds());
    CHECK(wlp_three_gen_via_syzgap(2, 2, 3, 2).is_holds());
    CHECK_THROWS_AS((void)wlp_three_gen_via_syzgap(2, 2, 5, 3), MathError);
}

TEST_CASE("gap criterion agrees with the rank oracle on all semistable triples") {
    const SweepReport report = verify_syzgap_vs_oracle(8, {2, 3, 5, 7});
    CHECK(report.checked > 250);
    for (const auto& d : report.disagreements) {
        CAPTURE(d.description);
        CHECK(false);
    }
}

TEST_CASE("two-variable strong property via the family") {
    CHECK(slp_two_var(6, 3, Characteristic::of(2)).is_holds());
    CHECK(slp_two_var(5, 2, Characteristic::of(2)).is_holds());
    CHECK(slp_two_var(4, 4, Characteristic::of(5)).is_fails());
    CHECK(slp_two_var(4, 4, Characteristic::of(3)).is_holds());
    CHECK(slp_two_var(9, 9, Characteristic::zero()).is_holds());

    // agreement with the definition across the small window
    for (int a = 2; a <= 7; ++a) {
        for (int b = 2; b <= a; ++b) {
            const DegreeTuple d = DegreeTuple::normalize({a, b});
            for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(a + b))) {
                const Characteristic ch = Characteristic::of(p);
                CHECK(slp_two_var(a, b, ch).status == has_slp_oracle(d, ch).status);
            }
        }
    }
}

TEST_CASE("equal-powers two-variable criterion") {
    CHECK(slp_dd_criterion(3, Characteristic::of(3)).is_fails());
    CHECK(slp_dd_criterion(3, Characteristic::of(5)).is_holds());
    CHECK(slp_dd_criterion(2, Characteristic::of(3)).is_holds());
    CHECK(slp_dd_criterion(2, Characteristic::zero()).is_holds());

    for (int d = 2; d <= 8; ++d) {
        const DegreeTuple t = DegreeTuple::normalize({d, d});
        for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(2 * d - 1))) {
            const Characteristic ch = Characteristic::of(p);
            CHECK(slp_dd_criterion(d, ch).status == has_slp_oracle(t, ch).status);
        }
    }
}
