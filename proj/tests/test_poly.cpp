#include <doctest.h>

#include "lefschetz/poly.hpp"

using namespace lefschetz;

namespace {

template <class Field>
Poly<Field> ell(Field k, int nvars) {
    return Poly<Field>::linear_sum(k, nvars);
}

}  // namespace

TEST_CASE("arithmetic basics over F_p and the rationals") {
    PrimeField f2(2);
    auto sq = ell(f2, 2).pow(2);
    auto expect = Poly<PrimeField>::variable(f2, 2, 0, 2) +
                  Poly<PrimeField>::variable(f2, 2, 1, 2);
    CHECK(sq == expect);  // (x+y)^2 = x^2 + y^2 over F_2

    PrimeField f3(3);
    auto sq3 = ell(f3, 3).pow(2);
    CHECK(sq3.terms().size() == 6);
    Exponents xy{1, 1, 0};
    CHECK(sq3.terms().at(xy) == 2);

    RationalField q;
    CHECK(ell(q, 3).pow(0) == Poly<RationalField>::one(q, 3));
    CHECK((ell(q, 2) - ell(q, 2)).is_zero());
}

TEST_CASE("field mismatch is rejected") {
    PrimeField f2(2), f3(3);
    auto a = ell(f2, 2);
    auto b = ell(f3, 2);
    CHECK_THROWS_AS((void)(a + b), MathError);
    CHECK_THROWS_AS((void)PrimeField(4), MathError);
}

TEST_CASE("freshman's dream fast path equals the generic path") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        PrimeField k(p);
        for (int nvars = 2; nvars <= 5; ++nvars) {
            const auto base = ell(k, nvars);
            BigInt pm = 1;
            for (int m = 0; m <= 3; ++m, pm *= p) {
                const int e = static_cast<int>(pm);
                // the power is the sum of variable powers
                Poly<PrimeField> sum(k, nvars);
                for (int v = 0; v < nvars; ++v)
                    sum = sum + Poly<PrimeField>::variable(k, nvars, v, e);
                CHECK(base.pow(e) == sum);
                // against the shortcut-free route, where the expansion stays
                // small enough to materialise
                if ((nvars == 3 && e <= 125) || (nvars == 4 && e <= 64) ||
                    (nvars != 3 && nvars != 4 && e <= 32))
                    CHECK(base.pow(e) == base.pow_generic(e));
            }
            // non-pure powers through the mixed route
            CHECK(base.pow(static_cast<int>(2 * p)) == base.pow_generic(static_cast<int>(2 * p)));
        }
    }
}

TEST_CASE("make_f matches its defining identity") {
    RationalField q;
    CHECK(make_f(q, 3, 1) == Poly<RationalField>::one(q, 3));
    // k = 2: y - z
    auto f2 = make_f(q, 3, 2);
    auto y = Poly<RationalField>::variable(q, 3, 1);
    auto z = Poly<RationalField>::variable(q, 3, 2);
    CHECK(f2 == y - z);
    // k = 3: y^2 - yz + z^2
    auto f3 = make_f(q, 3, 3);
    CHECK(f3 == y * y - y * z + z * z);
    CHECK_THROWS_AS((void)make_f(q, 3, 0), MathError);

    // (y+z) f_k = y^k - (-z)^k, rationals and small prime fields, k <= 20
    for (int k = 1; k <= 20; ++k) {
        auto lhs = (y + z) * make_f(q, 3, k);
        auto rhs = y.pow(k) - (-z).pow(k);
        CHECK(lhs == rhs);
    }
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
        PrimeField kp(p);
        auto yp = Poly<PrimeField>::variable(kp, 3, 1);
        auto zp = Poly<PrimeField>::variable(kp, 3, 2);
        for (int k = 1; k <= 20; ++k)
            CHECK((yp + zp) * make_f(kp, 3, k) == yp.pow(k) - (-zp).pow(k));
    }
}

TEST_CASE("make_g matches its defining identity") {
    RationalField q;
    auto x = Poly<RationalField>::variable(q, 3, 0);
    auto y = Poly<RationalField>::variable(q, 3, 1);
    auto z = Poly<RationalField>::variable(q, 3, 2);

    CHECK(make_g(q, 3, 1) == -Poly<RationalField>::one(q, 3));
    CHECK(make_g(q, 3, 2) == -(x + x + y + z));

    for (int k = 1; k <= 20; ++k) {
        auto lhs = (y + z) * make_g(q, 3, k);
        auto rhs = x.pow(k) - ell(q, 3).pow(k);
        CHECK(lhs == rhs);
    }
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
        PrimeField kp(p);
        auto xp = Poly<PrimeField>::variable(kp, 3, 0);
        auto yp = Poly<PrimeField>::variable(kp, 3, 1);
        auto zp = Poly<PrimeField>::variable(kp, 3, 2);
        for (int k = 1; k <= 20; ++k)
            CHECK((yp + zp) * make_g(kp, 3, k) == xp.pow(k) - ell(kp, 3).pow(k));
    }
    // g_3 over F_3 collapses to -(y+z)^2
    PrimeField f3(3);
    auto y3 = Poly<PrimeField>::variable(f3, 3, 1);
    auto z3 = Poly<PrimeField>::variable(f3, 3, 2);
    CHECK(make_g(f3, 3, 3) == -((y3 + z3) * (y3 + z3)));
}

namespace {

// The standard non-Koszul syzygy of (x^k, y^{k+j}, z^{k+j}, ell^k):
// (-f_{k+j}, g_k, (-1)^{k+j+1} g_k, f_{k+j}).
template <class Field>
bool standard_syzygy_verifies(Field field, int k, int j) {
    auto x = Poly<Field>::variable(field, 3, 0);
    auto y = Poly<Field>::variable(field, 3, 1);
    auto z = Poly<Field>::variable(field, 3, 2);
    std::vector<Poly<Field>> gens{x.pow(k), y.pow(k + j), z.pow(k + j),
                                  ell(field, 3).pow(k)};
    auto f = make_f(field, 3, k + j);
    auto g = make_g(field, 3, k);
    auto g_signed = (k + j + 1) % 2 == 0 ? g : -g;  // (-1)^{k+j+1} g
    std::vector<Poly<Field>> coeffs{-f, g, g_signed, f};
    return verify_syzygy(gens, coeffs);
}

}  // namespace

TEST_CASE("the standard syzygy verifies over every small field") {
    RationalField q;
    for (int k = 1; k <= 8; ++k)
        for (int j = 0; j <= 4; ++j) CHECK(standard_syzygy_verifies(q, k, j));
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        PrimeField kp(p);
        for (int k = 1; k <= 8; ++k)
            for (int j = 0; j <= 4; ++j) CHECK(standard_syzygy_verifies(kp, k, j));
    }

    // and its lead coefficient is a non-Koszul witness against the pure powers
    RationalField qq;
    auto f2 = make_f(qq, 3, 2);
    CHECK(is_nonkoszul_witness(f2, {2, 2, 2}));
}

TEST_CASE("verify_syzygy rejects non-relations and mismatches") {
    PrimeField f5(5);
    auto x = Poly<PrimeField>::variable(f5, 3, 0);
    auto y = Poly<PrimeField>::variable(f5, 3, 1);
    // Koszul pair (y^b, -x^a) against (x^a, y^b)
    std::vector<Poly<PrimeField>> gens{x.pow(3), y.pow(4)};
    std::vector<Poly<PrimeField>> coeffs{y.pow(4), -x.pow(3)};
    CHECK(verify_syzygy(gens, coeffs));

    std::vector<Poly<PrimeField>> bad{Poly<PrimeField>::one(f5, 3),
                                      Poly<PrimeField>::zero(f5, 3)};
    CHECK_FALSE(verify_syzygy(gens, bad));
    std::vector<Poly<PrimeField>> short_list{x};
    CHECK_THROWS_AS((void)verify_syzygy(gens, short_list), MathError);
}

TEST_CASE("pure-power reduction and the witness test") {
    PrimeField f2(2);
    auto y = Poly<PrimeField>::variable(f2, 2, 0);
    auto z = Poly<PrimeField>::variable(f2, 2, 1);
    CHECK(is_nonkoszul_witness(y * z, {5, 5}));
    CHECK_FALSE(is_nonkoszul_witness(y.pow(5), {5, 5}));
    CHECK_FALSE(is_nonkoszul_witness(y.pow(5) + y.pow(6) * z, {5, 5}));
}

TEST_CASE("explicit quadruple syzygies verify, witness, and respect the degree cap") {
    for (int d = 6; d <= 16; ++d) {
        for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(d) - 1)) {
            const auto syz = build_section5_syzygy(d, p);
            if (!syz) continue;  // prime-power-window case
            const auto gens = section5_generators(d, p);
            REQUIRE(syz->coefficients.size() == 4);
            CHECK(verify_syzygy(gens, syz->coefficients));
            CHECK(is_nonkoszul_witness(syz->coefficients[0], {d, d, d}));
            CHECK(syz->degree <= 2 * d - 3);
        }
    }
}

TEST_CASE("quadruple case selection matches the arithmetic split") {
    // d = 9 = 2^3 + 1 at p = 2: the degree-(d+2) syzygy
    auto s = build_section5_syzygy(9, 2);
    REQUIRE(s.has_value());
    CHECK(s->degree == 11);
    CHECK(s->case_tag == "char2-power-plus-one");

    // d = 8 at p = 2: window case, no syzygy needed
    CHECK_FALSE(build_section5_syzygy(8, 2).has_value());

    // d = 7 at p = 3: 2d = 3*4 + 2 with 3 < 4 <= 5: window case
    CHECK_FALSE(build_section5_syzygy(7, 3).has_value());

    // d = 6 at p = 5: even quotient
    auto s65 = build_section5_syzygy(6, 5);
    REQUIRE(s65.has_value());
    CHECK(s65->case_tag == "odd-prime-even-quotient");
    CHECK(s65->degree <= 9);
}
