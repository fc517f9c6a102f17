#include "lefschetz/poly.hpp"

namespace lefschetz {

namespace {

using P = Poly<PrimeField>;

P sign_power(const PrimeField& k, int exponent_parity_source) {
    // (-1)^e as a constant polynomial scalar source
    return P::constant(k, 3, exponent_parity_source % 2 ? k.neg(k.one()) : k.one());
}

int ipow3(int m) {
    int v = 1;
    while (m--) v *= 3;
    return v;
}

}  // namespace

std::vector<Poly<PrimeField>> section5_generators(int d, std::uint64_t p) {
    PrimeField k(p);
    std::vector<P> gens;
    gens.push_back(P::linear_sum(k, 3).pow(d - 3));
    for (int v = 0; v < 3; ++v) gens.push_back(P::variable(k, 3, v, d));
    return gens;
}

std::optional<Section5Syzygy> build_section5_syzygy(int d, std::uint64_t p) {
    LFS_REQUIRE(d >= 6, "the quadruple case analysis needs d >= 6");
    LFS_REQUIRE(p >= 2 && static_cast<int>(p) < d, "need 2 <= p < d");
    LFS_REQUIRE(is_prime_u64(p), "characteristic must be prime");

    PrimeField k(p);
    const auto X = [&](int e) { return P::variable(k, 3, 0, e); };
    const auto Y = [&](int e) { return P::variable(k, 3, 1, e); };
    const auto Z = [&](int e) { return P::variable(k, 3, 2, e); };
    const auto L = [&](int e) { return P::linear_sum(k, 3).pow(e); };

    // alpha pairs with (x^d, y^d, z^d, ell^{d-3}); the returned coefficient
    // order is (ell^{d-3}, x^d, y^d, z^d).
    std::vector<P> alpha;
    std::string tag;

    if (p == 2) {
        // Only d = 2^m + 1 admits the explicit syzygy; otherwise a power of
        // two lands in the failure window and no syzygy is needed.
        const int dm1 = d - 1;
        if ((dm1 & (dm1 - 1)) != 0) return std::nullopt;
        alpha = {Y(1) * Z(1), X(1) * Z(1), X(1) * Y(1), X(1) * Y(1) * Z(1) * L(2)};
        tag = "char2-power-plus-one";
    } else if (p == 3) {
        const int r = (2 * d) % 3;
        const int q = (2 * d - r) / 3;
        int m = 0;
        while (ipow3(m + 1) <= q) ++m;  // 3^m <= q < 3^{m+1}
        if (q == ipow3(m)) {
            LFS_REQUIRE(r == 1, "2d = 3^{m+1} + r forces r = 1");
            const int j = (ipow3(m) + 1) / 2;  // d = 3j - 1
            LFS_REQUIRE(d == 3 * j - 1 && j >= 3, "char-3 top case arithmetic");
            const P xz_pow = (X(1) - Z(1)).pow(ipow3(m));
            alpha = {X(j - 1) * Y(j) * L(j - 3), xz_pow * L(j - 3),
                     -(Y(j) * Z(j - 1) * L(j - 3)), -(xz_pow * Y(j))};
            tag = "char3-top";
        } else if (q <= 2 * ipow3(m) - 1) {
            return std::nullopt;  // 3^{m+1} sits in the failure window
        } else {
            const int kk = d - ipow3(m + 1);
            LFS_REQUIRE(kk >= 0 && 2 * kk <= ipow3(m + 1) - 1, "char-3 bottom case arithmetic");
            const int j = std::max(0, kk - 3);
            alpha = {Y(kk) * Z(kk) * L(j), X(kk) * Z(kk) * L(j), X(kk) * Y(kk) * L(j),
                     -(X(kk) * Y(kk) * Z(kk) * L(std::max(0, 3 - kk)))};
            tag = "char3-bottom";
        }
    } else {
        const int r = (2 * d) % static_cast<int>(p);
        const int q = (2 * d - r) / static_cast<int>(p);
        LFS_REQUIRE((q + r) % 2 == 0, "q and r share parity for odd p");
        const int pi = static_cast<int>(p);
        if (q % 2 == 0) {
            LFS_REQUIRE(q >= 2, "even quotient must be positive");
            const int rr = r / 2;
            const int jj = std::max(0, rr - 3);
            const P f = make_f(k, 3, q / 2).pow(pi);
            const P g0 = make_g(k, 3, q / 2);
            const P g = g0.pow(pi);
            const P gsigned = (sign_power(k, q / 2 + 1) * g0).pow(pi);
            alpha = {Y(rr) * Z(rr) * L(jj) * (-f), X(rr) * Z(rr) * L(jj) * g,
                     X(rr) * Y(rr) * L(jj) * gsigned,
                     X(rr) * Y(rr) * Z(rr) * L(std::max(0, 3 - rr)) * f};
            tag = "odd-prime-even-quotient";
        } else if (r == 1) {
            const int j = d - (q - 1) / 2 * pi;
            LFS_REQUIRE(j >= 3 && q >= 3, "odd quotient, r = 1 arithmetic");
            const P f = make_f(k, 3, (q + 1) / 2).pow(pi);
            const P g0 = make_g(k, 3, (q - 1) / 2);
            const P g = g0.pow(pi);
            const P gsigned = (sign_power(k, (q - 1) / 2 + 2) * g0).pow(pi);
            alpha = {L(j - 3) * (-f), X(j) * Y(j - 1) * L(j - 3) * g,
                     X(j) * Z(j - 1) * L(j - 3) * gsigned, X(j) * f};
            tag = "odd-prime-odd-quotient-r1";
        } else {
            const int j = d - r - (q - 1) / 2 * pi;
            LFS_REQUIRE(j >= 0 && r >= 3, "odd quotient, r >= 3 arithmetic");
            const P f = make_f(k, 3, (q + 1) / 2).pow(pi);
            const P g0 = make_g(k, 3, (q + 1) / 2);
            const P g = g0.pow(pi);
            const P gsigned = (sign_power(k, (q + 1) / 2 + 1) * g0).pow(pi);
            alpha = {X(j) * (-f), Y(j) * g, Z(j) * gsigned, L(j + 3) * f};
            tag = "odd-prime-odd-quotient";
        }
    }

    Section5Syzygy out;
    out.coefficients = {alpha[3], alpha[0], alpha[1], alpha[2]};
    out.case_tag = tag;
    int deg = -1;
    const int gen_deg[4] = {d - 3, d, d, d};
    for (int i = 0; i < 4; ++i) {
        if (out.coefficients[static_cast<std::size_t>(i)].is_zero()) continue;
        const int total = out.coefficients[static_cast<std::size_t>(i)].degree() + gen_deg[i];
        LFS_REQUIRE(out.coefficients[static_cast<std::size_t>(i)].is_homogeneous(),
                    "syzygy coefficients must be homogeneous");
        if (deg < 0) deg = total;
        LFS_REQUIRE(deg == total, "syzygy is not homogeneous");
    }
    out.degree = deg;
    return out;
}

}  // namespace lefschetz
