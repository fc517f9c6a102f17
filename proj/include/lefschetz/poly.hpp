#ifndef LEFSCHETZ_POLY_HPP
#define LEFSCHETZ_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lefschetz/bigint.hpp"
#include "lefschetz/combinat.hpp"

namespace lefschetz {

// Coefficient fields.  Polynomials carry their field by value; mixing fields
// is a precondition violation.

struct RationalField {
    using Elem = BigRat;

    std::uint64_t characteristic() const { return 0; }
    Elem zero() const { return BigRat(0); }
    Elem one() const { return BigRat(1); }
    Elem from_integer(const BigInt& v) const { return BigRat(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool operator==(const RationalField&) const { return true; }
    std::string to_string(const Elem& a) const { return a.str(); }
};

// F_p with elements stored reduced to [0, p).
struct PrimeField {
    std::uint64_t p = 2;

    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t prime) : p(prime) {
        LFS_REQUIRE(is_prime_u64(prime), "field modulus must be prime");
    }

    std::uint64_t characteristic() const { return p; }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_integer(const BigInt& v) const {
        BigInt r = v % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<Elem>(r);
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b % p) % p; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((unsigned __int128)a * b % p);
    }
    Elem neg(Elem a) const { return a % p == 0 ? 0 : p - a % p; }
    bool is_zero(Elem a) const { return a % p == 0; }
    bool operator==(const PrimeField& o) const { return p == o.p; }
    std::string to_string(Elem a) const { return std::to_string(a); }
};

using Exponents = std::vector<int>;

// Graded lexicographic term order.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = 0, db = 0;
        for (int v : a) da += v;
        for (int v : b) db += v;
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial with exact coefficients; no zero terms are
// stored.
template <class Field>
class Poly {
  public:
    using Elem = typename Field::Elem;
    using TermMap = std::map<Exponents, Elem, GrlexLess>;

    Poly(Field field, int nvars) : field_(field), nvars_(nvars) {
        LFS_REQUIRE(nvars >= 1, "need at least one variable");
    }

    static Poly zero(Field field, int nvars) { return Poly(field, nvars); }

    static Poly constant(Field field, int nvars, const Elem& c) {
        Poly out(field, nvars);
        out.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
        return out;
    }

    static Poly one(Field field, int nvars) {
        return constant(field, nvars, field.one());
    }

    static Poly variable(Field field, int nvars, int index, int power = 1) {
        LFS_REQUIRE(index >= 0 && index < nvars, "variable index out of range");
        LFS_REQUIRE(power >= 0, "monomial exponents are nonnegative");
        Poly out(field, nvars);
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(index)] = power;
        out.add_term(e, field.one());
        return out;
    }

    // x_0 + x_1 + ... + x_{nvars-1}
    static Poly linear_sum(Field field, int nvars) {
        Poly out(field, nvars);
        for (int i = 0; i < nvars; ++i) {
            Exponents e(static_cast<std::size_t>(nvars), 0);
            e[static_cast<std::size_t>(i)] = 1;
            out.add_term(e, field.one());
        }
        return out;
    }

    const Field& field() const { return field_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Max total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int v : e) t += v;
            d = std::max(d, t);
        }
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (int v : e) t += v;
            if (d < 0) d = t;
            else if (t != d) return false;
        }
        return true;
    }

    void add_term(const Exponents& e, const Elem& c) {
        LFS_REQUIRE(e.size() == static_cast<std::size_t>(nvars_), "exponent arity mismatch");
        if (field_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly operator+(const Poly& o) const {
        require_compatible(o);
        Poly out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    Poly operator-(const Poly& o) const {
        require_compatible(o);
        Poly out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, field_.neg(c));
        return out;
    }

    Poly operator-() const {
        Poly out(field_, nvars_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, field_.neg(c));
        return out;
    }

    Poly operator*(const Poly& o) const {
        require_compatible(o);
        Poly out(field_, nvars_);
        Exponents e(static_cast<std::size_t>(nvars_));
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, field_.mul(ca, cb));
            }
        }
        return out;
    }

    Poly scaled(const Elem& c) const {
        Poly out(field_, nvars_);
        if (field_.is_zero(c)) return out;
        for (const auto& [e, co] : terms_) out.add_term(e, field_.mul(co, c));
        return out;
    }

    // Binary exponentiation, with no characteristic-p shortcut.
    Poly pow_generic(int e) const {
        LFS_REQUIRE(e >= 0, "negative polynomial power");
        Poly result = one(field_, nvars_);
        Poly base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    // p^m-th power over F_p applied termwise: coefficients are fixed by the
    // Frobenius and exponents multiply.
    Poly frobenius_power(int m) const {
        LFS_REQUIRE(field_.characteristic() > 0, "Frobenius needs positive characteristic");
        LFS_REQUIRE(m >= 0, "negative Frobenius iterate");
        std::int64_t q = 1;
        for (int i = 0; i < m; ++i) q *= static_cast<std::int64_t>(field_.characteristic());
        Poly out(field_, nvars_);
        Exponents e(static_cast<std::size_t>(nvars_));
        for (const auto& [ea, c] : terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<int>(ea[i] * q);
            out.terms_.emplace(e, c);
        }
        return out;
    }

    // Exponentiation; over F_p the p-power part of the exponent is taken
    // termwise (this must agree with pow_generic, and the tests hold it to
    // that).
    Poly pow(int e) const {
        LFS_REQUIRE(e >= 0, "negative polynomial power");
        const std::uint64_t p = field_.characteristic();
        if (p == 0 || e == 0) return pow_generic(e);
        int m = 0;
        int rest = e;
        while (rest % static_cast<int>(p) == 0) {
            rest /= static_cast<int>(p);
            ++m;
        }
        return frobenius_power(m).pow_generic(rest);
    }

    bool operator==(const Poly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    std::string to_string() const {
        static const char* kNames[] = {"x", "y", "z", "w"};
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << field_.to_string(it->second);
            for (int i = 0; i < nvars_; ++i) {
                const int ex = it->first[static_cast<std::size_t>(i)];
                if (ex == 0) continue;
                os << '*';
                if (nvars_ <= 4) os << kNames[i];
                else os << 'x' << i;
                if (ex > 1) os << '^' << ex;
            }
        }
        return os.str();
    }

  private:
    void require_compatible(const Poly& o) const {
        LFS_REQUIRE(nvars_ == o.nvars_, "variable count mismatch");
        LFS_REQUIRE(field_ == o.field_, "coefficient field mismatch");
    }

    Field field_;
    int nvars_;
    TermMap terms_;
};

// f_k = (y^k - (-z)^k) / (y+z) = sum_{i=0}^{k-1} y^i (-z)^{k-1-i}, placed on
// the variables iy and iz of an nvars-variable ring.
template <class Field>
Poly<Field> make_f(Field field, int nvars, int k, int iy = 1, int iz = 2) {
    LFS_REQUIRE(k >= 1, "f_k needs k >= 1");
    Poly<Field> out(field, nvars);
    for (int i = 0; i < k; ++i) {
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(iy)] = i;
        e[static_cast<std::size_t>(iz)] = k - 1 - i;
        const bool negative = ((k - 1 - i) % 2) != 0;
        out.add_term(e, negative ? field.neg(field.one()) : field.one());
    }
    return out;
}

// g_k = (x^k - (x+y+z)^k) / (y+z) = -sum_{i=0}^{k-1} binom(k,i) x^i (y+z)^{k-1-i}.
template <class Field>
Poly<Field> make_g(Field field, int nvars, int k, int ix = 0, int iy = 1, int iz = 2) {
    LFS_REQUIRE(k >= 1, "g_k needs k >= 1");
    const auto y = Poly<Field>::variable(field, nvars, iy);
    const auto z = Poly<Field>::variable(field, nvars, iz);
    const auto yz = y + z;
    Poly<Field> acc(field, nvars);
    for (int i = 0; i < k; ++i) {
        auto term = Poly<Field>::variable(field, nvars, ix, i) * yz.pow(k - 1 - i);
        acc = acc + term.scaled(field.from_integer(binomial(static_cast<std::uint64_t>(k),
                                                            static_cast<std::uint64_t>(i))));
    }
    return -acc;
}

// True iff sum coefficients[i] * generators[i] vanishes identically.
template <class Field>
bool verify_syzygy(const std::vector<Poly<Field>>& generators,
                   const std::vector<Poly<Field>>& coefficients) {
    LFS_REQUIRE(generators.size() == coefficients.size(), "length mismatch");
    LFS_REQUIRE(!generators.empty(), "empty syzygy");
    Poly<Field> acc(generators[0].field(), generators[0].nvars());
    for (std::size_t i = 0; i < generators.size(); ++i)
        acc = acc + coefficients[i] * generators[i];
    return acc.is_zero();
}

// Deletes every term divisible by x_i^{powers[i]} (entries with powers[i] = 0
// impose nothing).  This is exact normal-form reduction for an ideal of pure
// powers.
template <class Field>
Poly<Field> reduce_mod_pure_powers(const Poly<Field>& f, const std::vector<int>& powers) {
    LFS_REQUIRE(powers.size() == static_cast<std::size_t>(f.nvars()), "arity mismatch");
    Poly<Field> out(f.field(), f.nvars());
    for (const auto& [e, c] : f.terms()) {
        bool divisible = false;
        for (std::size_t i = 0; i < powers.size(); ++i) {
            if (powers[i] >= 1 && e[i] >= powers[i]) {
                divisible = true;
                break;
            }
        }
        if (!divisible) out.add_term(e, c);
    }
    return out;
}

// Sufficient non-Koszul test: the coefficient paired with the ell-power
// generator must not reduce to zero modulo the pure-power ideal.  Any Koszul
// combination has that coordinate inside the ideal generated by the other
// entries.
template <class Field>
bool is_nonkoszul_witness(const Poly<Field>& ell_coefficient,
                          const std::vector<int>& pure_powers) {
    return !reduce_mod_pure_powers(ell_coefficient, pure_powers).is_zero();
}

// An explicit low-degree non-Koszul syzygy of (ell^{d-3}, x^d, y^d, z^d) over
// F_p, from the case analysis for the quadruple (d, d, d, d-3).
struct Section5Syzygy {
    std::vector<Poly<PrimeField>> coefficients;  // order: ell^{d-3}, x^d, y^d, z^d
    int degree = 0;
    std::string case_tag;
};

// Generators (ell^{d-3}, x^d, y^d, z^d) in K[x,y,z].
std::vector<Poly<PrimeField>> section5_generators(int d, std::uint64_t p);

// Returns the explicit syzygy when the case analysis provides one, nullopt in
// the prime-power-window cases (those fail by the degree-window bound and
// need no syzygy).  Requires d >= 6 and 2 <= p < d.
std::optional<Section5Syzygy> build_section5_syzygy(int d, std::uint64_t p);

}  // namespace lefschetz

#endif
