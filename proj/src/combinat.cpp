#include "lefschetz/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lefschetz {

namespace {

void compositions_rec(const std::vector<int>& bounds, int pos, int remaining,
                      WeakComposition& current, std::vector<WeakComposition>& out) {
    const int n = static_cast<int>(bounds.size());
    if (pos == n) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    int tail = 0;
    for (int i = pos + 1; i < n; ++i) tail += bounds[static_cast<std::size_t>(i)];
    const int hi = std::min(bounds[static_cast<std::size_t>(pos)], remaining);
    const int lo = std::max(0, remaining - tail);
    for (int v = hi; v >= lo; --v) {  // descending: largest exponent first
        current[static_cast<std::size_t>(pos)] = v;
        compositions_rec(bounds, pos + 1, remaining - v, current, out);
    }
    current[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

std::vector<WeakComposition> weak_compositions(const std::vector<int>& bounds, int k) {
    LFS_REQUIRE(!bounds.empty(), "need at least one part");
    for (int b : bounds) LFS_REQUIRE(b >= 0, "bounds must be nonnegative");
    std::vector<WeakComposition> out;
    if (k < 0) return out;
    WeakComposition current(bounds.size(), 0);
    compositions_rec(bounds, 0, k, current, out);
    return out;
}

BigInt composition_count(const std::vector<int>& bounds, int k) {
    if (k < 0) return 0;
    std::vector<BigInt> h{1};
    for (int b : bounds) {
        std::vector<BigInt> next(h.size() + static_cast<std::size_t>(b), 0);
        for (std::size_t i = 0; i < h.size(); ++i)
            for (int j = 0; j <= b; ++j) next[i + static_cast<std::size_t>(j)] += h[i];
        h = std::move(next);
    }
    if (static_cast<std::size_t>(k) >= h.size()) return 0;
    return h[static_cast<std::size_t>(k)];
}

BigInt composition_count_delta(const std::vector<int>& bounds, int i) {
    return composition_count(bounds, i) - composition_count(bounds, i - 1);
}

std::vector<int> bit_positions(std::uint64_t n) {
    LFS_REQUIRE(n >= 1, "bit positions are defined for positive integers");
    std::vector<int> out;
    for (int i = 0; n; ++i, n >>= 1)
        if (n & 1) out.push_back(i);
    return out;
}

bool bits_disjoint(std::uint64_t a, std::uint64_t b) { return (a & b) == 0; }

int carries_base_p(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    LFS_REQUIRE(is_prime_u64(p), "base must be prime");
    int carries = 0, carry = 0;
    while (a || b || carry) {
        std::uint64_t digit = a % p + b % p + static_cast<std::uint64_t>(carry);
        carry = digit >= p ? 1 : 0;
        carries += carry;
        a /= p;
        b /= p;
    }
    return carries;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(n) + 1, true);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!sieve[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
    }
    return out;
}

int PrimeFactorization::exponent_of(std::uint64_t p) const {
    auto it = factors_.find(p);
    return it == factors_.end() ? 0 : it->second;
}

std::vector<std::uint64_t> PrimeFactorization::primes() const {
    std::vector<std::uint64_t> out;
    out.reserve(factors_.size());
    for (const auto& [p, e] : factors_) out.push_back(p);
    return out;
}

void PrimeFactorization::multiply_by(const PrimeFactorization& o) {
    for (const auto& [p, e] : o.factors_) add_exponent(p, e);
}

void PrimeFactorization::divide_by(const PrimeFactorization& o) {
    for (const auto& [p, e] : o.factors_) add_exponent(p, -e);
    LFS_REQUIRE(all_nonnegative(), "quotient is not an integer");
}

void PrimeFactorization::raise_to(int e) {
    LFS_REQUIRE(e >= 0, "negative power of a factorization");
    if (e == 0) {
        factors_.clear();
        return;
    }
    for (auto& [p, exp] : factors_) exp *= e;
}

BigInt PrimeFactorization::to_integer() const {
    BigInt v = 1;
    for (const auto& [p, e] : factors_) {
        LFS_REQUIRE(e >= 0, "factorization has a negative exponent");
        v *= pow_bigint(BigInt(p), static_cast<unsigned long>(e));
    }
    return v;
}

std::string PrimeFactorization::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factors_) {
        if (!first) os << " * ";
        first = false;
        os << p;
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

void PrimeFactorization::add_exponent(std::uint64_t p, int e) {
    if (e == 0) return;
    auto [it, inserted] = factors_.try_emplace(p, 0);
    it->second += e;
    if (it->second == 0) factors_.erase(it);
}

bool PrimeFactorization::all_nonnegative() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const auto& kv) { return kv.second > 0; });
}

namespace {

int legendre_valuation(std::uint64_t n, std::uint64_t p) {
    int v = 0;
    while (n) {
        n /= p;
        v += static_cast<int>(n);
    }
    return v;
}

}  // namespace

PrimeFactorization factorial_factorization(std::uint64_t n) {
    PrimeFactorization f;
    for (std::uint64_t p : primes_up_to(n)) f.add_exponent(p, legendre_valuation(n, p));
    return f;
}

PrimeFactorization multinomial_factorization(const std::vector<int>& parts) {
    std::uint64_t total = 0;
    for (int v : parts) {
        LFS_REQUIRE(v >= 0, "multinomial parts must be nonnegative");
        total += static_cast<std::uint64_t>(v);
    }
    PrimeFactorization f;
    for (std::uint64_t p : primes_up_to(total)) {
        int e = legendre_valuation(total, p);
        for (int v : parts) e -= legendre_valuation(static_cast<std::uint64_t>(v), p);
        f.add_exponent(p, e);
    }
    LFS_REQUIRE(f.all_nonnegative(), "multinomial valuation went negative");
    return f;
}

PrimeFactorization rising_factorial_factorization(std::uint64_t x, std::uint64_t m) {
    LFS_REQUIRE(x >= 1, "rising factorial needs x >= 1");
    PrimeFactorization f;
    for (std::uint64_t p : primes_up_to(x + m - 1)) {
        int e = legendre_valuation(x + m - 1, p) - legendre_valuation(x - 1, p);
        f.add_exponent(p, e);
    }
    LFS_REQUIRE(f.all_nonnegative(), "rising factorial valuation went negative");
    return f;
}

PrimeFactorization factor_integer(const BigInt& value) {
    LFS_REQUIRE(value > 0, "can only factor positive integers");
    BigInt v = value;
    PrimeFactorization f;
    for (BigInt p = 2; p * p <= v; ++p) {
        while (v % p == 0) {
            f.add_exponent(static_cast<std::uint64_t>(p), 1);
            v /= p;
        }
    }
    if (v > 1) f.add_exponent(static_cast<std::uint64_t>(v), 1);
    return f;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

bool is_multinomial_odd(const std::vector<int>& parts) {
    std::uint64_t seen = 0;
    for (int v : parts) {
        LFS_REQUIRE(v >= 0, "multinomial parts must be nonnegative");
        auto u = static_cast<std::uint64_t>(v);
        if (seen & u) return false;
        seen |= u;
    }
    return true;
}

bool one_or_other_even(const std::vector<int>& parts, bool* first_even,
                       bool* second_even) {
    LFS_REQUIRE(parts.size() >= 3, "need n >= 2, i.e. at least three parts");
    LFS_REQUIRE(std::is_sorted(parts.rbegin(), parts.rend()),
                "parts must be sorted nonincreasing");
    LFS_REQUIRE(parts.back() >= 1, "parts must be positive");
    long long rest = std::accumulate(parts.begin() + 1, parts.end(), 0ll);
    LFS_REQUIRE(parts[0] >= rest, "leading part must dominate the rest");

    bool a = !is_multinomial_odd(parts);
    std::vector<int> shifted = parts;
    shifted[0] = static_cast<int>(parts[0] + 1 - rest);
    bool b = !is_multinomial_odd(shifted);
    if (first_even) *first_even = a;
    if (second_even) *second_even = b;
    return a || b;
}

}  // namespace lefschetz
