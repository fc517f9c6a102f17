#include "lefschetz/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lefschetz {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are a proven deterministic set for all 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

DegreeTuple DegreeTuple::normalize(const std::vector<int>& raw) {
    LFS_REQUIRE(raw.size() >= 2, "degree tuple needs at least two entries");
    for (int v : raw) LFS_REQUIRE(v >= 1, "degree entries must be positive");

    DegreeTuple t;
    t.original_ = raw;
    t.permutation_.resize(raw.size());
    std::iota(t.permutation_.begin(), t.permutation_.end(), 0);
    // Stable so equal entries keep their input order in the record.
    std::stable_sort(t.permutation_.begin(), t.permutation_.end(),
                     [&raw](int a, int b) { return raw[static_cast<std::size_t>(a)] > raw[static_cast<std::size_t>(b)]; });
    t.degrees_.reserve(raw.size());
    for (int idx : t.permutation_) t.degrees_.push_back(raw[static_cast<std::size_t>(idx)]);
    return t;
}

int DegreeTuple::socle_degree() const {
    int sum = 0;
    for (int v : degrees_) sum += v;
    return sum - num_vars();
}

bool DegreeTuple::all_at_least(int bound) const {
    return std::all_of(degrees_.begin(), degrees_.end(),
                       [bound](int v) { return v >= bound; });
}

bool DegreeTuple::uniform() const {
    return std::all_of(degrees_.begin(), degrees_.end(),
                       [this](int v) { return v == degrees_[0]; });
}

std::vector<int> DegreeTuple::without_units() const {
    std::vector<int> out;
    for (int v : degrees_)
        if (v > 1) out.push_back(v);
    return out;
}

DegreeTuple DegreeTuple::extended(int extra) const {
    LFS_REQUIRE(extra >= 1, "extension degree must be positive");
    std::vector<int> raw = degrees_;
    raw.push_back(extra);
    return normalize(raw);
}

std::string DegreeTuple::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i) os << ',';
        os << degrees_[i];
    }
    os << ')';
    return os.str();
}

Characteristic Characteristic::of(std::uint64_t v) {
    LFS_REQUIRE(v == 0 || is_prime_u64(v),
                "characteristic must be 0 or a positive prime");
    return Characteristic(v);
}

HilbertFunction hilbert_function(const std::vector<int>& degrees) {
    // Coefficients of prod_i (1 + x + ... + x^{d_i - 1}), by exact convolution.
    std::vector<BigInt> h{1};
    for (int d : degrees) {
        LFS_REQUIRE(d >= 1, "degree entries must be positive");
        std::vector<BigInt> next(h.size() + static_cast<std::size_t>(d) - 1, 0);
        for (std::size_t i = 0; i < h.size(); ++i)
            for (int j = 0; j < d; ++j) next[i + static_cast<std::size_t>(j)] += h[i];
        h = std::move(next);
    }
    HilbertFunction out;
    out.socle = static_cast<int>(h.size()) - 1;
    out.values = std::move(h);
    return out;
}

HilbertFunction hilbert_function(const DegreeTuple& d) {
    return hilbert_function(d.degrees());
}

const char* to_string(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::fails: return "fails";
        case Status::unknown: return "unknown";
    }
    return "?";
}

std::string witness_to_string(const Witness& w) {
    std::ostringstream os;
    if (const auto* d = std::get_if<DegreeWitness>(&w)) {
        os << "map degree " << d->degree << " -> " << (d->degree + d->power)
           << " drops rank";
    } else if (const auto* p = std::get_if<PrimeWitness>(&w)) {
        os << "prime " << p->prime << " divides the determinant (exponent "
           << p->exponent << ")";
    } else if (const auto* s = std::get_if<SyzygyWitness>(&w)) {
        os << "non-Koszul syzygy of degree " << s->degree << ": " << s->description;
    } else if (const auto* t = std::get_if<TheoremWitness>(&w)) {
        os << "by " << t->id;
    } else if (const auto* g = std::get_if<GapWitness>(&w)) {
        os << "splitting gap above one: scale p^" << g->scale << " near odd point ("
           << g->point[0] << ',' << g->point[1] << ',' << g->point[2] << ')';
    }
    return os.str();
}

}  // namespace lefschetz
