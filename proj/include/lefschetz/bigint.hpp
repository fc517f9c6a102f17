#ifndef LEFSCHETZ_BIGINT_HPP
#define LEFSCHETZ_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lefschetz {

// All arithmetic in this library is exact: arbitrary-precision integers and
// rationals, or machine words reduced modulo a prime.  No floating point.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow_bigint(const BigInt& base, unsigned long exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

struct MathError : std::invalid_argument {
    explicit MathError(const std::string& what) : std::invalid_argument(what) {}
};

#define LFS_REQUIRE(cond, msg)          \
    do {                                \
        if (!(cond)) throw ::lefschetz::MathError(msg); \
    } while (0)

}  // namespace lefschetz

#endif
