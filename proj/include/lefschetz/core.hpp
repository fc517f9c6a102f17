#ifndef LEFSCHETZ_CORE_HPP
#define LEFSCHETZ_CORE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lefschetz/bigint.hpp"

namespace lefschetz {

// Generator exponents d0 >= d1 >= ... >= dn of a monomial complete
// intersection (x0^d0, ..., xn^dn).  Entries equal to 1 are legal at the type
// level (a unit power kills its variable); individual operations state their
// own lower bounds.
class DegreeTuple {
  public:
    // Validates and sorts.  Throws MathError on fewer than two entries or a
    // nonpositive entry.
    static DegreeTuple normalize(const std::vector<int>& raw);

    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<int>& original() const { return original_; }
    // permutation()[i] = index in the original input of sorted entry i.
    const std::vector<int>& permutation() const { return permutation_; }

    int n() const { return static_cast<int>(degrees_.size()) - 1; }
    int num_vars() const { return static_cast<int>(degrees_.size()); }
    int operator[](int i) const { return degrees_[static_cast<std::size_t>(i)]; }
    int socle_degree() const;

    bool all_at_least(int bound) const;
    bool uniform() const;  // all entries equal

    // Copy with the unit entries removed (the quotient algebra is unchanged).
    // May have fewer than two entries; callers that need a DegreeTuple proper
    // must check.
    std::vector<int> without_units() const;

    // Sorted copy with one extra entry (used for the socle-degree extensions).
    DegreeTuple extended(int extra) const;

    std::string to_string() const;

    bool operator==(const DegreeTuple& o) const { return degrees_ == o.degrees_; }

  private:
    DegreeTuple() = default;
    std::vector<int> degrees_;      // sorted nonincreasing
    std::vector<int> original_;     // as given
    std::vector<int> permutation_;  // sorted position -> original position
};

// The characteristic of the coefficient field: 0 or a positive prime.
class Characteristic {
  public:
    static Characteristic zero() { return Characteristic(0); }
    // Throws MathError unless v is 0 or passes a deterministic primality test.
    static Characteristic of(std::uint64_t v);

    std::uint64_t value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    bool operator==(const Characteristic& o) const { return value_ == o.value_; }

  private:
    explicit Characteristic(std::uint64_t v) : value_(v) {}
    std::uint64_t value_;
};

// h_e = number of monomials of degree e with exponent of x_i below d_i.
// Independent of the characteristic; symmetric with h_0 = h_t = 1.
struct HilbertFunction {
    std::vector<BigInt> values;  // indexed by degree 0..t
    int socle = 0;

    const BigInt& at(int e) const {
        static const BigInt zero = 0;
        if (e < 0 || e > socle) return zero;
        return values[static_cast<std::size_t>(e)];
    }
};

HilbertFunction hilbert_function(const DegreeTuple& d);
HilbertFunction hilbert_function(const std::vector<int>& degrees);

// ---------------------------------------------------------------------------
// Verdicts and witnesses

enum class Status { holds, fails, unknown };

const char* to_string(Status s);

// Map x ell^k : [A]_degree -> [A]_{degree+power} drops rank (degree is the
// source degree of the failing map).
struct DegreeWitness {
    int degree = 0;
    int power = 1;
};

// A prime dividing the associated determinant, with its exponent.
struct PrimeWitness {
    std::uint64_t prime = 0;
    int exponent = 0;
};

// An explicit non-Koszul syzygy of low degree.
struct SyzygyWitness {
    int degree = 0;
    std::string description;  // printable coefficient tuple
};

struct TheoremWitness {
    std::string id;
};

// A scaled point certifying a syzygy-bundle splitting gap above one: the
// triple scaled by p^s lies within taxicab distance < 1 of the odd-sum
// integer point.
struct GapWitness {
    int scale = -1;  // negative exponent s
    std::array<long long, 3> point{};
};

using Witness =
    std::variant<DegreeWitness, PrimeWitness, SyzygyWitness, TheoremWitness, GapWitness>;

// Outcome of one decision route.  `fails` always carries a witness; `unknown`
// is only produced by closed-form cascades that decline, never by the oracle.
struct Verdict {
    Status status = Status::unknown;
    std::string method;  // oracle | determinant | syzygy-gap | mgd | theorem:<id>
    std::optional<Witness> witness;

    static Verdict holds(std::string method_tag) {
        return Verdict{Status::holds, std::move(method_tag), std::nullopt};
    }
    static Verdict fails(std::string method_tag, Witness w) {
        return Verdict{Status::fails, std::move(method_tag), std::move(w)};
    }
    static Verdict unknown(std::string method_tag) {
        return Verdict{Status::unknown, std::move(method_tag), std::nullopt};
    }

    bool is_holds() const { return status == Status::holds; }
    bool is_fails() const { return status == Status::fails; }
};

std::string witness_to_string(const Witness& w);

}  // namespace lefschetz

#endif
