#ifndef LEFSCHETZ_CENSUS_HPP
#define LEFSCHETZ_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/classify.hpp"
#include "lefschetz/core.hpp"

namespace lefschetz {

inline constexpr const char* kVersion = "1.0.0";

enum class Property { wlp, slp };

inline const char* to_string(Property p) { return p == Property::wlp ? "wlp" : "slp"; }

// One decision, as emitted on the wire.  Serializes to a single JSON line
// with exactly the keys {degrees, normalized, char, property, status, method,
// witness, runtime_micros} in that order.
struct CensusRecord {
    std::vector<int> degrees;     // input order
    std::vector<int> normalized;  // sorted nonincreasing
    std::uint64_t characteristic = 0;
    Property property = Property::wlp;
    Status status = Status::unknown;
    std::string method;
    std::optional<Witness> witness;
    long long runtime_micros = 0;
};

std::string to_jsonl(const CensusRecord& r);

// Decides one instance with the full cascade and wraps it as a record.
CensusRecord decide_record(const std::vector<int>& degrees, Characteristic ch,
                           Property property, const ClassifyOptions& opt = {});

struct CensusRequest {
    Property property = Property::slp;
    int n = 1;
    int dmax = 3;
    std::uint64_t pmax = 7;
    int jobs = 1;
};

// All (tuple, prime) records for nonincreasing (n+1)-tuples with entries in
// [2, dmax] and primes up to pmax, in deterministic (tuple, prime) order
// regardless of the parallelism degree.
std::vector<CensusRecord> run_census(const CensusRequest& request);

// Default parallelism: LEFSCHETZ_JOBS when set, otherwise 1.
int default_jobs();

}  // namespace lefschetz

#endif
