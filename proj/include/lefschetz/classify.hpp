#ifndef LEFSCHETZ_CLASSIFY_HPP
#define LEFSCHETZ_CLASSIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "lefschetz/core.hpp"

namespace lefschetz {

// One applicability check in the decision cascade.
struct TraceStep {
    std::string rule;
    std::string note;      // why it was skipped, or what it decided
    bool decisive = false;
};

// The audit trail of a cascade run: every rule consulted, in order, with
// exactly one decisive step when a verdict was reached.
struct MethodTrace {
    std::vector<TraceStep> steps;
    std::string decisive_method;

    void skip(std::string rule, std::string why) {
        steps.push_back({std::move(rule), std::move(why), false});
    }
    void decide(std::string rule, std::string what) {
        decisive_method = rule;
        steps.push_back({std::move(rule), std::move(what), true});
    }
};

struct ClassifyOptions {
    bool oracle_fallback = true;
};

struct Classified {
    Verdict verdict;
    MethodTrace trace;
};

// Weak Lefschetz decision cascade: cheapest certain method first, oracle
// last.  Entries equal to 1 are dropped up front (the algebra is unchanged).
// With the oracle fallback enabled the status is never `unknown`.
Classified classify_wlp(const DegreeTuple& d, Characteristic ch,
                        const ClassifyOptions& opt = {});

// Strong Lefschetz decision cascade.
Classified classify_slp(const DegreeTuple& d, Characteristic ch,
                        const ClassifyOptions& opt = {});

using WlpDecider = std::function<Verdict(const DegreeTuple&, Characteristic)>;

// Strong Lefschetz through the extension family: holds iff the tuple
// extended by t-2k has the weak property for every 0 <= k <= floor(t/2).
// Witness on failure: the least failing k with its power t-2k.
Verdict slp_via_wlp_family(const DegreeTuple& d, Characteristic ch,
                           const WlpDecider& wlp_decider);

// One-directional lift for even socle degree: if the tuple extended by 2 has
// the weak property, so does the tuple; otherwise unknown.
Verdict even_socle_lift(const DegreeTuple& d, Characteristic ch,
                        const ClassifyOptions& opt = {});

// ---------------------------------------------------------------------------
// Conjecture monitors.  These report observations, never assert.

struct ConjectureObservation {
    std::vector<int> degrees;
    std::uint64_t prime = 0;
    std::string detail;
};

struct ConjectureReport {
    int midpoint_checked = 0;   // even socle, p = t/2 + 1: expect the weak property
    int smalltop_checked = 0;   // d0 <= ceil(t/2): expect strong iff p = 0 or p > t
    int skipped = 0;            // tuples outside either hypothesis
    std::vector<ConjectureObservation> midpoint_counterexamples;
    std::vector<ConjectureObservation> smalltop_counterexamples;

    bool clean() const {
        return midpoint_counterexamples.empty() && smalltop_counterexamples.empty();
    }
};

ConjectureReport check_conjectures(int nmin, int nmax, int dmax);

}  // namespace lefschetz

#endif
