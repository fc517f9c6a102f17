#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "lefschetz/concordance.hpp"

using namespace lefschetz;

namespace {

// Every result the build relies on must be present exactly once.
const std::set<std::string> kRequired = {
    "odd-socle-determinant", "even-socle-lift", "strong-stanley",
    "wlp-family-reduction", "large-top-degree", "rank-propagation",
    "sum-of-variables-element", "bounded-compositions", "middle-matrix",
    "determinant-product-formula", "lattice-path-determinant", "one-entry-matrix",
    "prime-power-failure-window", "wlp-prime-bounds", "slp-prime-bounds",
    "two-variable-wlp", "two-variable-small-second-degree", "syzygy-gap-criterion",
    "carry-counting", "odd-binomial-bits", "double-odd-binomial", "alternating-family",
    "char-two-two-variables", "equal-powers-two-variables", "syzygy-degree-bound",
    "standard-syzygy-pair", "quadruple-offset-three", "equal-powers-three-variables",
    "odd-multinomial-bits", "dominant-multinomial-parity", "char-two-many-variables",
    "equal-powers-many-variables-wlp", "equal-powers-many-variables-slp",
    "near-equal-powers", "equal-powers-four-variables", "char-two-classification",
    "equal-powers-classification", "even-socle-midpoint-conjecture",
    "small-top-degree-conjecture", "midpoint-example-pair"};

}  // namespace

TEST_CASE("concordance covers every required result exactly once") {
    std::set<std::string> seen;
    for (const auto& e : concordance()) {
        CAPTURE(e.id);
        CHECK(seen.insert(e.id).second);        // no duplicates
        CHECK(kRequired.count(e.id) == 1);      // no orphans
        CHECK_FALSE(e.statement.empty());
        CHECK_FALSE(e.operation.empty());
        CHECK_FALSE(e.tests.empty());
    }
    for (const auto& id : kRequired) {
        CAPTURE(id);
        CHECK(seen.count(id) == 1);  // nothing missing
    }
}

TEST_CASE("conjecture rows are marked monitored") {
    for (const auto& e : concordance()) {
        const bool is_conjecture = e.id.find("conjecture") != std::string::npos;
        CHECK(e.monitored_only == is_conjecture);
    }
}

TEST_CASE("the committed markdown matches the generator") {
    const char* src = std::getenv("LEFSCHETZ_SRC");
    if (!src) return;  // only enforced under ctest
    std::ifstream in(std::string(src) + "/docs/CONCORDANCE.md");
    REQUIRE_MESSAGE(in.good(), "docs/CONCORDANCE.md missing; run gen_concordance");
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str() == concordance_markdown());
}
