#ifndef LEFSCHETZ_CONCORDANCE_HPP
#define LEFSCHETZ_CONCORDANCE_HPP

#include <string>
#include <vector>

namespace lefschetz {

// Traceability row: a mathematical result the library relies on, the
// operation that implements it, and the tests that pin it down.
struct ConcordanceEntry {
    std::string id;         // stable slug
    std::string statement;  // one-line statement in the library's vocabulary
    std::string operation;  // implementing operation(s)
    std::string tests;      // verifying test(s)
    bool monitored_only = false;  // observed by a monitor, never assumed
};

const std::vector<ConcordanceEntry>& concordance();

// Markdown rendering of the full table (committed as docs/CONCORDANCE.md).
std::string concordance_markdown();

}  // namespace lefschetz

#endif
