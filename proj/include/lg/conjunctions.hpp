#pragma once

#include <set>
#include <string>
#include <vector>

#include "lg/engine.hpp"

namespace lg {

// Reserved head for the optional pre-coordinator comma hook; cannot collide
// with dictionary names because the comma side carries a '#' subscript.
inline constexpr const char* kCommaHookHead = "XCA";

struct CoordOptions {
    // Connector heads allowed to cross an and-boundary; empty = all.
    std::set<std::string> allowlist;
};

// Rewrites a prepared sentence for coordination: synthesizes fat-connector
// disjuncts on every word (sub-disjuncts delegated through a single fat
// link), impersonation/chain/nesting/mixed disjuncts on and/or/nor, chain
// disjuncts on commas, and the optional pre-coordinator comma hook.  Identity
// when no and/or/nor token is present.  Returns true if anything changed.
bool expand_for_coordination(PreparedSentence& s, const CoordOptions& opts = {});

struct AndList {
    int coordinator = 0;                            // top coordinator word
    std::vector<std::pair<int, int>> element_ranges;  // word ranges [b, e]
    std::vector<int> attachment;                    // attachment word per element
    std::vector<int> separators;                    // coordinator word between elements
};

struct AndViolation {
    std::string name;
    std::string detail;
};

struct AndValidation {
    std::vector<AndViolation> violations;
    std::vector<AndList> lists;
    int and_cost = 0;  // sum over lists of (max element span - min element span)
};

// Post-extraction validation of coordination structure: reconstructs the
// and-lists from fat links, checks that each element reaches the rest of the
// sentence through its coordinator only, that the final separator is a
// coordinating word, and recomputes every outward connector name as the
// intersection of the elements' names (two subject connectors intersect to
// Sp).  Outward links that no longer match are violations; matching ones are
// relabeled with the intersected name.
AndValidation validate_and_linkage(const PreparedSentence& s, Linkage& lk);

}  // namespace lg
