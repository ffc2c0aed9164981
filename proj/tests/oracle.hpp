#pragma once

// Test-only brute-force linkage enumerator, independent of the span-recursion
// engine.  It sweeps the sentence left to right maintaining a stack of open
// right-pointing connectors (the connectors whose links cross the current
// position), enumerating every serving order, then filters candidates with
// verify_linkage and deduplicates by (chosen disjuncts, links with connector
// positions).  Over-generation is harmless; the filter is the authority.

#include <cstdint>
#include <string>
#include <vector>

#include "lg/dictionary.hpp"
#include "lg/engine.hpp"
#include "lg/prepare.hpp"

namespace lgtest {

struct OracleResult {
    uint64_t count = 0;
    std::vector<lg::Linkage> linkages;
};

OracleResult oracle_enumerate(const lg::PreparedSentence& s);

// Every sentence of the given length over the dictionary's vocabulary,
// excluding the reserved WALL entry key.
std::vector<std::vector<std::string>> vocabulary_sequences(const lg::Dictionary& d, int length);

// Convenience: prepare a token line (single candidate expected) for `d`.
lg::PreparedSentence prepare_one(const lg::Dictionary& d, const std::string& line);

}  // namespace lgtest
