#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "lg/engine.hpp"

namespace lg {

// Per-pass disjunct counts, one row per completed stage (row 0 = initial),
// in the layout the debug dump prints.
struct PruneStats {
    int passes = 0;
    std::vector<std::string> row_labels;
    std::vector<std::vector<size_t>> rows;  // counts per word
};

// Connector pruning: alternating left-to-right and right-to-left passes over
// a running set of opposite-pointing connectors; deletes any disjunct with a
// connector that matches nothing on its side.  Stops when a pass (after the
// first) deletes nothing.  The surviving set is the unique pruning fixpoint.
PruneStats prune(PreparedSentence& s);

struct PowerPruneResult {
    NearestInfo nearest;
    PruneStats stats;
};

// Power pruning: recomputes per-connector nearest-word bounds using the four
// local link criteria, deleting disjuncts whose bounds leave the sentence.
// Intended to run after prune().
PowerPruneResult power_prune(PreparedSentence& s);

// Per-word left/right candidate tables keyed by the head of the first
// (outermost) connector, each bucket sorted by that connector's nearest-word
// so the viable portion is a prefix.
class FastMatchTables {
public:
    static FastMatchTables build(const PreparedSentence& s, const NearestInfo* nearest);

    // Appends to `out` the disjunct ids of word W whose first left connector
    // could match l (held by word lword) or whose first right connector
    // could match r (held by rword).  Pass null for missing cursors.
    void collect(int W, const Connector* l, int lword, const Connector* r, int rword,
                 std::vector<int>& out) const;

private:
    struct Entry {
        int disjunct;
        int nearest;  // bound of the first connector
    };
    struct WordTables {
        std::unordered_map<std::string, std::vector<Entry>> left, right;
    };
    std::vector<WordTables> words_;
};

// Bucket key for hashing connectors so that different buckets imply no match.
std::string connector_hash_key(const Connector& c);

}  // namespace lg
