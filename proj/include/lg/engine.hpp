#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lg/prepare.hpp"

namespace lg {

// A link joining two words.  Ends keep the full connectors; the label is the
// intersection of the two names (fat links get the pseudo-head "FAT").
struct Link {
    int left_word = 0, right_word = 0;
    Connector left_end, right_end;
    ConnectorName label;

    bool operator==(const Link& o) const {
        return left_word == o.left_word && right_word == o.right_word && label == o.label &&
               left_end.same_shape(o.left_end) && right_end.same_shape(o.right_end);
    }
};

ConnectorName link_label(const Connector& left_end, const Connector& right_end);

struct Linkage {
    std::vector<int> chosen;  // disjunct index per word
    std::vector<Link> links;  // sorted by (left_word, right_word)
};

// Per-disjunct nearest-word annotations produced by power pruning.  Indexing
// follows the Disjunct lists (index 0 = nearest connector).  Values are
// absolute word positions: a left connector of word w may only link to words
// <= its bound... (left side) or >= (right side).
struct NearestInfo {
    // nearest[w][d].first  = bounds for Disjunct.left  (nearest-first)
    // nearest[w][d].second = bounds for Disjunct.right (nearest-first)
    std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> bounds;
    bool empty() const { return bounds.empty(); }
};

class FastMatchTables;

struct EngineOptions {
    bool memo = true;
    bool canonical_guard = true;   // the "l = nil" test; off only in tests
    bool clamp_by_nearest = true;  // restrict the intermediate-word range
    const FastMatchTables* fast_match = nullptr;
    const NearestInfo* nearest = nullptr;
};

struct EngineStats {
    size_t memo_entries = 0;
    size_t count_calls = 0;
    size_t cursors = 0;  // connector cursor count (memo keys are cursor pairs)
};

// One parse context per sentence; contexts are independent and confined, so
// different sentences may be parsed on different threads.
class ParseContext {
public:
    ParseContext(const PreparedSentence& s, EngineOptions opts = {});

    uint64_t count_linkages();
    std::vector<Linkage> extract_linkages(size_t max = 1000);
    const EngineStats& stats() const { return stats_; }

private:
    struct Cursor {
        Connector conn;
        int next = 0;   // toward the nearest end; 0 = exhausted
        int word = 0;
        bool last = false;     // nearest connector of its list
        bool shallow = false;  // outermost connector of its list
        int nearest = 0;       // absolute bound on the linked word
    };

    struct Partial {
        std::vector<Link> links;
        std::vector<std::pair<int, int>> chosen;  // (word, disjunct)
    };

    const PreparedSentence& sent_;
    EngineOptions opts_;
    EngineStats stats_;
    int n_ = 0;  // number of words; virtual right boundary is n_

    std::vector<Cursor> cursors_;                      // [1..]; 0 is nil
    std::vector<std::vector<int>> first_left_;         // per word, per disjunct
    std::vector<std::vector<int>> first_right_;
    std::unordered_map<uint64_t, uint64_t> memo_;
    std::vector<int> scratch_;

    uint64_t count(int L, int R, int l, int r);
    uint64_t link_counts(int L, int R, int a, int b);
    void solve(int L, int R, int l, int r, size_t budget, std::vector<Partial>& out);
    const std::vector<int>& candidates(int W, int l, int r);
    Link make_link(int lw, int rw, int lcur, int rcur) const;
};

uint64_t count_linkages(const PreparedSentence& s, EngineOptions opts = {});
std::vector<Linkage> extract_linkages(const PreparedSentence& s, size_t max = 1000,
                                      EngineOptions opts = {});

// Independent validity checker: planarity, connectivity, exclusion, ordering
// and per-word disjunct satisfaction (multi-connectors may take several
// consecutive links; every connector needs at least one).
bool verify_linkage(const PreparedSentence& s, const Linkage& lk);

// Individual meta-rule checks, exposed for tests and error reporting.
bool links_planar(const std::vector<Link>& links);
bool links_connected(size_t words, const std::vector<Link>& links);
bool links_exclusive(const std::vector<Link>& links);

}  // namespace lg
