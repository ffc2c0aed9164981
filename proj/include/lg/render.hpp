#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "lg/engine.hpp"
#include "lg/postprocess.hpp"

namespace lg {

struct LinkageScore {
    int pp_violations = 0;
    int disjunct_cost = 0;
    int and_cost = 0;
    int link_cost = 0;

    auto key() const { return std::tie(pp_violations, disjunct_cost, and_cost, link_cost); }
    bool operator==(const LinkageScore&) const = default;
};

// disjunct-cost = sum of chosen disjunct costs; link-cost = sum over
// non-wall links of (right - left - 1); and-cost comes from validation.
LinkageScore score(const PreparedSentence& s, const Linkage& lk, size_t violation_count,
                   int and_cost);

// Stable ascending sort on (violations, disjunct cost, and cost, link cost);
// ties keep extraction order.
template <class Rec, class Key>
void rank(std::vector<Rec>& records, Key key) {
    std::stable_sort(records.begin(), records.end(),
                     [&](const Rec& a, const Rec& b) { return key(a).key() < key(b).key(); });
}

struct RenderOptions {
    bool show_wall = false;  // diagrams hide the wall unless asked
};

// ASCII arc diagram: each link is a labeled horizontal bracket above the
// word row, nested outward by span.
std::string render_diagram(const PreparedSentence& s, const Linkage& lk,
                           const RenderOptions& opts = {});

// The domain table: one row per link, ordered by (left word, right word
// descending): domains, left word, left connector, <--label-->, right
// connector, right word.
std::string render_table(const PreparedSentence& s, const Linkage& lk,
                         const DomainStructure& ds);

// Test helper: re-parse a rendered diagram back into (left, right, label)
// triples.
std::vector<std::tuple<int, int, std::string>> parse_diagram(const std::string& text);

}  // namespace lg
