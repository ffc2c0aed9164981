#pragma once

#include <cassert>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lg {

// A connector name: one or more upper-case letters (the head) followed by a
// subscript tail of lower-case letters, '*', or '#'.  '#' never appears in
// dictionary source; it is produced only by name intersection.
struct ConnectorName {
    std::string head;
    std::string tail;

    ConnectorName() = default;
    ConnectorName(std::string h, std::string t = "") : head(std::move(h)), tail(std::move(t)) {}

    std::string str() const { return head + tail; }

    bool operator==(const ConnectorName& o) const = default;
    auto operator<=>(const ConnectorName& o) const = default;
};

// Parses "Dmc" into head "D", tail "mc".  Returns false if the text is not a
// well-formed name (empty head, or stray characters).
bool parse_connector_name(const std::string& text, ConnectorName& out);

// True iff the two names match under the subscript rule: heads equal, and at
// every tail position (shorter tail padded with '*') the characters are
// compatible.  Characters are compatible when equal or when either is '*',
// except that '#' is compatible only with '*'.
bool names_match(const ConnectorName& a, const ConnectorName& b);

// Name intersection.  Requires equal heads.  Per tail position: equal keeps
// the character, '*' yields the other character, and two different specific
// characters yield '#'.  The match-set of the result is the intersection of
// the inputs' match-sets.  Trailing '*'s are trimmed.
ConnectorName intersect_names(const ConnectorName& a, const ConnectorName& b);

enum class Dir : uint8_t { Left, Right };

// Signature of a fat connector: the left and right name sequences of the
// sub-disjunct it stands for, both nearest-first.  Nonempty overall.
struct FatSig {
    std::vector<ConnectorName> left;
    std::vector<ConnectorName> right;

    bool operator==(const FatSig& o) const = default;
    size_t size() const { return left.size() + right.size(); }
    std::string str() const;
};

using FatRef = std::shared_ptr<const FatSig>;

// A link endpoint.  Dictionary-sourced connectors have priority 0 and no fat
// signature.  The coordination transform synthesizes priority-1 connectors on
// sentence words and priority-2 connectors on coordinators, both fat.
struct Connector {
    ConnectorName name;
    Dir dir = Dir::Right;
    bool multi = false;
    uint8_t priority = 0;
    FatRef fat;

    bool same_shape(const Connector& o) const {
        if (name != o.name || dir != o.dir || multi != o.multi || priority != o.priority)
            return false;
        if (!fat != !o.fat) return false;
        return !fat || *fat == *o.fat;
    }
    std::string str() const;
};

// The matching rule.  `a` must point right and `b` left; the caller orients.
// Priorities must pair as (0,0), (1,2) or (2,1).  Fat connectors match fat
// connectors with same-shape signatures whose corresponding names share
// heads (the outward names are re-checked against the true intersection
// after extraction).  Ordinary connectors match by names_match.
bool match(const Connector& a, const Connector& b);

}  // namespace lg
