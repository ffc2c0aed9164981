#pragma once

#include <string>
#include <vector>

#include "lg/engine.hpp"

namespace lg {

// True when `label` is at least as specific as `pattern`: heads equal and
// every specific subscript of the pattern present at the same position.
// (A THi pattern catches THi but not bare TH; SX catches SXsi.)
bool subsumes(const ConnectorName& pattern, const ConnectorName& label);

struct PostRule {
    enum class Kind { DomainRequires, Bounded, GroupRequires, GroupForbids };
    Kind kind;
    char domain_type = 0;        // DomainRequires / Bounded
    ConnectorName trigger;       // DomainRequires / Group*
    ConnectorName required;      // *Requires
    ConnectorName forbidden;     // GroupForbids
    ConnectorName exempt;        // GroupForbids, optional ("!pattern")
    bool has_exempt = false;
    std::string name;
};

struct PostConfig {
    struct Starter {
        ConnectorName pattern;
        char type;
    };
    std::vector<Starter> starters;
    std::vector<ConnectorName> restricted;
    std::vector<PostRule> rules;

    bool is_restricted(const ConnectorName& label) const;
};

// Config file format: one directive per line; '%' comments.
//   STARTER <name> <letter>
//   RESTRICTED <name>
//   DOMAIN_REQUIRES <letter> <trigger> <required> "<rule name>"
//   BOUNDED <letter> "<rule name>"
//   GROUP_REQUIRES <trigger> <required> "<rule name>"
//   GROUP_FORBIDS <trigger> <forbidden> [!<exempt>] "<rule name>"
PostConfig parse_post_config(const std::string& text, const std::string& provenance = "");

struct Domain {
    char type;
    int root_word;        // left end of the starter link
    int right_word;       // where membership search starts
    int starter;          // link index; not a member of its own domain
    std::vector<int> members;  // link indices, sorted
};

struct DomainStructure {
    std::vector<Domain> domains;                 // in starter-link order
    std::vector<std::vector<int>> link_domains;  // per link: domain ids, sorted
    std::vector<std::vector<int>> groups;        // partition by identical membership
};

// Membership: every link on a path from the starter's right word that never
// passes through the root word as an intermediate vertex; following a
// restricted link leftward stops the search there.
DomainStructure build_domains(const Linkage& lk, const PostConfig& cfg);

struct Violation {
    std::string name;     // e.g. "There rule 2"
    std::string display;  // e.g. "There rule 2 violated"
};

std::vector<Violation> check_rules(const DomainStructure& ds, const Linkage& lk,
                                   const PostConfig& cfg);

}  // namespace lg
