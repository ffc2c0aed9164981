#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lg/expression.hpp"

namespace lg {

struct DictError : std::runtime_error {
    int line = 0, col = 0;
    DictError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(col_)),
          line(line_), col(col_) {}
};

struct DictSource {
    std::string text;
    std::string provenance;  // path or asset name
};

struct DictEntry {
    ExprPtr expr;
    std::vector<Disjunct> disjuncts;  // cached expansion
    int line = 0;
};

// A compiled dictionary.  Immutable after load; shareable across threads.
class Dictionary {
public:
    // One lookup alternative for a surface token.  `display` is the token as
    // it should render (the surface plus the chosen suffix, if any).
    struct Branch {
        std::string key;      // dictionary key, e.g. "can.v"
        std::string display;  // e.g. "can.v"
        const std::vector<Disjunct>* disjuncts;
    };

    const std::map<std::string, DictEntry>& entries() const { return entries_; }
    const std::set<std::string>& idioms() const { return idioms_; }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }
    const DictEntry* find(const std::string& key) const;

    // Exact entry first; otherwise the union of suffixed variants
    // (token.x1, token.x2, ...), each branch remembering its display form.
    // Empty result means the token is unknown.
    std::vector<Branch> lookup_word(const std::string& token) const;

    // Re-serialize in dictionary syntax (round-trip tested).
    std::string print() const;

    friend Dictionary parse_dictionary(const DictSource&);

private:
    std::map<std::string, DictEntry> entries_;
    std::set<std::string> idioms_;                              // keys with spaces
    std::map<std::string, std::vector<std::string>> suffixes_;  // base -> keys
};

// Parses dictionary text.  Entries are "word ... : formula ;" with '&'
// binding tighter than 'or', "{e}" optional, "[e]" a +1 cost bracket per
// connector satisfied inside, "()" the empty formula, and '%' starting a
// comment.  A word written with underscores ("last_week") defines an idiom
// keyed by the space-joined token sequence.  Redefinition is an error.
Dictionary parse_dictionary(const DictSource& src);

// The bundled abridged English dictionary.
const Dictionary& load_abridged();

// Text of bundled assets (also used by tests and the CLI default).
const std::string& abridged_dict_text();
const std::string& default_postprocess_text();

}  // namespace lg
