#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lg/dictionary.hpp"

namespace lg {

struct CfgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Greibach normal form: every production is  A -> x A1 ... Ak  (k >= 0) with
// x a terminal.  The start variable has exactly one production and never
// appears on a right side.
struct GnfGrammar {
    struct Prod {
        std::string lhs;
        std::string terminal;
        std::vector<std::string> vars;
    };
    std::vector<Prod> prods;
    std::string start;
    std::set<std::string> variables;
    std::set<std::string> terminals;

    void validate() const;  // throws CfgError on invariant violation
};

// One production per line: "A -> x A1 A2".  The first production's left side
// is the start variable.  '%' starts a comment.
GnfGrammar parse_gnf(const std::string& text);

// General CFG with integer variables; rhs symbols are terminals (strings) or
// variables (ids).  Production bodies may be empty (epsilon).
struct CfgGrammar {
    struct Sym {
        bool terminal;
        std::string word;  // terminal
        int var = -1;      // variable
    };
    struct Prod {
        int lhs;
        std::vector<Sym> rhs;
    };
    std::vector<std::string> var_names;
    std::vector<Prod> prods;
    int start = 0;

    std::string print() const;
    // Earley recognition over a token sequence.
    bool accepts(const std::vector<std::string>& words) const;
};

// Per production A -> x A1...Ak the word x gains the disjunct
// ((A)(Ak,...,A1)); the start variable's production drops the left
// connector.  Variable names that aren't plain upper-case heads are renamed.
Dictionary gnf_to_link_grammar(const GnfGrammar& g);

// The reverse construction for basic link grammars (no multi-connectors, no
// subscripts): variables V_alpha over pairs of connector-name sequences,
// generated lazily from the start productions.
CfgGrammar link_grammar_to_cfg(const Dictionary& d);

using Acceptor = std::function<bool(const std::vector<std::string>&)>;

struct EquivReport {
    uint64_t strings_checked = 0;
    // (sequence, accepted by A, accepted by B)
    std::vector<std::tuple<std::vector<std::string>, bool, bool>> disagreements;
    bool agree() const { return disagreements.empty(); }
};

// Enumerates every sequence over the alphabet with 1 <= length <= maxlen and
// reports where the two acceptors disagree.  Refuses when the total string
// count would exceed one million.
EquivReport language_equiv_check(const Acceptor& a, const Acceptor& b,
                                 const std::vector<std::string>& alphabet, int maxlen,
                                 size_t max_report = 20);

// A dictionary-backed acceptor using the full parser pipeline.
Acceptor dictionary_acceptor(const Dictionary& d);
Acceptor cfg_acceptor(const CfgGrammar& g);

}  // namespace lg
