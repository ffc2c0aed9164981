#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lg/dictionary.hpp"

namespace lg {

inline constexpr const char* kWallToken = "/////";
inline constexpr const char* kWallEntryKey = "WALL";
inline constexpr const char* kProperNounKey = "John";

// One slot of a prepared sentence.  Disjunct sets are owned per sentence so
// the pipeline may rewrite them (coordination, pruning) without touching the
// dictionary.
struct SentenceWord {
    std::string surface;
    std::vector<Disjunct> disjuncts;
    // Display form per disjunct (index into displays); rendering picks the
    // one belonging to the chosen disjunct.
    std::vector<std::string> displays;      // displays[0] always = surface
    std::vector<int> display_of_disjunct;   // parallel to disjuncts
    int span_begin = 0, span_end = 0;       // raw-token range [begin, end)
    bool is_wall = false;
    bool is_coordinator = false;  // and/or/nor/comma slot

    const std::string& display_for(int disjunct_id) const {
        if (disjunct_id >= 0 && disjunct_id < (int)display_of_disjunct.size())
            return displays[display_of_disjunct[disjunct_id]];
        return surface;
    }
    void push_disjunct(Disjunct d, int display_idx = 0) {
        disjuncts.push_back(std::move(d));
        display_of_disjunct.push_back(display_idx);
    }
};

struct PreparedSentence {
    std::vector<SentenceWord> words;  // words[0] is the wall
    std::string origin;
    size_t size() const { return words.size(); }
};

struct UnknownWordError : std::runtime_error {
    std::vector<std::string> offenders;
    explicit UnknownWordError(std::vector<std::string> off);
};

// Whitespace tokenization; a trailing or standalone comma becomes its own
// token; a sentence-final '.' or '?' is stripped.
std::vector<std::string> tokenize(const std::string& line);

// Options controlling token resolution.
struct PrepareOptions {
    bool coordination = true;  // let and/or/nor/comma resolve with empty sets
    int max_candidates = 64;
};

// Capitalization policy, suffix resolution and idiom alternatives.  Returns
// every candidate word sequence (fused/unfused per idiom site).  Throws
// UnknownWordError when no candidate resolves every token.
std::vector<std::vector<SentenceWord>> resolve_tokens(const Dictionary& d,
                                                      const std::vector<std::string>& tokens,
                                                      const PrepareOptions& opts = {});

// Prepends the wall word and duplicates the first real word's disjuncts with
// a WA- hook at the far end of the left list.  The wall's disjunct set is
// (()(WA+)) plus the expansion of the WALL entry when the dictionary has one.
PreparedSentence attach_wall(std::vector<SentenceWord> seq, const Dictionary& d,
                             const std::string& origin);

// tokenize + resolve + attach_wall for every candidate sequence.
std::vector<PreparedSentence> prepare(const Dictionary& d, const std::string& line,
                                      const PrepareOptions& opts = {});

}  // namespace lg
