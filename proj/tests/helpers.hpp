#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "lg/dictionary.hpp"
#include "lg/prepare.hpp"

namespace lgtest {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string asset_path(const std::string& name) {
    return std::string(LG_ASSET_DIR) + "/" + name;
}

inline std::string corpus_path(const std::string& name) {
    return std::string(LG_CORPUS_DIR) + "/" + name;
}

inline lg::Dictionary load_dict_asset(const std::string& name) {
    return lg::parse_dictionary({read_file(asset_path(name)), name});
}

// A bare word sequence with exact-lookup disjuncts: no wall, no
// capitalization policy.  For engine-level tests.
inline lg::PreparedSentence raw_sentence(const lg::Dictionary& d,
                                         const std::vector<std::string>& tokens) {
    lg::PreparedSentence s;
    s.origin = "";
    for (auto& t : tokens) {
        const lg::DictEntry* e = d.find(t);
        if (!e) throw std::runtime_error("raw_sentence: unknown " + t);
        lg::SentenceWord w;
        w.surface = t;
        w.displays.push_back(t);
        for (auto& dj : e->disjuncts) w.push_disjunct(dj, 0);
        s.words.push_back(std::move(w));
    }
    return s;
}

struct CorpusLine {
    std::string text;
    bool expect_accept;
};

inline std::vector<CorpusLine> load_corpus(const std::string& name) {
    std::istringstream in(read_file(corpus_path(name)));
    std::vector<CorpusLine> out;
    std::string raw;
    while (std::getline(in, raw)) {
        size_t b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        raw = raw.substr(b);
        if (raw[0] == '%') continue;
        bool reject = raw[0] == '*';
        if (reject) raw = raw.substr(1);
        out.push_back({raw, !reject});
    }
    return out;
}

}  // namespace lgtest
