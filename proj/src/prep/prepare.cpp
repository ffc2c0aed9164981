#include "lg/prepare.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace lg {

UnknownWordError::UnknownWordError(std::vector<std::string> off)
    : std::runtime_error([&off] {
          std::string m = "unknown word";
          if (off.size() > 1) m += "s";
          m += ":";
          for (auto& w : off) m += " '" + w + "'";
          return m;
      }()),
      offenders(std::move(off)) {}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> raw;
    std::string cur;
    for (char c : line) {
        if (std::isspace((unsigned char)c)) {
            if (!cur.empty()) { raw.push_back(cur); cur.clear(); }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) raw.push_back(cur);

    // sentence-final period / question mark
    if (!raw.empty()) {
        std::string& last = raw.back();
        while (last.size() > 0 && (last.back() == '.' || last.back() == '?')) last.pop_back();
        if (last.empty()) raw.pop_back();
    }

    std::vector<std::string> out;
    for (auto& t : raw) {
        if (t.size() > 1 && t.back() == ',') {
            out.push_back(t.substr(0, t.size() - 1));
            out.push_back(",");
        } else {
            out.push_back(t);
        }
    }
    return out;
}

namespace {

bool is_capitalized(const std::string& t) {
    return !t.empty() && std::isupper((unsigned char)t[0]);
}

std::string lowercased(const std::string& t) {
    std::string s = t;
    for (auto& c : s) c = (char)std::tolower((unsigned char)c);
    return s;
}

bool is_coordinator_token(const std::string& t) {
    return t == "and" || t == "or" || t == "nor" || t == ",";
}

// Builds the SentenceWord for one token, or nullopt if unresolvable.
std::optional<SentenceWord> resolve_one(const Dictionary& d, const std::string& token,
                                        bool initial, const PrepareOptions& opts) {
    SentenceWord w;
    w.surface = token;
    w.displays.push_back(token);
    w.is_coordinator = is_coordinator_token(token);

    auto add_branches = [&](const std::vector<Dictionary::Branch>& branches) {
        for (auto& b : branches) {
            int disp = 0;
            if (b.display != token) {
                disp = (int)w.displays.size();
                w.displays.push_back(b.display);
            }
            for (auto& dj : *b.disjuncts) w.push_disjunct(dj, disp);
        }
    };

    auto proper_noun = [&]() -> bool {
        auto pn = d.lookup_word(kProperNounKey);
        if (pn.empty()) return false;
        for (auto& b : pn)
            for (auto& dj : *b.disjuncts) w.push_disjunct(dj, 0);
        return true;
    };

    if (initial) {
        auto low = d.lookup_word(lowercased(token));
        if (!low.empty() && lowercased(token) != token) {
            // display keeps the typed surface
            for (auto& b : low) {
                int disp = 0;
                if (b.display != lowercased(token)) {
                    disp = (int)w.displays.size();
                    w.displays.push_back(b.display);
                }
                for (auto& dj : *b.disjuncts) w.push_disjunct(dj, disp);
            }
            return w;
        }
        auto exact = d.lookup_word(token);
        if (!exact.empty()) { add_branches(exact); return w; }
        if (is_capitalized(token) && proper_noun()) return w;
    } else {
        auto exact = d.lookup_word(token);
        if (!exact.empty()) { add_branches(exact); return w; }
        if (is_capitalized(token) && proper_noun()) return w;
    }

    // empty set for now; coordination synthesizes the disjuncts later
    if (opts.coordination && w.is_coordinator) return w;
    return std::nullopt;
}

}  // namespace

std::vector<std::vector<SentenceWord>> resolve_tokens(const Dictionary& d,
                                                      const std::vector<std::string>& tokens_in,
                                                      const PrepareOptions& opts) {
    // possessive split, driven purely by dictionary presence of "'s"
    std::vector<std::string> tokens;
    bool has_poss = d.has("'s");
    for (auto& t : tokens_in) {
        if (has_poss && t.size() > 2 && t.ends_with("'s")) {
            tokens.push_back(t.substr(0, t.size() - 2));
            tokens.push_back("'s");
        } else {
            tokens.push_back(t);
        }
    }

    // all segmentations over idiom sites (fused and unfused per site)
    struct Seg { std::vector<std::pair<int, int>> pieces; };  // [begin,end) ; end-begin>1 = idiom
    std::vector<Seg> segs;
    std::vector<std::pair<int, int>> acc;
    const int n = (int)tokens.size();

    auto idiom_at = [&](int i) {
        std::vector<int> lens;
        for (int len = 2; i + len <= n; ++len) {
            std::string key = tokens[i];
            for (int k = 1; k < len; ++k) key += " " + tokens[i + k];
            if (d.idioms().count(key)) lens.push_back(len);
        }
        return lens;
    };

    std::function<void(int)> walk = [&](int i) {
        if ((int)segs.size() >= opts.max_candidates) return;
        if (i == n) { segs.push_back({acc}); return; }
        acc.emplace_back(i, i + 1);
        walk(i + 1);
        acc.pop_back();
        for (int len : idiom_at(i)) {
            acc.emplace_back(i, i + len);
            walk(i + len);
            acc.pop_back();
        }
    };
    walk(0);

    std::vector<std::vector<SentenceWord>> out;
    std::set<std::string> missing;
    for (auto& seg : segs) {
        std::vector<SentenceWord> seq;
        bool ok = true;
        for (size_t p = 0; p < seg.pieces.size(); ++p) {
            auto [b, e] = seg.pieces[p];
            std::string text = tokens[b];
            for (int k = b + 1; k < e; ++k) text += " " + tokens[k];
            auto w = resolve_one(d, text, p == 0, opts);
            if (!w) {
                ok = false;
                missing.insert(text);
                continue;
            }
            w->span_begin = b;
            w->span_end = e;
            seq.push_back(std::move(*w));
        }
        if (ok) out.push_back(std::move(seq));
    }
    if (out.empty() && !tokens.empty())
        throw UnknownWordError({missing.begin(), missing.end()});
    return out;
}

PreparedSentence attach_wall(std::vector<SentenceWord> seq, const Dictionary& d,
                             const std::string& origin) {
    PreparedSentence s;
    s.origin = origin;

    Connector wa_right;
    wa_right.name = ConnectorName("WA");
    wa_right.dir = Dir::Right;
    Connector wa_left;
    wa_left.name = ConnectorName("WA");
    wa_left.dir = Dir::Left;

    SentenceWord wall;
    wall.surface = kWallToken;
    wall.displays.push_back(kWallToken);
    wall.is_wall = true;
    wall.span_begin = wall.span_end = 0;
    wall.push_disjunct(Disjunct{{}, {wa_right}, 0});
    if (const DictEntry* e = d.find(kWallEntryKey))
        for (auto& dj : e->disjuncts) wall.push_disjunct(dj, 0);
    s.words.push_back(std::move(wall));

    if (!seq.empty()) {
        // duplicate each disjunct of the first real word; the duplicate gets a
        // WA- hook at the far (outermost) end of its left list
        SentenceWord& first = seq.front();
        size_t base = first.disjuncts.size();
        for (size_t i = 0; i < base; ++i) {
            Disjunct dup = first.disjuncts[i];
            dup.left.push_back(wa_left);
            first.push_disjunct(std::move(dup), first.display_of_disjunct[i]);
        }
    }
    for (auto& w : seq) s.words.push_back(std::move(w));
    return s;
}

std::vector<PreparedSentence> prepare(const Dictionary& d, const std::string& line,
                                      const PrepareOptions& opts) {
    auto tokens = tokenize(line);
    if (tokens.empty()) return {};
    std::vector<PreparedSentence> out;
    for (auto& seq : resolve_tokens(d, tokens, opts))
        out.push_back(attach_wall(std::move(seq), d, line));
    return out;
}

}  // namespace lg
