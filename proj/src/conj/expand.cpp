#include <algorithm>
#include <map>

#include "lg/conjunctions.hpp"

namespace lg {

namespace {

bool is_andor(const SentenceWord& w) {
    return w.is_coordinator && w.surface != ",";
}

struct Catalog {
    std::map<std::string, FatRef> sigs;

    FatRef intern(FatSig sig) {
        std::string key = sig.str();
        auto it = sigs.find(key);
        if (it != sigs.end()) return it->second;
        auto ref = std::make_shared<const FatSig>(std::move(sig));
        sigs.emplace(std::move(key), ref);
        return ref;
    }
};

Connector fat_conn(FatRef sig, Dir dir, uint8_t priority) {
    Connector c;
    c.name = ConnectorName("FAT");
    c.dir = dir;
    c.priority = priority;
    c.fat = std::move(sig);
    return c;
}

bool allowlisted(const FatSig& sig, const CoordOptions& opts) {
    if (opts.allowlist.empty()) return true;
    for (auto& n : sig.left)
        if (!opts.allowlist.count(n.head)) return false;
    for (auto& n : sig.right)
        if (!opts.allowlist.count(n.head)) return false;
    return true;
}

void add_unique(SentenceWord& w, Disjunct d, int display_idx) {
    for (auto& ex : w.disjuncts)
        if (ex.same_shape(d)) return;
    w.push_disjunct(std::move(d), display_idx);
}

}  // namespace

bool expand_for_coordination(PreparedSentence& s, const CoordOptions& opts) {
    bool trigger = false;
    for (auto& w : s.words)
        if (is_andor(w)) trigger = true;
    if (!trigger) return false;

    Catalog cat;

    // (a) word fat disjuncts: every non-empty trailing sub-disjunct of every
    // disjunct is replaced by one fat connector, pointing left or right,
    // placed at the far end of its list.
    for (size_t wi = 1; wi < s.words.size(); ++wi) {
        SentenceWord& w = s.words[wi];
        size_t base = w.disjuncts.size();
        for (size_t di = 0; di < base; ++di) {
            const Disjunct d = w.disjuncts[di];  // copy; we append below
            int disp = w.display_of_disjunct[di];
            for (size_t k = 0; k <= d.left.size(); ++k) {
                for (size_t j = 0; j <= d.right.size(); ++j) {
                    if (k == d.left.size() && j == d.right.size()) continue;  // empty sub
                    FatSig sig;
                    for (size_t i = k; i < d.left.size(); ++i) sig.left.push_back(d.left[i].name);
                    for (size_t i = j; i < d.right.size(); ++i) sig.right.push_back(d.right[i].name);
                    if (!allowlisted(sig, opts)) continue;
                    FatRef ref = cat.intern(std::move(sig));

                    Disjunct keep;
                    keep.cost = d.cost;
                    keep.left.assign(d.left.begin(), d.left.begin() + k);
                    keep.right.assign(d.right.begin(), d.right.begin() + j);

                    Disjunct lv = keep;  // fat pointing left, far end of left list
                    lv.left.push_back(fat_conn(ref, Dir::Left, 1));
                    add_unique(w, std::move(lv), disp);

                    Disjunct rv = keep;  // fat pointing right
                    rv.right.push_back(fat_conn(ref, Dir::Right, 1));
                    add_unique(w, std::move(rv), disp);
                }
            }
        }
    }

    // (b) coordinator disjuncts: for each catalog signature F, and for each
    // split of its ordinary connectors into kept-outward prefix and delegated
    // suffix G, two disjuncts with F2 nearest on both sides.  The full-kept
    // split is the impersonation disjunct; the nothing-kept split yields the
    // comma-style chain and the left-nesting disjunct.  Outward right-pointing
    // subject connectors are renamed Sp (two anded subjects become plural).
    std::vector<std::pair<std::string, FatRef>> items(cat.sigs.begin(), cat.sigs.end());
    auto coordinator_disjuncts = [&](const FatRef& F) {
        std::vector<Disjunct> out;
        const FatSig& sig = *F;
        for (size_t k = 0; k <= sig.left.size(); ++k) {
            for (size_t j = 0; j <= sig.right.size(); ++j) {
                bool full = k == sig.left.size() && j == sig.right.size();
                Disjunct base;
                base.left.push_back(fat_conn(F, Dir::Left, 2));
                base.right.push_back(fat_conn(F, Dir::Right, 2));
                for (size_t i = 0; i < k; ++i) {
                    Connector c;
                    c.name = sig.left[i];
                    c.dir = Dir::Left;
                    base.left.push_back(c);
                }
                for (size_t i = 0; i < j; ++i) {
                    Connector c;
                    c.name = sig.right[i];
                    if (c.name.head == "S") c.name = ConnectorName("S", "p");
                    c.dir = Dir::Right;
                    base.right.push_back(c);
                }
                if (full) {
                    out.push_back(std::move(base));
                    continue;
                }
                FatSig sub;
                sub.left.assign(sig.left.begin() + k, sig.left.end());
                sub.right.assign(sig.right.begin() + j, sig.right.end());
                FatRef G = cat.intern(std::move(sub));
                Disjunct lv = base;
                lv.left.push_back(fat_conn(G, Dir::Left, 1));
                out.push_back(std::move(lv));
                Disjunct rv = std::move(base);
                rv.right.push_back(fat_conn(G, Dir::Right, 1));
                out.push_back(std::move(rv));
            }
        }
        return out;
    };

    Connector hook_out;  // comma side: XCA# so no dictionary name can match it
    hook_out.name = ConnectorName(kCommaHookHead, "#");
    hook_out.dir = Dir::Right;
    Connector hook_in;
    hook_in.name = ConnectorName(kCommaHookHead);
    hook_in.dir = Dir::Left;

    for (size_t wi = 1; wi < s.words.size(); ++wi) {
        SentenceWord& w = s.words[wi];
        if (!w.is_coordinator) continue;
        if (is_andor(w)) {
            bool pre_comma = wi > 1 && s.words[wi - 1].is_coordinator &&
                             s.words[wi - 1].surface == ",";
            for (auto& [key, F] : items) {
                for (auto& d : coordinator_disjuncts(F)) {
                    if (pre_comma) {
                        Disjunct dup = d;
                        dup.left.insert(dup.left.begin(), hook_in);
                        add_unique(w, std::move(dup), 0);
                    }
                    add_unique(w, std::move(d), 0);
                }
            }
        } else {
            // comma: chain disjuncts ((G2)(G2,G1)) with the priority-1 link
            // pointing right, plus the pre-coordinator hook
            for (auto& [key, G] : items) {
                Disjunct chain;
                chain.left.push_back(fat_conn(G, Dir::Left, 2));
                chain.right.push_back(fat_conn(G, Dir::Right, 2));
                chain.right.push_back(fat_conn(G, Dir::Right, 1));
                add_unique(w, std::move(chain), 0);
            }
            bool before_andor = wi + 1 < s.words.size() && is_andor(s.words[wi + 1]);
            if (before_andor) {
                Disjunct hook;
                hook.right.push_back(hook_out);
                add_unique(w, std::move(hook), 0);
            }
        }
    }
    return true;
}

}  // namespace lg
