#include "oracle.hpp"

#include <algorithm>
#include <set>

namespace lgtest {

using namespace lg;

namespace {

struct OpenItem {
    int word;
    int conn_idx;  // position in that disjunct's right list (nearest-first)
    Connector conn;
    int served = 0;
};

struct TracedLink {
    int lw, rw;
    int lconn, rconn;  // list positions at each end
    Connector lend, rend;
};

struct Walker {
    const PreparedSentence& s;
    int n;
    std::set<std::string> seen;
    std::vector<Linkage> out;
    uint64_t count = 0;

    explicit Walker(const PreparedSentence& sent) : s(sent), n((int)sent.words.size()) {}

    void emit(const std::vector<int>& chosen, const std::vector<TracedLink>& links) {
        std::string key;
        for (int c : chosen) key += std::to_string(c) + ",";
        std::vector<TracedLink> sorted = links;
        std::sort(sorted.begin(), sorted.end(), [](const TracedLink& a, const TracedLink& b) {
            return std::tie(a.lw, a.rw, a.lconn, a.rconn) < std::tie(b.lw, b.rw, b.lconn, b.rconn);
        });
        key += "/";
        for (auto& l : sorted)
            key += std::to_string(l.lw) + ":" + std::to_string(l.lconn) + "-" +
                   std::to_string(l.rw) + ":" + std::to_string(l.rconn) + ";";
        if (!seen.insert(key).second) return;

        Linkage lk;
        lk.chosen = chosen;
        for (auto& l : sorted) {
            Link link;
            link.left_word = l.lw;
            link.right_word = l.rw;
            link.left_end = l.lend;
            link.right_end = l.rend;
            link.label = link_label(l.lend, l.rend);
            lk.links.push_back(std::move(link));
        }
        if (!verify_linkage(s, lk)) return;
        ++count;
        out.push_back(std::move(lk));
    }

    // after the last word: every remaining open connector must be a served
    // multi-connector
    void finish(const std::vector<OpenItem>& stack, std::vector<int>& chosen,
                std::vector<TracedLink>& links) {
        for (auto& it : stack)
            if (!(it.conn.multi && it.served > 0)) return;
        emit(chosen, links);
    }

    void word(int i, const std::vector<OpenItem>& stack, std::vector<int>& chosen,
              std::vector<TracedLink>& links) {
        if (i == n) {
            finish(stack, chosen, links);
            return;
        }
        for (size_t d = 0; d < s.words[i].disjuncts.size(); ++d) {
            chosen[i] = (int)d;
            consume(i, (int)d, 0, stack, chosen, links, false);
        }
        chosen[i] = -1;
    }

    // li = next left connector of word i's disjunct d to satisfy;
    // current_served: the connector li has already taken at least one link
    void consume(int i, int d, int li, std::vector<OpenItem> stack, std::vector<int>& chosen,
                 std::vector<TracedLink>& links, bool current_served) {
        const Disjunct& dj = s.words[i].disjuncts[d];
        const auto& lefts = dj.left;

        // silently close a served multi on top (it takes no more links)
        if (!stack.empty() && stack.back().conn.multi && stack.back().served > 0) {
            std::vector<OpenItem> popped = stack;
            popped.pop_back();
            consume(i, d, li, std::move(popped), chosen, links, current_served);
        }

        if (li == (int)lefts.size()) {
            // done; push this word's right connectors, outermost first
            for (size_t r = dj.right.size(); r-- > 0;)
                stack.push_back({i, (int)r, dj.right[r], 0});
            word(i + 1, stack, chosen, links);
            return;
        }

        const Connector& c = lefts[li];
        // a multi connector that has taken a link may stop here
        if (c.multi && current_served) consume(i, d, li + 1, stack, chosen, links, false);
        if (stack.empty()) return;

        OpenItem top = stack.back();
        if (!match(top.conn, c)) return;

        TracedLink tl{top.word, i, top.conn_idx, li, top.conn, c};
        links.push_back(tl);

        // pop the partner
        {
            std::vector<OpenItem> popped = stack;
            popped.pop_back();
            if (c.multi) consume(i, d, li, popped, chosen, links, true);
            consume(i, d, li + 1, std::move(popped), chosen, links, false);
        }
        // keep the partner open (multi): it may serve later words, so nothing
        // deeper may link here; this must complete the left list
        if (top.conn.multi && li + 1 == (int)lefts.size()) {
            std::vector<OpenItem> kept = stack;
            kept.back().served++;
            consume(i, d, li + 1, std::move(kept), chosen, links, false);
        }
        links.pop_back();
    }

    void run() {
        std::vector<int> chosen(n, -1);
        std::vector<TracedLink> links;
        word(0, {}, chosen, links);
    }
};

}  // namespace

OracleResult oracle_enumerate(const PreparedSentence& s) {
    Walker w(s);
    w.run();
    return {w.count, std::move(w.out)};
}

std::vector<std::vector<std::string>> vocabulary_sequences(const Dictionary& d, int length) {
    std::vector<std::string> vocab;
    for (auto& [key, e] : d.entries())
        if (key != kWallEntryKey && key.find(' ') == std::string::npos) vocab.push_back(key);
    std::vector<std::vector<std::string>> out;
    std::vector<int> idx(length, 0);
    if (length == 0 || vocab.empty()) return out;
    for (;;) {
        std::vector<std::string> seq;
        for (int i : idx) seq.push_back(vocab[i]);
        out.push_back(std::move(seq));
        int p = length - 1;
        while (p >= 0 && ++idx[p] == (int)vocab.size()) idx[p--] = 0;
        if (p < 0) break;
    }
    return out;
}

PreparedSentence prepare_one(const Dictionary& d, const std::string& line) {
    auto all = prepare(d, line);
    if (all.size() != 1) throw std::runtime_error("expected one candidate for: " + line);
    return std::move(all[0]);
}

}  // namespace lgtest
