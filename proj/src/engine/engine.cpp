#include "lg/engine.hpp"

#include <algorithm>
#include <functional>

#include "lg/prune.hpp"

namespace lg {

ConnectorName link_label(const Connector& a, const Connector& b) {
    if (a.fat || b.fat) return ConnectorName("FAT");
    return intersect_names(a.name, b.name);
}

ParseContext::ParseContext(const PreparedSentence& s, EngineOptions opts)
    : sent_(s), opts_(opts), n_((int)s.words.size()) {
    cursors_.resize(1);  // id 0 = nil
    first_left_.resize(n_);
    first_right_.resize(n_);
    for (int w = 0; w < n_; ++w) {
        auto& word = s.words[w];
        first_left_[w].resize(word.disjuncts.size());
        first_right_[w].resize(word.disjuncts.size());
        for (size_t d = 0; d < word.disjuncts.size(); ++d) {
            const Disjunct& dj = word.disjuncts[d];
            auto build = [&](const std::vector<Connector>& list, Dir dir) -> int {
                // engine order is outermost-first; Disjunct lists are nearest-first
                int first = 0;
                int m = (int)list.size();
                for (int p = 0; p < m; ++p) {
                    // p = engine position (0 outermost) -> list index m-1-p
                    Cursor c;
                    c.conn = list[m - 1 - p];
                    c.word = w;
                    c.shallow = p == 0;
                    c.last = p == m - 1;
                    int dist = m - p;
                    c.nearest = dir == Dir::Left ? w - dist : w + dist;
                    if (opts_.nearest && !opts_.nearest->empty()) {
                        auto& b = opts_.nearest->bounds[w][d];
                        auto& vec = dir == Dir::Left ? b.first : b.second;
                        if (!vec.empty()) c.nearest = vec[m - 1 - p];
                    }
                    c.next = 0;
                    cursors_.push_back(std::move(c));
                    int id = (int)cursors_.size() - 1;
                    if (p == 0) first = id;
                    else cursors_[id - 1].next = id;
                }
                return first;
            };
            first_left_[w][d] = build(dj.left, Dir::Left);
            first_right_[w][d] = build(dj.right, Dir::Right);
        }
    }
    stats_.cursors = cursors_.size();
}

static inline uint64_t memo_key(int L, int R, int l, int r) {
    return ((uint64_t)l << 40) | ((uint64_t)r << 16) | ((uint64_t)(L & 0xff) << 8) |
           (uint64_t)(R & 0xff);
}

const std::vector<int>& ParseContext::candidates(int W, int l, int r) {
    if (opts_.fast_match) {
        scratch_.clear();
        opts_.fast_match->collect(W, l ? &cursors_[l].conn : nullptr,
                                  l ? cursors_[l].word : -1, r ? &cursors_[r].conn : nullptr,
                                  r ? cursors_[r].word : -1, scratch_);
        return scratch_;
    }
    scratch_.clear();
    for (size_t d = 0; d < sent_.words[W].disjuncts.size(); ++d) scratch_.push_back((int)d);
    return scratch_;
}

uint64_t ParseContext::link_counts(int L, int R, int a, int b) {
    uint64_t c = count(L, R, cursors_[a].next, cursors_[b].next);
    if (cursors_[a].conn.multi) c += count(L, R, a, cursors_[b].next);
    if (cursors_[b].conn.multi) c += count(L, R, cursors_[a].next, b);
    return c;
}

// Counts the ways to satisfy the word range strictly between L and R given
// the pending cursors l (remaining rights of L) and r (remaining lefts of R),
// both outermost-first.  Each partition word W contributes: both boundary
// links, the left link alone, or — only when l is exhausted, which is what
// keeps every solution generated exactly once — the right link alone.
// Multi-connector ends add the non-advancing calls in link_counts.
uint64_t ParseContext::count(int L, int R, int l, int r) {
    if (R == L + 1) return (l == 0 && r == 0) ? 1 : 0;
    uint64_t key = memo_key(L, R, l, r);
    if (opts_.memo) {
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    ++stats_.count_calls;

    int wlo = L + 1, whi = R - 1;
    if (opts_.clamp_by_nearest) {
        if (l) wlo = std::max(wlo, cursors_[l].nearest);
        if (r) whi = std::min(whi, cursors_[r].nearest);
    }

    uint64_t total = 0;
    for (int W = wlo; W <= whi; ++W) {
        // local copy: candidates() reuses scratch_ across recursion levels
        std::vector<int> cand = candidates(W, l, r);
        for (int d : cand) {
            int la = first_left_[W][d];
            int ra = first_right_[W][d];

            uint64_t leftcount = 0, rightcount = 0;
            if (l && la && match(cursors_[l].conn, cursors_[la].conn))
                leftcount = link_counts(L, W, l, la);
            if (ra && r && match(cursors_[ra].conn, cursors_[r].conn))
                rightcount = link_counts(W, R, ra, r);

            total += leftcount * rightcount;
            if (leftcount) total += leftcount * count(W, R, ra, r);
            if (rightcount && (l == 0 || !opts_.canonical_guard))
                total += rightcount * count(L, W, l, la);
        }
    }
    if (opts_.memo) {
        memo_.emplace(key, total);
        stats_.memo_entries = memo_.size();
    }
    return total;
}

uint64_t ParseContext::count_linkages() {
    uint64_t t = 0;
    for (size_t d = 0; d < sent_.words[0].disjuncts.size(); ++d)
        if (first_left_[0][d] == 0) t += count(0, n_, first_right_[0][d], 0);
    return t;
}

Link ParseContext::make_link(int lw, int rw, int lcur, int rcur) const {
    Link lk;
    lk.left_word = lw;
    lk.right_word = rw;
    lk.left_end = cursors_[lcur].conn;
    lk.right_end = cursors_[rcur].conn;
    lk.label = link_label(lk.left_end, lk.right_end);
    return lk;
}

namespace {
// advance combinations for one link over cursors (a, b): both, keep-a, keep-b
struct Variant { int a, b; };
}  // namespace

// Extraction re-walks the count recursion, descending only into branches
// whose memoized sub-count is positive, in a fixed order: partition word,
// then disjunct, then term, then advance variant.
void ParseContext::solve(int L, int R, int l, int r, size_t budget, std::vector<Partial>& out) {
    if (out.size() >= budget) return;
    if (R == L + 1) {
        if (l == 0 && r == 0) out.push_back({});
        return;
    }
    if (count(L, R, l, r) == 0) return;

    int wlo = L + 1, whi = R - 1;
    if (opts_.clamp_by_nearest) {
        if (l) wlo = std::max(wlo, cursors_[l].nearest);
        if (r) whi = std::min(whi, cursors_[r].nearest);
    }

    auto variants = [&](int a, int b) {
        std::vector<Variant> v;
        v.push_back({cursors_[a].next, cursors_[b].next});
        if (cursors_[a].conn.multi) v.push_back({a, cursors_[b].next});
        if (cursors_[b].conn.multi) v.push_back({cursors_[a].next, b});
        return v;
    };

    // cross product of two sub-regions plus fixed extra links
    auto combine = [&](int L1, int R1, int l1, int r1, int L2, int R2, int l2, int r2,
                       std::vector<Link> extra, int W, int d) {
        if (count(L1, R1, l1, r1) == 0 || count(L2, R2, l2, r2) == 0) return;
        std::vector<Partial> as;
        solve(L1, R1, l1, r1, budget - out.size(), as);
        for (auto& a : as) {
            if (out.size() >= budget) return;
            std::vector<Partial> bs;
            solve(L2, R2, l2, r2, budget - out.size(), bs);
            for (auto& b : bs) {
                if (out.size() >= budget) return;
                Partial p;
                p.links = a.links;
                p.links.insert(p.links.end(), b.links.begin(), b.links.end());
                p.links.insert(p.links.end(), extra.begin(), extra.end());
                p.chosen = a.chosen;
                p.chosen.insert(p.chosen.end(), b.chosen.begin(), b.chosen.end());
                p.chosen.emplace_back(W, d);
                out.push_back(std::move(p));
            }
        }
    };

    for (int W = wlo; W <= whi && out.size() < budget; ++W) {
        std::vector<int> cand = candidates(W, l, r);
        for (int d : cand) {
            if (out.size() >= budget) break;
            int la = first_left_[W][d];
            int ra = first_right_[W][d];
            bool lmatch = l && la && match(cursors_[l].conn, cursors_[la].conn);
            bool rmatch = ra && r && match(cursors_[ra].conn, cursors_[r].conn);

            if (lmatch && rmatch) {
                for (auto [al, bl] : variants(l, la))
                    for (auto [ar, br] : variants(ra, r))
                        combine(L, W, al, bl, W, R, ar, br,
                                {make_link(L, W, l, la), make_link(W, R, ra, r)}, W, d);
            }
            if (lmatch) {
                for (auto [al, bl] : variants(l, la))
                    combine(L, W, al, bl, W, R, ra, r, {make_link(L, W, l, la)}, W, d);
            }
            if (rmatch && (l == 0 || !opts_.canonical_guard)) {
                for (auto [ar, br] : variants(ra, r))
                    combine(L, W, l, la, W, R, ar, br, {make_link(W, R, ra, r)}, W, d);
            }
        }
    }
}

std::vector<Linkage> ParseContext::extract_linkages(size_t max) {
    count_linkages();  // warm the memo so solve() only descends live branches
    std::vector<Linkage> out;
    for (size_t d = 0; d < sent_.words[0].disjuncts.size() && out.size() < max; ++d) {
        if (first_left_[0][d] != 0) continue;
        std::vector<Partial> parts;
        solve(0, n_, first_right_[0][d], 0, max - out.size(), parts);
        for (auto& p : parts) {
            Linkage lk;
            lk.chosen.assign(n_, -1);
            lk.chosen[0] = (int)d;
            for (auto [w, dd] : p.chosen) lk.chosen[w] = dd;
            lk.links = std::move(p.links);
            std::sort(lk.links.begin(), lk.links.end(), [](const Link& a, const Link& b) {
                return a.left_word != b.left_word ? a.left_word < b.left_word
                                                  : a.right_word < b.right_word;
            });
            out.push_back(std::move(lk));
        }
    }
    return out;
}

uint64_t count_linkages(const PreparedSentence& s, EngineOptions opts) {
    return ParseContext(s, opts).count_linkages();
}

std::vector<Linkage> extract_linkages(const PreparedSentence& s, size_t max, EngineOptions opts) {
    return ParseContext(s, opts).extract_linkages(max);
}

bool links_planar(const std::vector<Link>& links) {
    for (size_t i = 0; i < links.size(); ++i)
        for (size_t j = i + 1; j < links.size(); ++j) {
            const Link &a = links[i], &b = links[j];
            if (a.left_word < b.left_word && b.left_word < a.right_word &&
                a.right_word < b.right_word)
                return false;
            if (b.left_word < a.left_word && a.left_word < b.right_word &&
                b.right_word < a.right_word)
                return false;
        }
    return true;
}

bool links_connected(size_t words, const std::vector<Link>& links) {
    if (words <= 1) return true;
    std::vector<int> parent(words);
    for (size_t i = 0; i < words; ++i) parent[i] = (int)i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& l : links) parent[find(l.left_word)] = find(l.right_word);
    int root = find(0);
    for (size_t i = 1; i < words; ++i)
        if (find((int)i) != root) return false;
    return true;
}

bool links_exclusive(const std::vector<Link>& links) {
    std::vector<std::pair<int, int>> pairs;
    for (auto& l : links) pairs.emplace_back(l.left_word, l.right_word);
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

namespace {

// Per-word satisfaction: the word's link ends, ordered near to far, must
// partition into consecutive nonempty runs matching the chosen connector
// list in order; runs longer than one need a multi-connector.
bool side_satisfiable(const std::vector<const Link*>& links, bool left_side,
                      const std::vector<Connector>& conns) {
    size_t nl = links.size(), nc = conns.size();
    // dp[i][j]: connectors i.. can absorb links j..
    std::vector<std::vector<char>> dp(nc + 1, std::vector<char>(nl + 1, 0));
    dp[nc][nl] = 1;
    for (size_t i = nc; i-- > 0;) {
        for (size_t j = nl; j-- > 0;) {
            const Connector& me = left_side ? links[j]->right_end : links[j]->left_end;
            const Connector& other = left_side ? links[j]->left_end : links[j]->right_end;
            if (!me.same_shape(conns[i])) continue;
            bool ok = left_side ? match(other, me) : match(me, other);
            if (!ok) continue;
            if (dp[i + 1][j + 1]) dp[i][j] = 1;
            else if (conns[i].multi && dp[i][j + 1]) dp[i][j] = 1;
        }
    }
    return dp[0][0];
}

}  // namespace

bool verify_linkage(const PreparedSentence& s, const Linkage& lk) {
    size_t n = s.words.size();
    for (auto& l : lk.links) {
        if (l.left_word < 0 || l.right_word >= (int)n || l.left_word >= l.right_word)
            return false;
    }
    if (!links_planar(lk.links)) return false;
    if (!links_exclusive(lk.links)) return false;
    if (!links_connected(n, lk.links)) return false;
    if (lk.chosen.size() != n) return false;

    for (size_t w = 0; w < n; ++w) {
        int d = lk.chosen[w];
        if (d < 0 || d >= (int)s.words[w].disjuncts.size()) return false;
        const Disjunct& dj = s.words[w].disjuncts[d];

        std::vector<const Link*> lefts, rights;  // links toward each side
        for (auto& l : lk.links) {
            if (l.right_word == (int)w) lefts.push_back(&l);
            if (l.left_word == (int)w) rights.push_back(&l);
        }
        // near-to-far ordering
        std::sort(lefts.begin(), lefts.end(),
                  [](const Link* a, const Link* b) { return a->left_word > b->left_word; });
        std::sort(rights.begin(), rights.end(),
                  [](const Link* a, const Link* b) { return a->right_word < b->right_word; });
        if (!side_satisfiable(lefts, true, dj.left)) return false;
        if (!side_satisfiable(rights, false, dj.right)) return false;
    }
    return true;
}

}  // namespace lg
