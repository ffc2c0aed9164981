#include "lg/prune.hpp"

#include <algorithm>
#include <set>

namespace lg {

std::string connector_hash_key(const Connector& c) {
    if (c.fat) return "\x01";  // fat connectors share one bucket
    return c.name.head;
}

namespace {

void filter_word(SentenceWord& w, const std::vector<char>& keep) {
    std::vector<Disjunct> dj;
    std::vector<int> disp;
    dj.reserve(w.disjuncts.size());
    for (size_t i = 0; i < w.disjuncts.size(); ++i) {
        if (!keep[i]) continue;
        dj.push_back(std::move(w.disjuncts[i]));
        disp.push_back(w.display_of_disjunct[i]);
    }
    w.disjuncts = std::move(dj);
    w.display_of_disjunct = std::move(disp);
}

void record_row(PruneStats& st, const PreparedSentence& s, const std::string& label) {
    std::vector<size_t> row;
    row.reserve(s.words.size());
    for (auto& w : s.words) row.push_back(w.disjuncts.size());
    st.row_labels.push_back(label);
    st.rows.push_back(std::move(row));
}

// Running connector set, bucketed by head.  Shape-deduplicated: buckets stay
// small even when hundreds of disjuncts carry the same connector.
class ConnSet {
public:
    void add(const Connector& c) {
        if (!seen_.insert(c.str()).second) return;
        buckets_[connector_hash_key(c)].push_back(c);
    }
    // any member m with match(m, c) (left-to-right orientation: m right, c left)
    bool matches_left(const Connector& c) const {
        auto it = buckets_.find(connector_hash_key(c));
        if (it == buckets_.end()) return false;
        for (auto& m : it->second)
            if (match(m, c)) return true;
        return false;
    }
    // any member m with match(c, m) (c right, m left)
    bool matches_right(const Connector& c) const {
        auto it = buckets_.find(connector_hash_key(c));
        if (it == buckets_.end()) return false;
        for (auto& m : it->second)
            if (match(c, m)) return true;
        return false;
    }

private:
    std::unordered_map<std::string, std::vector<Connector>> buckets_;
    std::set<std::string> seen_;
};

}  // namespace

PruneStats prune(PreparedSentence& s) {
    PruneStats st;
    record_row(st, s, "initial");
    const int n = (int)s.words.size();
    bool left_to_right = true;
    for (;;) {
        size_t deleted = 0;
        if (left_to_right) {
            ConnSet set;
            for (int w = 0; w < n; ++w) {
                std::vector<char> keep(s.words[w].disjuncts.size(), 1);
                for (size_t d = 0; d < s.words[w].disjuncts.size(); ++d) {
                    for (auto& c : s.words[w].disjuncts[d].left)
                        if (!set.matches_left(c)) { keep[d] = 0; ++deleted; break; }
                }
                filter_word(s.words[w], keep);
                for (auto& dj : s.words[w].disjuncts)
                    for (auto& c : dj.right) set.add(c);
            }
            record_row(st, s, "after L->R");
        } else {
            ConnSet set;
            for (int w = n - 1; w >= 0; --w) {
                std::vector<char> keep(s.words[w].disjuncts.size(), 1);
                for (size_t d = 0; d < s.words[w].disjuncts.size(); ++d) {
                    for (auto& c : s.words[w].disjuncts[d].right)
                        if (!set.matches_right(c)) { keep[d] = 0; ++deleted; break; }
                }
                filter_word(s.words[w], keep);
                for (auto& dj : s.words[w].disjuncts)
                    for (auto& c : dj.left) set.add(c);
            }
            record_row(st, s, "after R->L");
        }
        ++st.passes;
        if (st.passes > 1 && deleted == 0) break;
        left_to_right = !left_to_right;
    }
    return st;
}

namespace {

// One live connector with the bookkeeping power pruning consults.
struct PConn {
    const Connector* c;
    int nearest;
    bool shallow;  // outermost in its list
    bool last;     // nearest in its list
};

bool link_viable(const PConn& right_side, int v, const PConn& left_side, int w) {
    // right_side points right from word v, left_side points left from word w
    if (!match(*right_side.c, *left_side.c)) return false;
    if (w < right_side.nearest || v > left_side.nearest) return false;  // criterion 1
    if (!right_side.shallow && !left_side.shallow) return false;  // criterion 2
    if (v + 1 == w) {
        if (!right_side.last || !left_side.last) return false;    // criterion 3
    } else {
        if (right_side.last && left_side.last && !right_side.c->multi && !left_side.c->multi)
            return false;                                         // criterion 4
    }
    return true;
}

}  // namespace

PowerPruneResult power_prune(PreparedSentence& s) {
    PowerPruneResult res;
    const int n = (int)s.words.size();

    // bounds[w][d] = (left bounds, right bounds), nearest-first like Disjunct
    auto& bounds = res.nearest.bounds;
    auto init_word = [&](int w) {
        auto& word = s.words[w];
        bounds[w].clear();
        bounds[w].resize(word.disjuncts.size());
        for (size_t d = 0; d < word.disjuncts.size(); ++d) {
            auto& dj = word.disjuncts[d];
            auto& b = bounds[w][d];
            b.first.resize(dj.left.size());
            b.second.resize(dj.right.size());
            // index 0 is the nearest connector: it starts one word away, each
            // farther connector one more
            for (size_t i = 0; i < dj.left.size(); ++i) b.first[i] = w - (int)(i + 1);
            for (size_t i = 0; i < dj.right.size(); ++i) b.second[i] = w + (int)(i + 1);
        }
    };
    bounds.resize(n);
    for (int w = 0; w < n; ++w) init_word(w);

    record_row(res.stats, s, "p.p. initial");

    auto gather = [&](int w, Dir dir, size_t d, std::vector<PConn>& out) {
        auto& dj = s.words[w].disjuncts[d];
        auto& list = dir == Dir::Left ? dj.left : dj.right;
        auto& bvec = dir == Dir::Left ? bounds[w][d].first : bounds[w][d].second;
        out.clear();
        int m = (int)list.size();
        for (int i = 0; i < m; ++i)
            out.push_back({&list[i], bvec[i], i == m - 1, i == 0});
    };

    bool left_to_right = true;
    int passes = 0;
    for (;;) {
        bool changed = false;

        // live per-word hash of connectors pointing toward the scan origin
        std::vector<std::unordered_map<std::string, std::vector<PConn>>> sets(n);
        auto fill_set = [&](int w, Dir dir) {
            sets[w].clear();
            std::vector<PConn> tmp;
            for (size_t d = 0; d < s.words[w].disjuncts.size(); ++d) {
                gather(w, dir, d, tmp);
                for (auto& pc : tmp) sets[w][connector_hash_key(*pc.c)].push_back(pc);
            }
        };

        if (left_to_right) {
            fill_set(0, Dir::Right);
            for (int w = 1; w < n; ++w) {
                auto& word = s.words[w];
                std::vector<char> keep(word.disjuncts.size(), 1);
                for (size_t d = 0; d < word.disjuncts.size(); ++d) {
                    auto& dj = word.disjuncts[d];
                    auto& bvec = bounds[w][d].first;
                    int prev_bound = w;  // deeper connectors link nearer
                    int m = (int)dj.left.size();
                    for (int i = 0; i < m && keep[d]; ++i) {  // i=0 deepest (nearest)
                        PConn me{&dj.left[i], bvec[i], i == m - 1, i == 0};
                        int start = std::min(bvec[i], prev_bound - 1);
                        int found = -1;
                        for (int v = start; v >= 0; --v) {
                            auto it = sets[v].find(connector_hash_key(*me.c));
                            if (it != sets[v].end()) {
                                for (auto& rc : it->second)
                                    if (link_viable(rc, v, me, w)) { found = v; break; }
                            }
                            if (found >= 0) break;
                        }
                        if (found < 0) { keep[d] = 0; changed = true; break; }
                        if (found != bvec[i]) { bvec[i] = found; changed = true; }
                        prev_bound = found;
                    }
                }
                if (std::count(keep.begin(), keep.end(), 0)) {
                    filter_word(word, keep);
                    std::vector<std::pair<std::vector<int>, std::vector<int>>> nb;
                    for (size_t d = 0; d < keep.size(); ++d)
                        if (keep[d]) nb.push_back(std::move(bounds[w][d]));
                    bounds[w] = std::move(nb);
                }
                fill_set(w, Dir::Right);
            }
            record_row(res.stats, s, "after P.P. L->R");
        } else {
            fill_set(n - 1, Dir::Left);
            for (int w = n - 2; w >= 0; --w) {
                auto& word = s.words[w];
                std::vector<char> keep(word.disjuncts.size(), 1);
                for (size_t d = 0; d < word.disjuncts.size(); ++d) {
                    auto& dj = word.disjuncts[d];
                    auto& bvec = bounds[w][d].second;
                    int prev_bound = w;
                    int m = (int)dj.right.size();
                    for (int i = 0; i < m && keep[d]; ++i) {
                        PConn me{&dj.right[i], bvec[i], i == m - 1, i == 0};
                        int start = std::max(bvec[i], prev_bound + 1);
                        int found = -1;
                        for (int v = start; v < n; ++v) {
                            auto it = sets[v].find(connector_hash_key(*me.c));
                            if (it != sets[v].end()) {
                                for (auto& lc : it->second)
                                    if (link_viable(me, w, lc, v)) { found = v; break; }
                            }
                            if (found >= 0) break;
                        }
                        if (found < 0) { keep[d] = 0; changed = true; break; }
                        if (found != bvec[i]) { bvec[i] = found; changed = true; }
                        prev_bound = found;
                    }
                }
                if (std::count(keep.begin(), keep.end(), 0)) {
                    filter_word(word, keep);
                    std::vector<std::pair<std::vector<int>, std::vector<int>>> nb;
                    for (size_t d = 0; d < keep.size(); ++d)
                        if (keep[d]) nb.push_back(std::move(bounds[w][d]));
                    bounds[w] = std::move(nb);
                }
                fill_set(w, Dir::Left);
            }
            record_row(res.stats, s, "after P.P. R->L");
        }
        ++passes;
        if (passes > 1 && !changed) break;
        left_to_right = !left_to_right;
    }
    res.stats.passes = passes;
    return res;
}

FastMatchTables FastMatchTables::build(const PreparedSentence& s, const NearestInfo* nearest) {
    FastMatchTables t;
    t.words_.resize(s.words.size());
    for (size_t w = 0; w < s.words.size(); ++w) {
        auto& word = s.words[w];
        for (size_t d = 0; d < word.disjuncts.size(); ++d) {
            auto& dj = word.disjuncts[d];
            if (!dj.left.empty()) {
                const Connector& first = dj.left.back();  // outermost
                int bound = (int)w - (int)dj.left.size();
                if (nearest && !nearest->empty()) bound = nearest->bounds[w][d].first.back();
                t.words_[w].left[connector_hash_key(first)].push_back({(int)d, bound});
            }
            if (!dj.right.empty()) {
                const Connector& first = dj.right.back();
                int bound = (int)w + (int)dj.right.size();
                if (nearest && !nearest->empty()) bound = nearest->bounds[w][d].second.back();
                t.words_[w].right[connector_hash_key(first)].push_back({(int)d, bound});
            }
        }
        // left buckets: viable prefix has bound >= lword, sort descending;
        // right buckets: viable prefix has bound <= rword, sort ascending
        for (auto& [k, v] : t.words_[w].left)
            std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.nearest > b.nearest; });
        for (auto& [k, v] : t.words_[w].right)
            std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.nearest < b.nearest; });
    }
    return t;
}

void FastMatchTables::collect(int W, const Connector* l, int lword, const Connector* r, int rword,
                              std::vector<int>& out) const {
    auto& wt = words_[W];
    if (l) {
        auto it = wt.left.find(connector_hash_key(*l));
        if (it != wt.left.end())
            for (auto& e : it->second) {
                if (e.nearest < lword) break;
                out.push_back(e.disjunct);
            }
    }
    if (r) {
        auto it = wt.right.find(connector_hash_key(*r));
        if (it != wt.right.end())
            for (auto& e : it->second) {
                if (e.nearest > rword) break;
                out.push_back(e.disjunct);
            }
    }
    if (l && r) {
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
}

}  // namespace lg
