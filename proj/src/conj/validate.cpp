#include <algorithm>
#include <map>
#include <optional>
#include <queue>

#include "lg/conjunctions.hpp"

namespace lg {

namespace {

struct CoordShape {
    bool is_coord = false;
    FatRef base;             // F
    FatRef delegated;        // G, null unless a mixed/chain/nest disjunct
    int kept_left = 0;       // outward ordinaries on the left
    int kept_right = 0;
    int left_start = 0;      // index of F2 in the left list (after the hook)
};

CoordShape parse_shape(const Disjunct& d) {
    CoordShape sh;
    size_t li = 0;
    if (!d.left.empty() && !d.left[0].fat && d.left[0].name.head == kCommaHookHead) li = 1;
    if (d.left.size() <= li || d.right.empty()) return sh;
    const Connector& lf = d.left[li];
    const Connector& rf = d.right[0];
    if (!lf.fat || lf.priority != 2 || !rf.fat || rf.priority != 2) return sh;
    sh.is_coord = true;
    sh.base = lf.fat;
    sh.left_start = (int)li;
    for (size_t i = li + 1; i < d.left.size(); ++i) {
        if (d.left[i].fat) { sh.delegated = d.left[i].fat; break; }
        ++sh.kept_left;
    }
    for (size_t i = 1; i < d.right.size(); ++i) {
        if (d.right[i].fat) { sh.delegated = d.right[i].fat; break; }
        ++sh.kept_right;
    }
    return sh;
}

struct Ctx {
    const PreparedSentence& s;
    Linkage& lk;
    std::vector<AndViolation>& out;

    std::vector<CoordShape> shapes;                      // per word
    std::vector<std::array<int, 2>> child_link;          // per word: left/right child link
    std::vector<int> parent_link;                        // per word, -1 = none
    std::vector<std::vector<int>> adj;                   // word -> link indices
    std::map<int, std::vector<ConnectorName>> resolved;  // coordinator -> names

    int child_word(int link_idx, int coord) const {
        const Link& l = lk.links[link_idx];
        return l.left_word == coord ? l.right_word : l.left_word;
    }

    // contribution of the child hanging on `link_idx`, shaped like the fat
    // signature of that link's ends
    std::vector<ConnectorName> contribution(int link_idx, int coord) {
        int cw = child_word(link_idx, coord);
        const CoordShape& sh = shapes[cw];
        const Link& l = lk.links[link_idx];
        const Connector& child_end = l.left_word == cw ? l.left_end : l.right_end;
        if (!sh.is_coord) {
            const FatSig& sig = *child_end.fat;
            std::vector<ConnectorName> names = sig.left;
            names.insert(names.end(), sig.right.begin(), sig.right.end());
            return names;
        }
        // nested coordinator: its delegated signature maps onto a suffix of
        // its own base positions
        auto base = resolve(cw);
        const FatSig& g = *child_end.fat;
        const FatSig& f = *sh.base;
        std::vector<ConnectorName> names;
        for (size_t p = 0; p < g.left.size(); ++p) names.push_back(base[sh.kept_left + p]);
        for (size_t p = 0; p < g.right.size(); ++p)
            names.push_back(base[f.left.size() + sh.kept_right + p]);
        return names;
    }

    // per-position names of the coordinator's combined elements, over its
    // base signature (left positions, then right positions)
    std::vector<ConnectorName> resolve(int coord) {
        auto it = resolved.find(coord);
        if (it != resolved.end()) return it->second;
        const CoordShape& sh = shapes[coord];
        const FatSig& f = *sh.base;
        auto a = contribution(child_link[coord][0], coord);
        auto b = contribution(child_link[coord][1], coord);
        std::vector<ConnectorName> names;
        size_t total = f.left.size() + f.right.size();
        for (size_t p = 0; p < total; ++p) {
            bool right_side = p >= f.left.size();
            if (p >= a.size() || p >= b.size()) {
                names.push_back(p < a.size() ? a[p] : (p < b.size() ? b[p] : ConnectorName("FAT")));
                continue;
            }
            if (right_side && a[p].head == "S" && b[p].head == "S")
                names.push_back(ConnectorName("S", "p"));
            else if (a[p].head == b[p].head)
                names.push_back(intersect_names(a[p], b[p]));
            else
                names.push_back(a[p]);
        }
        resolved[coord] = names;
        return names;
    }

    void flatten(int coord, std::vector<int>& elements, std::vector<int>& seps) {
        for (int side = 0; side < 2; ++side) {
            int li = child_link[coord][side];
            int cw = child_word(li, coord);
            bool nested = shapes[cw].is_coord && parent_link[cw] == li;
            if (side == 1) seps.push_back(coord);
            if (nested) flatten(cw, elements, seps);
            else elements.push_back(cw);
        }
    }
};

}  // namespace

AndValidation validate_and_linkage(const PreparedSentence& s, Linkage& lk) {
    AndValidation res;
    std::vector<int> fat_links;
    for (size_t i = 0; i < lk.links.size(); ++i)
        if (lk.links[i].left_end.fat || lk.links[i].right_end.fat) fat_links.push_back((int)i);
    if (fat_links.empty()) return res;

    const int n = (int)s.words.size();
    Ctx ctx{s, lk, res.violations,
            std::vector<CoordShape>(n),
            std::vector<std::array<int, 2>>(n, {-1, -1}),
            std::vector<int>(n, -1),
            std::vector<std::vector<int>>(n),
            {}};

    for (int w = 0; w < n; ++w) {
        int d = lk.chosen[w];
        if (d >= 0 && d < (int)s.words[w].disjuncts.size())
            ctx.shapes[w] = parse_shape(s.words[w].disjuncts[d]);
    }
    for (size_t i = 0; i < lk.links.size(); ++i) {
        ctx.adj[lk.links[i].left_word].push_back((int)i);
        ctx.adj[lk.links[i].right_word].push_back((int)i);
    }

    // fat-link tree: the priority-2 end sits on the coordinator
    for (int li : fat_links) {
        const Link& l = lk.links[li];
        if (l.left_end.priority + l.right_end.priority != 3) {
            res.violations.push_back({"and priority", "fat link without a 1-2 priority pair"});
            continue;
        }
        int coord = l.left_end.priority == 2 ? l.left_word : l.right_word;
        int child = l.left_word == coord ? l.right_word : l.left_word;
        if (!ctx.shapes[coord].is_coord) {
            res.violations.push_back({"and priority", "priority-2 end on a non-coordinator"});
            continue;
        }
        ctx.child_link[coord][child < coord ? 0 : 1] = li;
        const Connector& child_end = l.left_word == child ? l.left_end : l.right_end;
        if (child_end.priority == 1 && ctx.shapes[child].is_coord) ctx.parent_link[child] = li;
    }
    if (!res.violations.empty()) return res;

    std::vector<int> coords;
    for (int w = 0; w < n; ++w)
        if (ctx.shapes[w].is_coord && ctx.child_link[w][0] >= 0 && ctx.child_link[w][1] >= 0)
            coords.push_back(w);

    // (ii) each element must reach the sentence through its coordinator only:
    // every fat link must be a bridge
    for (int li : fat_links) {
        const Link& l = lk.links[li];
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        int from = l.left_end.priority == 1 ? l.left_word : l.right_word;
        int coord = l.left_word == from ? l.right_word : l.left_word;
        q.push(from);
        seen[from] = 1;
        while (!q.empty()) {
            int w = q.front();
            q.pop();
            for (int ai : ctx.adj[w]) {
                if (ai == li) continue;
                const Link& e = lk.links[ai];
                int other = e.left_word == w ? e.right_word : e.left_word;
                if (!seen[other]) { seen[other] = 1; q.push(other); }
            }
        }
        if (seen[coord]) {
            res.violations.push_back(
                {"and-list cycle", "element attached to the sentence around its coordinator"});
            return res;
        }
    }

    // reconstruct the flattened lists from the top coordinators
    for (int c : coords) {
        if (ctx.parent_link[c] >= 0) continue;
        AndList list;
        list.coordinator = c;
        std::vector<int> elements, seps;
        ctx.flatten(c, elements, seps);
        list.attachment = elements;
        list.separators = seps;
        if (!seps.empty()) {
            const std::string& last = s.words[seps.back()].surface;
            bool ok_last = last == "and" || last == "or" || last == "nor";
            // a trailing comma is fine only if followed by and/or/nor deeper in
            if (!ok_last)
                res.violations.push_back({"and-list shape", "list may not end on a comma"});
        }
        // element word ranges: connected component after cutting the fat link
        for (size_t e = 0; e < elements.size(); ++e) {
            int w = elements[e];
            int cut = -1;
            for (int li : fat_links) {
                const Link& l = lk.links[li];
                int from = l.left_end.priority == 1 ? l.left_word : l.right_word;
                if (from == w) { cut = li; break; }
            }
            std::vector<char> seen(n, 0);
            std::queue<int> q;
            q.push(w);
            seen[w] = 1;
            int lo = w, hi = w;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                lo = std::min(lo, x);
                hi = std::max(hi, x);
                for (int ai : ctx.adj[x]) {
                    if (ai == cut) continue;
                    const Link& ln = lk.links[ai];
                    int other = ln.left_word == x ? ln.right_word : ln.left_word;
                    if (!seen[other]) { seen[other] = 1; q.push(other); }
                }
            }
            list.element_ranges.emplace_back(lo, hi);
        }
        int mn = 1 << 30, mx = 0;
        for (auto [lo, hi] : list.element_ranges) {
            mn = std::min(mn, hi - lo + 1);
            mx = std::max(mx, hi - lo + 1);
        }
        if (!list.element_ranges.empty()) res.and_cost += mx - mn;
        res.lists.push_back(std::move(list));
    }

    // (iii) recompute outward names as element intersections and re-check
    for (int c : coords) {
        const CoordShape& sh = ctx.shapes[c];
        const Disjunct& dj = s.words[c].disjuncts[lk.chosen[c]];
        auto names = ctx.resolve(c);
        const FatSig& f = *sh.base;

        // links at c, near to far, per side, align 1:1 with the lists
        std::vector<int> lefts, rights;
        for (int ai : ctx.adj[c]) {
            const Link& l = lk.links[ai];
            if (l.right_word == c) lefts.push_back(ai);
            else rights.push_back(ai);
        }
        std::sort(lefts.begin(), lefts.end(), [&](int a, int b) {
            return lk.links[a].left_word > lk.links[b].left_word;
        });
        std::sort(rights.begin(), rights.end(), [&](int a, int b) {
            return lk.links[a].right_word < lk.links[b].right_word;
        });

        auto check_side = [&](const std::vector<Connector>& list, std::vector<int>& links,
                              bool left_side) {
            for (size_t i = 0; i < list.size() && i < links.size(); ++i) {
                const Connector& conn = list[i];
                if (conn.fat || conn.name.head == kCommaHookHead) continue;
                int fat_pos;
                if (left_side) fat_pos = (int)i - sh.left_start - 1;
                else fat_pos = (int)f.left.size() + (int)i - 1;
                if (fat_pos < 0 || fat_pos >= (int)names.size()) continue;
                const ConnectorName& recomputed = names[fat_pos];
                Link& l = lk.links[links[i]];
                const Connector& partner = left_side ? l.left_end : l.right_end;
                Connector mine = conn;
                mine.name = recomputed;
                bool ok = left_side ? match(partner, mine) : match(mine, partner);
                if (!ok) {
                    res.violations.push_back(
                        {"and agreement",
                         "link " + l.label.str() + " fails against " + recomputed.str()});
                } else if (partner.name.head == recomputed.head) {
                    l.label = intersect_names(recomputed, partner.name);
                }
            }
        };
        check_side(dj.left, lefts, true);
        check_side(dj.right, rights, false);
    }
    return res;
}

}  // namespace lg
