#include "lg/render.hpp"

#include <algorithm>
#include <sstream>

namespace lg {

LinkageScore score(const PreparedSentence& s, const Linkage& lk, size_t violation_count,
                   int and_cost) {
    LinkageScore sc;
    sc.pp_violations = (int)violation_count;
    sc.and_cost = and_cost;
    for (size_t w = 0; w < s.words.size(); ++w) {
        int d = lk.chosen[w];
        if (d >= 0 && d < (int)s.words[w].disjuncts.size())
            sc.disjunct_cost += s.words[w].disjuncts[d].cost;
    }
    for (auto& l : lk.links)
        if (l.left_word != 0) sc.link_cost += l.right_word - l.left_word - 1;
    return sc;
}

namespace {

std::string display_word(const PreparedSentence& s, const Linkage& lk, int w) {
    return s.words[w].display_for(lk.chosen[w]);
}

}  // namespace

std::string render_diagram(const PreparedSentence& s, const Linkage& lk,
                           const RenderOptions& opts) {
    int first = opts.show_wall ? 0 : 1;
    const int n = (int)s.words.size();

    struct Arc {
        int lw, rw;
        std::string label;
        int level = 1;
        int a = 0, b = 0;  // columns
    };
    std::vector<Arc> arcs;
    for (auto& l : lk.links) {
        if (!opts.show_wall && (l.left_word == 0 || l.right_word == 0)) continue;
        arcs.push_back({l.left_word, l.right_word, l.label.str(), 1, 0, 0});
    }

    // word layout; gaps widen until every label fits between its endpoints
    std::vector<int> gap(n, 2);
    std::vector<int> col(n, 0);
    std::string word_row;
    for (int round = 0; round < 32; ++round) {
        word_row.clear();
        for (int w = first; w < n; ++w) {
            if (!word_row.empty()) word_row += std::string(gap[w], ' ');
            col[w] = (int)word_row.size();
            word_row += display_word(s, lk, w);
        }
        bool ok = true;
        for (auto& a : arcs) {
            int span = col[a.rw] - col[a.lw] - 1;
            int need = (int)a.label.size() + 2;
            if (span < need) {
                gap[a.rw] += need - span;
                ok = false;
            }
        }
        if (ok) break;
    }
    if (word_row.empty()) return "\n";
    for (auto& a : arcs) {
        a.a = col[a.lw];
        a.b = col[a.rw];
    }
    if (arcs.empty()) return word_row + "\n";

    // level = 1 + max level of arcs contained in the span
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& x, const Arc& y) { return x.rw - x.lw < y.rw - y.lw; });
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (arcs[j].lw >= arcs[i].lw && arcs[j].rw <= arcs[i].rw)
                arcs[i].level = std::max(arcs[i].level, arcs[j].level + 1);

    int height = 0;
    for (auto& a : arcs) height = std::max(height, a.level);
    size_t width = word_row.size();
    for (auto& a : arcs) width = std::max(width, (size_t)a.b + 1);
    std::vector<std::string> grid(height, std::string(width, ' '));

    auto row_of = [&](int level) { return height - level; };
    for (auto& a : arcs) {
        std::string& row = grid[row_of(a.level)];
        row[a.a] = '+';
        row[a.b] = '+';
        for (int c = a.a + 1; c < a.b; ++c) row[c] = '-';
        // centered label
        int span = a.b - a.a - 1;
        int len = (int)a.label.size();
        if (len > 0 && span >= len) {
            int start = a.a + 1 + (span - len) / 2;
            for (int k = 0; k < len; ++k) row[start + k] = a.label[k];
        }
        // verticals down to the words
        for (int lv = a.level - 1; lv >= 1; --lv) {
            std::string& below = grid[row_of(lv)];
            if (below[a.a] == ' ') below[a.a] = '|';
            if (below[a.b] == ' ') below[a.b] = '|';
        }
    }

    std::ostringstream out;
    for (auto& row : grid) {
        size_t end = row.find_last_not_of(' ');
        out << row.substr(0, end + 1) << "\n";
    }
    out << word_row << "\n";
    return out.str();
}

std::vector<std::tuple<int, int, std::string>> parse_diagram(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) lines.push_back(l);
    std::vector<std::tuple<int, int, std::string>> out;
    if (lines.empty()) return out;
    const std::string& words = lines.back();

    // column -> word index
    std::vector<int> starts;
    for (size_t c = 0; c < words.size(); ++c)
        if (words[c] != ' ' && (c == 0 || words[c - 1] == ' ')) starts.push_back((int)c);
    auto word_at = [&](int c) {
        int w = -1;
        for (size_t i = 0; i < starts.size(); ++i)
            if (starts[i] <= c) w = (int)i;
        return w;
    };

    for (size_t r = 0; r + 1 < lines.size(); ++r) {
        const std::string& row = lines[r];
        int open = -1;
        for (size_t c = 0; c < row.size(); ++c) {
            if (row[c] != '+') continue;
            if (open >= 0) {
                std::string label;
                for (size_t k = open + 1; k < c; ++k)
                    if (row[k] != '-') label.push_back(row[k]);
                out.emplace_back(word_at(open), word_at((int)c), label);
            }
            // a '+' that closes one arc opens the next when the dashes go on
            open = (c + 1 < row.size() && row[c + 1] != ' ') ? (int)c : -1;
        }
    }
    return out;
}

std::string render_table(const PreparedSentence& s, const Linkage& lk,
                         const DomainStructure& ds) {
    struct Row {
        std::string domains, lw, lc, link, rc, rw;
    };
    std::vector<int> order(lk.links.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Link &x = lk.links[a], &y = lk.links[b];
        if (x.left_word != y.left_word) return x.left_word < y.left_word;
        return x.right_word > y.right_word;
    });

    std::vector<Row> rows;
    for (int i : order) {
        const Link& l = lk.links[i];
        Row r;
        if (i < (int)ds.link_domains.size())
            for (int d : ds.link_domains[i]) r.domains += std::string("(") + ds.domains[d].type + ") ";
        if (!r.domains.empty()) r.domains.pop_back();
        r.lw = display_word(s, lk, l.left_word);
        r.rw = display_word(s, lk, l.right_word);
        r.lc = l.left_end.fat ? l.left_end.fat->str() : l.left_end.name.str();
        r.rc = l.right_end.fat ? l.right_end.fat->str() : l.right_end.name.str();
        r.link = "<--" + l.label.str() + "-->";
        rows.push_back(std::move(r));
    }

    size_t w0 = 0, w1 = 0, w2 = 0, w3 = 0, w4 = 0;
    for (auto& r : rows) {
        w0 = std::max(w0, r.domains.size());
        w1 = std::max(w1, r.lw.size());
        w2 = std::max(w2, r.lc.size());
        w3 = std::max(w3, r.link.size());
        w4 = std::max(w4, r.rc.size());
    }
    auto pad = [](const std::string& t, size_t w) { return t + std::string(w - t.size(), ' '); };
    std::ostringstream out;
    for (auto& r : rows) {
        out << pad(r.domains, w0) << "  " << pad(r.lw, w1) << "  " << pad(r.lc, w2) << "  "
            << pad(r.link, w3) << "  " << pad(r.rc, w4) << "  " << r.rw << "\n";
    }
    return out.str();
}

}  // namespace lg
