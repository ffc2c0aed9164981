#include "lg/cfg.hpp"

#include <algorithm>
#include <sstream>

#include "lg/engine.hpp"
#include "lg/prepare.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lg {

void GnfGrammar::validate() const {
    if (prods.empty()) throw CfgError("grammar has no productions");
    std::set<std::string> defined;
    for (auto& p : prods) defined.insert(p.lhs);
    int start_prods = 0;
    for (auto& p : prods) {
        if (p.lhs == start) ++start_prods;
        for (auto& v : p.vars) {
            if (!defined.count(v)) throw CfgError("undefined variable '" + v + "'");
            if (v == start) throw CfgError("start variable on a right side");
        }
    }
    if (start_prods != 1)
        throw CfgError("start variable must have exactly one production");
}

GnfGrammar parse_gnf(const std::string& text) {
    GnfGrammar g;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto cut = raw.find('%');
        if (cut != std::string::npos) raw.resize(cut);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks.size() < 3 || toks[1] != "->")
            throw CfgError("line " + std::to_string(lineno) + ": expected 'A -> x A1 ...'");
        GnfGrammar::Prod p;
        p.lhs = toks[0];
        p.terminal = toks[2];
        p.vars.assign(toks.begin() + 3, toks.end());
        g.variables.insert(p.lhs);
        g.terminals.insert(p.terminal);
        if (g.prods.empty()) g.start = p.lhs;
        g.prods.push_back(std::move(p));
    }
    for (auto& p : g.prods)
        for (auto& v : p.vars) g.variables.insert(v);
    g.validate();
    return g;
}

namespace {

// Connector names must be upper-case heads; rename anything else.
std::map<std::string, std::string> connector_name_map(const GnfGrammar& g) {
    std::map<std::string, std::string> names;
    std::set<std::string> used;
    auto plain = [](const std::string& v) {
        ConnectorName n;
        return parse_connector_name(v, n) && n.tail.empty();
    };
    for (auto& v : g.variables)
        if (plain(v) && !used.count(v)) {
            names[v] = v;
            used.insert(v);
        }
    int counter = 0;
    auto fresh = [&] {
        for (;;) {
            std::string s = "Q";
            int x = counter++;
            do {
                s.push_back((char)('A' + x % 26));
                x /= 26;
            } while (x);
            if (!used.count(s)) return s;
        }
    };
    for (auto& v : g.variables)
        if (!names.count(v)) {
            names[v] = fresh();
            used.insert(names[v]);
        }
    return names;
}

}  // namespace

Dictionary gnf_to_link_grammar(const GnfGrammar& g) {
    g.validate();
    auto names = connector_name_map(g);

    std::map<std::string, std::vector<std::string>> formulas;  // word -> alternatives
    for (auto& p : g.prods) {
        std::string f;
        if (p.lhs != g.start) f = names.at(p.lhs) + "-";
        for (auto& v : p.vars) {
            if (!f.empty()) f += " & ";
            f += names.at(v) + "+";
        }
        if (f.empty()) f = "()";
        formulas[p.terminal].push_back("(" + f + ")");
    }
    std::string text;
    for (auto& [word, alts] : formulas) {
        text += word + ": ";
        for (size_t i = 0; i < alts.size(); ++i) {
            if (i) text += " or ";
            text += alts[i];
        }
        text += ";\n";
    }
    return parse_dictionary({text, "gnf conversion"});
}

std::string CfgGrammar::print() const {
    std::string s;
    for (auto& p : prods) {
        s += var_names[p.lhs] + " ->";
        if (p.rhs.empty()) s += " ()";
        for (auto& sym : p.rhs) s += " " + (sym.terminal ? sym.word : var_names[sym.var]);
        s += "\n";
    }
    return s;
}

bool CfgGrammar::accepts(const std::vector<std::string>& words) const {
    // Earley recognizer
    struct Item {
        int prod, dot, origin;
        bool operator==(const Item& o) const {
            return prod == o.prod && dot == o.dot && origin == o.origin;
        }
    };
    const int n = (int)words.size();
    std::vector<std::vector<Item>> sets(n + 1);
    std::vector<std::vector<int>> by_lhs(var_names.size());
    for (size_t i = 0; i < prods.size(); ++i) by_lhs[prods[i].lhs].push_back((int)i);

    auto add = [&](int k, Item it) {
        for (auto& e : sets[k])
            if (e == it) return;
        sets[k].push_back(it);
    };
    for (int pi : by_lhs[start]) add(0, {pi, 0, 0});

    for (int k = 0; k <= n; ++k) {
        for (size_t i = 0; i < sets[k].size(); ++i) {
            Item it = sets[k][i];  // by value: add() may reallocate
            const Prod& p = prods[it.prod];
            if (it.dot == (int)p.rhs.size()) {
                // completer (index loop: sets[it.origin] may be sets[k])
                for (size_t u = 0; u < sets[it.origin].size(); ++u) {
                    Item up = sets[it.origin][u];
                    const Prod& q = prods[up.prod];
                    if (up.dot < (int)q.rhs.size() && !q.rhs[up.dot].terminal &&
                        q.rhs[up.dot].var == p.lhs)
                        add(k, {up.prod, up.dot + 1, up.origin});
                }
                continue;
            }
            const Sym sym = p.rhs[it.dot];
            if (sym.terminal) {
                if (k < n && words[k] == sym.word) add(k + 1, {it.prod, it.dot + 1, it.origin});
            } else {
                for (int pi : by_lhs[sym.var]) add(k, {pi, 0, k});
                // a variable already completed empty at k will not re-run its
                // completer for this item; advance over it directly
                for (size_t u = 0; u < sets[k].size(); ++u) {
                    Item e = sets[k][u];
                    if (prods[e.prod].lhs == sym.var && e.origin == k &&
                        e.dot == (int)prods[e.prod].rhs.size()) {
                        add(k, {it.prod, it.dot + 1, it.origin});
                        break;
                    }
                }
            }
        }
    }
    for (auto& it : sets[n])
        if (prods[it.prod].lhs == start && it.dot == (int)prods[it.prod].rhs.size() &&
            it.origin == 0)
            return true;
    return false;
}

namespace {

// alpha = (pending right names of the left boundary, nearest first;
//          pending left names of the right boundary, nearest first)
struct Alpha {
    std::vector<std::string> rights, lefts;
    bool operator<(const Alpha& o) const {
        return std::tie(rights, lefts) < std::tie(o.rights, o.lefts);
    }
    std::string name() const {
        std::string s = "V[(";
        for (size_t i = 0; i < rights.size(); ++i) s += (i ? "," : "") + rights[i];
        s += ")(";
        for (size_t i = 0; i < lefts.size(); ++i) s += (i ? "," : "") + lefts[i];
        return s + ")]";
    }
};

struct WordDisjunct {
    std::string word;
    std::vector<std::string> lefts, rights;  // nearest-first
};

}  // namespace

CfgGrammar link_grammar_to_cfg(const Dictionary& d) {
    std::vector<WordDisjunct> wds;
    for (auto& [word, entry] : d.entries()) {
        for (auto& dj : entry.disjuncts) {
            WordDisjunct wd;
            wd.word = word;
            for (auto& c : dj.left) {
                if (c.multi) throw CfgError("multi-connectors are not supported");
                if (!c.name.tail.empty()) throw CfgError("subscripts are not supported");
                wd.lefts.push_back(c.name.head);
            }
            for (auto& c : dj.right) {
                if (c.multi) throw CfgError("multi-connectors are not supported");
                if (!c.name.tail.empty()) throw CfgError("subscripts are not supported");
                wd.rights.push_back(c.name.head);
            }
            wds.push_back(std::move(wd));
        }
    }

    CfgGrammar g;
    g.var_names.push_back("S");
    g.start = 0;
    std::map<Alpha, int> ids;
    std::vector<Alpha> todo;
    auto var = [&](const Alpha& a) {
        auto it = ids.find(a);
        if (it != ids.end()) return it->second;
        int id = (int)g.var_names.size();
        g.var_names.push_back(a.name());
        ids.emplace(a, id);
        todo.push_back(a);
        return id;
    };

    std::set<std::string> prod_seen;
    auto add_prod = [&](CfgGrammar::Prod p) {
        std::string key = std::to_string(p.lhs);
        for (auto& s : p.rhs) key += "|" + (s.terminal ? "t" + s.word : "v" + std::to_string(s.var));
        if (prod_seen.insert(key).second) g.prods.push_back(std::move(p));
    };

    // start productions anchor on the rightmost word
    for (auto& wd : wds) {
        if (!wd.rights.empty()) continue;
        Alpha a{{}, wd.lefts};
        add_prod({g.start, {{false, "", var(a)}, {true, wd.word, -1}}});
    }
    // epsilon production
    add_prod({var(Alpha{}), {}});

    while (!todo.empty()) {
        Alpha a = todo.back();
        todo.pop_back();
        if (a.rights.empty() && a.lefts.empty()) continue;
        int lhs = var(a);
        size_t n = a.rights.size(), m = a.lefts.size();
        for (auto& wd : wds) {
            size_t mp = wd.lefts.size(), np = wd.rights.size();
            bool outer_left = n >= 1 && mp >= 1 && wd.lefts.back() == a.rights.back();
            bool outer_right = m >= 1 && np >= 1 && wd.rights.back() == a.lefts.back();
            auto mk = [&](bool use_a, bool use_b) {
                Alpha beta, gamma;
                beta.rights.assign(a.rights.begin(), a.rights.end() - (use_a ? 1 : 0));
                beta.lefts.assign(wd.lefts.begin(), wd.lefts.end() - (use_a ? 1 : 0));
                gamma.rights.assign(wd.rights.begin(), wd.rights.end() - (use_b ? 1 : 0));
                gamma.lefts.assign(a.lefts.begin(), a.lefts.end() - (use_b ? 1 : 0));
                add_prod({lhs,
                          {{false, "", var(beta)}, {true, wd.word, -1}, {false, "", var(gamma)}}});
            };
            if (outer_left) mk(true, false);    // (a)
            if (outer_right) mk(false, true);   // (b)
            if (outer_left && outer_right) mk(true, true);  // (c)
        }
    }
    return g;
}

EquivReport language_equiv_check(const Acceptor& a, const Acceptor& b,
                                 const std::vector<std::string>& alphabet, int maxlen,
                                 size_t max_report) {
    uint64_t total = 0, pw = 1;
    for (int len = 1; len <= maxlen; ++len) {
        pw *= alphabet.size();
        total += pw;
        if (total > 1000000)
            throw CfgError("enumeration guard exceeded: |alphabet|^maxlen over 10^6");
    }

    EquivReport rep;
    rep.strings_checked = total;

    std::vector<std::vector<std::string>> all;
    all.reserve(total);
    std::vector<std::string> cur;
    std::function<void(int)> gen = [&](int remaining) {
        if (!cur.empty()) all.push_back(cur);
        if (remaining == 0) return;
        for (auto& sym : alphabet) {
            cur.push_back(sym);
            gen(remaining - 1);
            cur.pop_back();
        }
    };
    gen(maxlen);

    std::vector<char> da(all.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
    for (long i = 0; i < (long)all.size(); ++i) {
        bool ra = a(all[i]);
        bool rb = b(all[i]);
        if (ra != rb) da[i] = ra ? 1 : 2;
    }
    for (size_t i = 0; i < all.size() && rep.disagreements.size() < max_report; ++i)
        if (da[i]) rep.disagreements.emplace_back(all[i], da[i] == 1, da[i] != 1);
    return rep;
}

Acceptor dictionary_acceptor(const Dictionary& d) {
    return [&d](const std::vector<std::string>& words) {
        std::string line;
        for (auto& w : words) {
            if (!line.empty()) line += " ";
            line += w;
        }
        try {
            for (auto& sent : prepare(d, line))
                if (count_linkages(sent) > 0) return true;
        } catch (const UnknownWordError&) {
            return false;
        }
        return false;
    };
}

Acceptor cfg_acceptor(const CfgGrammar& g) {
    return [&g](const std::vector<std::string>& words) { return g.accepts(words); };
}

}  // namespace lg
