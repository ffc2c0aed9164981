#include "lg/postprocess.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lg {

bool subsumes(const ConnectorName& pattern, const ConnectorName& label) {
    if (pattern.head != label.head) return false;
    for (size_t i = 0; i < pattern.tail.size(); ++i) {
        char p = pattern.tail[i];
        if (p == '*') continue;
        char l = i < label.tail.size() ? label.tail[i] : '*';
        if (p != l) return false;
    }
    return true;
}

bool PostConfig::is_restricted(const ConnectorName& label) const {
    for (auto& r : restricted)
        if (subsumes(r, label)) return true;
    return false;
}

namespace {

[[noreturn]] void cfg_fail(const std::string& msg, int line) {
    throw std::runtime_error("post-process config: " + msg + " (line " + std::to_string(line) +
                             ")");
}

ConnectorName parse_name(const std::string& tok, int line) {
    ConnectorName n;
    if (!parse_connector_name(tok, n)) cfg_fail("bad connector name '" + tok + "'", line);
    return n;
}

}  // namespace

PostConfig parse_post_config(const std::string& text, const std::string&) {
    PostConfig cfg;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto cut = raw.find('%');
        if (cut != std::string::npos) raw.resize(cut);

        std::string quoted;
        auto q1 = raw.find('"');
        if (q1 != std::string::npos) {
            auto q2 = raw.find('"', q1 + 1);
            if (q2 == std::string::npos) cfg_fail("unterminated rule name", lineno);
            quoted = raw.substr(q1 + 1, q2 - q1 - 1);
            raw = raw.substr(0, q1);
        }
        std::istringstream ls(raw);
        std::string kw;
        if (!(ls >> kw)) continue;

        auto next = [&](const char* what) {
            std::string t;
            if (!(ls >> t)) cfg_fail(std::string("missing ") + what, lineno);
            return t;
        };

        if (kw == "STARTER") {
            auto name = next("link name");
            auto letter = next("domain letter");
            if (letter.size() != 1 || !std::islower((unsigned char)letter[0]))
                cfg_fail("domain type must be one lowercase letter", lineno);
            cfg.starters.push_back({parse_name(name, lineno), letter[0]});
        } else if (kw == "RESTRICTED") {
            cfg.restricted.push_back(parse_name(next("link name"), lineno));
        } else if (kw == "DOMAIN_REQUIRES") {
            PostRule r;
            r.kind = PostRule::Kind::DomainRequires;
            r.domain_type = next("domain letter")[0];
            r.trigger = parse_name(next("trigger"), lineno);
            r.required = parse_name(next("required"), lineno);
            r.name = quoted.empty() ? "domain rule" : quoted;
            cfg.rules.push_back(std::move(r));
        } else if (kw == "BOUNDED") {
            PostRule r;
            r.kind = PostRule::Kind::Bounded;
            r.domain_type = next("domain letter")[0];
            r.name = quoted.empty() ? "bounded domain" : quoted;
            cfg.rules.push_back(std::move(r));
        } else if (kw == "GROUP_REQUIRES") {
            PostRule r;
            r.kind = PostRule::Kind::GroupRequires;
            r.trigger = parse_name(next("trigger"), lineno);
            r.required = parse_name(next("required"), lineno);
            r.name = quoted.empty() ? "group rule" : quoted;
            cfg.rules.push_back(std::move(r));
        } else if (kw == "GROUP_FORBIDS") {
            PostRule r;
            r.kind = PostRule::Kind::GroupForbids;
            r.trigger = parse_name(next("trigger"), lineno);
            r.forbidden = parse_name(next("forbidden"), lineno);
            std::string t;
            if (ls >> t) {
                if (t.empty() || t[0] != '!') cfg_fail("expected !exempt pattern", lineno);
                r.exempt = parse_name(t.substr(1), lineno);
                r.has_exempt = true;
            }
            r.name = quoted.empty() ? "group rule" : quoted;
            cfg.rules.push_back(std::move(r));
        } else {
            cfg_fail("unknown directive '" + kw + "'", lineno);
        }
    }
    return cfg;
}

DomainStructure build_domains(const Linkage& lk, const PostConfig& cfg) {
    DomainStructure ds;
    const size_t nl = lk.links.size();
    ds.link_domains.resize(nl);

    size_t words = 0;
    for (auto& l : lk.links) words = std::max(words, (size_t)l.right_word + 1);
    std::vector<std::vector<int>> adj(words);
    for (size_t i = 0; i < nl; ++i) {
        adj[lk.links[i].left_word].push_back((int)i);
        adj[lk.links[i].right_word].push_back((int)i);
    }

    for (size_t i = 0; i < nl; ++i) {
        for (auto& st : cfg.starters) {
            if (!subsumes(st.pattern, lk.links[i].label)) continue;
            Domain dom;
            dom.type = st.type;
            dom.root_word = lk.links[i].left_word;
            dom.right_word = lk.links[i].right_word;
            dom.starter = (int)i;

            // DFS from the right word; the root is never expanded; a
            // restricted link traversed right-to-left is recorded but not
            // continued past
            std::vector<char> edge_seen(nl, 0);
            std::vector<char> expanded(words, 0);
            std::vector<int> stack;
            auto expand_word = [&](int w, auto&& self) -> void {
                if (expanded[w] || w == dom.root_word) return;
                expanded[w] = 1;
                for (int e : adj[w]) {
                    if (e == dom.starter || edge_seen[e]) continue;
                    edge_seen[e] = 1;
                    const Link& l = lk.links[e];
                    int other = l.left_word == w ? l.right_word : l.left_word;
                    bool leftward = other == l.left_word;
                    if (leftward && cfg.is_restricted(l.label)) continue;  // stop past it
                    self(other, self);
                }
            };
            expand_word(dom.right_word, expand_word);
            for (size_t e = 0; e < nl; ++e)
                if (edge_seen[e]) dom.members.push_back((int)e);
            int id = (int)ds.domains.size();
            for (int e : dom.members) ds.link_domains[e].push_back(id);
            ds.domains.push_back(std::move(dom));
        }
    }

    std::map<std::vector<int>, std::vector<int>> groups;
    for (size_t i = 0; i < nl; ++i) groups[ds.link_domains[i]].push_back((int)i);
    for (auto& [key, members] : groups) ds.groups.push_back(members);
    return ds;
}

std::vector<Violation> check_rules(const DomainStructure& ds, const Linkage& lk,
                                   const PostConfig& cfg) {
    std::vector<Violation> out;
    auto add = [&](const PostRule& r, bool bounded) {
        for (auto& v : out)
            if (v.name == r.name) return;
        out.push_back({r.name, bounded ? r.name : r.name + " violated"});
    };

    for (auto& r : cfg.rules) {
        switch (r.kind) {
            case PostRule::Kind::DomainRequires:
                for (auto& dom : ds.domains) {
                    if (dom.type != r.domain_type) continue;
                    bool trig = false, req = false;
                    for (int e : dom.members) {
                        if (subsumes(r.trigger, lk.links[e].label)) trig = true;
                        if (subsumes(r.required, lk.links[e].label)) req = true;
                    }
                    if (trig && !req) add(r, false);
                }
                break;
            case PostRule::Kind::Bounded:
                for (auto& dom : ds.domains) {
                    if (dom.type != r.domain_type) continue;
                    for (int e : dom.members)
                        if (lk.links[e].left_word < dom.root_word) { add(r, true); break; }
                }
                break;
            case PostRule::Kind::GroupRequires:
            case PostRule::Kind::GroupForbids:
                for (auto& g : ds.groups) {
                    bool trig = false;
                    for (int e : g)
                        if (subsumes(r.trigger, lk.links[e].label)) trig = true;
                    if (!trig) continue;
                    if (r.kind == PostRule::Kind::GroupRequires) {
                        bool req = false;
                        for (int e : g)
                            if (subsumes(r.required, lk.links[e].label)) req = true;
                        if (!req) add(r, false);
                    } else {
                        for (int e : g) {
                            if (!subsumes(r.forbidden, lk.links[e].label)) continue;
                            if (r.has_exempt && subsumes(r.exempt, lk.links[e].label)) continue;
                            add(r, false);
                            break;
                        }
                    }
                }
                break;
        }
    }
    return out;
}

}  // namespace lg
