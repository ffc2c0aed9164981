#include <algorithm>
#include <cctype>

#include "lg/dictionary.hpp"

namespace lg {

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& msg) const { throw DictError(msg, line, col); }

    int peek() const { return pos < text.size() ? (unsigned char)text[pos] : -1; }

    int get() {
        if (pos >= text.size()) return -1;
        char c = text[pos++];
        if (c == '\n') { ++line; col = 1; }
        else ++col;
        return (unsigned char)c;
    }

    void skip_space() {
        for (;;) {
            int c = peek();
            if (c == '%') {
                while (peek() != -1 && peek() != '\n') get();
                continue;
            }
            if (c == -1 || !std::isspace(c)) return;
            get();
        }
    }
};

bool is_word_break(int c) {
    return c == -1 || std::isspace(c) || c == ':' || c == ';' || c == '%';
}

bool is_formula_break(int c) {
    return c == -1 || std::isspace(c) || c == '(' || c == ')' || c == '{' || c == '}' ||
           c == '[' || c == ']' || c == '&' || c == ';' || c == '%';
}

struct Parser {
    Lexer lx;
    int bracket_depth = 0;

    explicit Parser(const std::string& t) : lx(t) {}

    // formula := andlist ("or" andlist)*
    ExprPtr parse_formula() {
        std::vector<ExprPtr> alts;
        alts.push_back(parse_andlist());
        for (;;) {
            lx.skip_space();
            if (!try_keyword("or")) break;
            alts.push_back(parse_andlist());
        }
        return Expression::make_or(std::move(alts));
    }

    // andlist := term ("&" term)*
    ExprPtr parse_andlist() {
        std::vector<ExprPtr> parts;
        parts.push_back(parse_term());
        for (;;) {
            lx.skip_space();
            if (lx.peek() == '&') { lx.get(); parts.push_back(parse_term()); }
            else break;
        }
        return Expression::make_and(std::move(parts));
    }

    ExprPtr parse_term() {
        lx.skip_space();
        int c = lx.peek();
        if (c == '(') {
            lx.get();
            lx.skip_space();
            if (lx.peek() == ')') { lx.get(); return Expression::make_empty(); }
            ExprPtr e = parse_formula();
            expect(')');
            return e;
        }
        if (c == '{') {
            lx.get();
            ExprPtr e = parse_formula();
            expect('}');
            return Expression::make_optional(e);
        }
        if (c == '[') {
            lx.get();
            ++bracket_depth;
            ExprPtr e = parse_formula();
            --bracket_depth;
            expect(']');
            return e;
        }
        return parse_connector();
    }

    ExprPtr parse_connector() {
        lx.skip_space();
        bool multi = false;
        if (lx.peek() == '@') { lx.get(); multi = true; }
        std::string tok;
        while (!is_formula_break(lx.peek()) && lx.peek() != '+' && lx.peek() != '-')
            tok.push_back((char)lx.get());
        int d = lx.peek();
        if (d != '+' && d != '-') lx.fail("expected '+' or '-' after connector name '" + tok + "'");
        lx.get();
        ConnectorName name;
        if (!parse_connector_name(tok, name) || name.tail.find('#') != std::string::npos)
            lx.fail("malformed connector name '" + tok + "'");
        Connector conn;
        conn.name = std::move(name);
        conn.dir = d == '+' ? Dir::Right : Dir::Left;
        conn.multi = multi;
        return Expression::make_leaf(std::move(conn), bracket_depth);
    }

    bool try_keyword(const std::string& kw) {
        size_t save_pos = lx.pos;
        int save_line = lx.line, save_col = lx.col;
        std::string tok;
        while (!is_formula_break(lx.peek()) && lx.peek() != '+' && lx.peek() != '-' && tok.size() < kw.size() + 1)
            tok.push_back((char)lx.get());
        if (tok == kw) return true;
        lx.pos = save_pos; lx.line = save_line; lx.col = save_col;
        return false;
    }

    void expect(char c) {
        lx.skip_space();
        if (lx.peek() != c) lx.fail(std::string("expected '") + c + "'");
        lx.get();
    }
};

}  // namespace

const DictEntry* Dictionary::find(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<Dictionary::Branch> Dictionary::lookup_word(const std::string& token) const {
    std::vector<Branch> out;
    if (const DictEntry* e = find(token)) {
        out.push_back({token, token, &e->disjuncts});
        return out;
    }
    auto it = suffixes_.find(token);
    if (it != suffixes_.end()) {
        for (auto& key : it->second)
            out.push_back({key, key, &entries_.at(key).disjuncts});
    }
    return out;
}

std::string Dictionary::print() const {
    std::string s;
    for (auto& [key, entry] : entries_) {
        std::string k = key;
        std::replace(k.begin(), k.end(), ' ', '_');
        s += k + ": " + entry.expr->str() + ";\n";
    }
    return s;
}

Dictionary parse_dictionary(const DictSource& src) {
    Dictionary dict;
    Parser p(src.text);
    for (;;) {
        p.lx.skip_space();
        if (p.lx.peek() == -1) break;
        int entry_line = p.lx.line;
        std::vector<std::string> words;
        for (;;) {
            p.lx.skip_space();
            if (p.lx.peek() == ':') { p.lx.get(); break; }
            if (p.lx.peek() == -1) p.lx.fail("unexpected end of file in word list");
            std::string w;
            while (!is_word_break(p.lx.peek())) w.push_back((char)p.lx.get());
            if (w.empty()) p.lx.fail("expected a word or ':'");
            words.push_back(std::move(w));
        }
        if (words.empty()) p.lx.fail("entry with no words");
        ExprPtr formula = p.parse_formula();
        p.expect(';');

        DictEntry entry;
        entry.expr = formula;
        entry.disjuncts = expand(formula);
        entry.line = entry_line;
        for (auto& w : words) {
            std::string key = w;
            std::replace(key.begin(), key.end(), '_', ' ');
            if (dict.entries_.count(key))
                throw DictError("word '" + key + "' defined twice", entry_line, 1);
            if (key.find(' ') != std::string::npos) dict.idioms_.insert(key);
            auto dot = key.find('.');
            if (dot != std::string::npos) {
                if (dot == 0 || dot + 1 >= key.size())
                    throw DictError("malformed suffixed word '" + key + "'", entry_line, 1);
                dict.suffixes_[key.substr(0, dot)].push_back(key);
            }
            dict.entries_.emplace(std::move(key), entry);
        }
    }
    return dict;
}

}  // namespace lg
