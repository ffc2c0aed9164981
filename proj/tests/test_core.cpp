#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "lg/dictionary.hpp"
#include "lg/expression.hpp"

using namespace lg;

namespace {

Connector conn(const std::string& text, Dir dir, bool multi = false) {
    ConnectorName n;
    REQUIRE(parse_connector_name(text, n));
    Connector c;
    c.name = n;
    c.dir = dir;
    c.multi = multi;
    return c;
}

bool m(const std::string& right, const std::string& left) {
    return match(conn(right, Dir::Right), conn(left, Dir::Left));
}

// all-names enumeration used by the match-set property
std::vector<ConnectorName> all_names(const std::string& head) {
    const std::string chars = "spmcu*";
    std::vector<ConnectorName> out;
    out.emplace_back(head, "");
    for (char a : chars) {
        out.emplace_back(head, std::string(1, a));
        for (char b : chars) out.emplace_back(head, std::string{a, b});
    }
    return out;
}

}  // namespace

TEST_CASE("matching table") {
    CHECK(m("S", "Ss"));
    CHECK(m("S", "Sp"));
    CHECK_FALSE(m("Sp", "Ss"));
    CHECK(m("D*u", "Dmu"));
    CHECK(m("D*u", "Dm"));
    CHECK_FALSE(m("D*u", "Dmc"));
    CHECK(m("S", "S"));
    CHECK(m("A", "A"));
    CHECK_FALSE(m("A", "B"));
    CHECK_FALSE(m("SI", "S"));  // heads differ in length
    // '#' matches only '*'
    CHECK(names_match(ConnectorName("D", "#"), ConnectorName("D", "")));
    CHECK(names_match(ConnectorName("D", "#"), ConnectorName("D", "*")));
    CHECK_FALSE(names_match(ConnectorName("D", "#"), ConnectorName("D", "s")));
    CHECK_FALSE(names_match(ConnectorName("D", "#"), ConnectorName("D", "#")));
}

TEST_CASE("match symmetry under argument swap") {
    std::mt19937 rng(7);
    const std::string chars = "spmcu*";
    auto random_name = [&] {
        std::string head(1, (char)('A' + rng() % 4));
        std::string tail;
        int len = rng() % 3;
        for (int i = 0; i < len; ++i) tail.push_back(chars[rng() % chars.size()]);
        return head + tail;
    };
    for (int i = 0; i < 500; ++i) {
        std::string a = random_name(), b = random_name();
        CHECK(m(a, b) == m(b, a));
    }
}

TEST_CASE("priorities") {
    auto fat = [](Dir dir, uint8_t pr, const FatSig& sig) {
        Connector c;
        c.name = ConnectorName("FAT");
        c.dir = dir;
        c.priority = pr;
        c.fat = std::make_shared<const FatSig>(sig);
        return c;
    };
    FatSig sig{{ConnectorName("D")}, {ConnectorName("S")}};
    CHECK(match(fat(Dir::Right, 1, sig), fat(Dir::Left, 2, sig)));
    CHECK(match(fat(Dir::Right, 2, sig), fat(Dir::Left, 1, sig)));
    CHECK_FALSE(match(fat(Dir::Right, 1, sig), fat(Dir::Left, 1, sig)));
    CHECK_FALSE(match(fat(Dir::Right, 2, sig), fat(Dir::Left, 2, sig)));
    // fat never matches ordinary
    CHECK_FALSE(match(fat(Dir::Right, 1, sig), conn("D", Dir::Left)));

    // same shape with head-compatible names matches; shape mismatch fails
    FatSig sig2{{ConnectorName("D", "m")}, {ConnectorName("S", "p")}};
    CHECK(match(fat(Dir::Right, 1, sig2), fat(Dir::Left, 2, sig)));
    FatSig sig3{{ConnectorName("D")}, {}};
    CHECK_FALSE(match(fat(Dir::Right, 1, sig3), fat(Dir::Left, 2, sig)));
    FatSig sig4{{ConnectorName("A")}, {ConnectorName("S")}};
    CHECK_FALSE(match(fat(Dir::Right, 1, sig4), fat(Dir::Left, 2, sig)));
}

TEST_CASE("intersection examples") {
    auto ix = [](const std::string& a, const std::string& b) {
        ConnectorName na, nb;
        REQUIRE(parse_connector_name(a, na));
        REQUIRE(parse_connector_name(b, nb));
        return intersect_names(na, nb).str();
    };
    CHECK(ix("S", "Ss") == "Ss");
    CHECK(ix("Dm", "Ds") == "D#");
    CHECK(ix("A", "A") == "A");
    CHECK(ix("D*u", "Dm") == "Dmu");
    CHECK(ix("Ss", "S") == "Ss");
}

TEST_CASE("intersection match-set property") {
    // match-set(intersect(a,b)) == match-set(a) & match-set(b) over all
    // names with tails up to length 2
    auto names = all_names("D");
    for (auto& a : names) {
        for (auto& b : names) {
            ConnectorName ab = intersect_names(a, b);
            for (auto& probe : names) {
                bool lhs = names_match(ab, probe);
                bool rhs = names_match(a, probe) && names_match(b, probe);
                REQUIRE(lhs == rhs);
            }
        }
    }
}

namespace {

// can the expression be satisfied using exactly the given connector lists?
using Pos = std::pair<size_t, size_t>;
std::set<Pos> satisfy(const Expression* e, const std::vector<Connector>& left,
                      const std::vector<Connector>& right, Pos at) {
    switch (e->kind) {
        case Expression::Kind::Empty:
            return {at};
        case Expression::Kind::Leaf: {
            if (e->leaf.dir == Dir::Left) {
                if (at.first < left.size() && left[at.first].same_shape(e->leaf))
                    return {{at.first + 1, at.second}};
            } else {
                if (at.second < right.size() && right[at.second].same_shape(e->leaf))
                    return {{at.first, at.second + 1}};
            }
            return {};
        }
        case Expression::Kind::And: {
            std::set<Pos> cur{at};
            for (auto& c : e->children) {
                std::set<Pos> next;
                for (auto p : cur)
                    for (auto q : satisfy(c.get(), left, right, p)) next.insert(q);
                cur = std::move(next);
            }
            return cur;
        }
        case Expression::Kind::Or: {
            std::set<Pos> out;
            for (auto& c : e->children)
                for (auto q : satisfy(c.get(), left, right, at)) out.insert(q);
            return out;
        }
        case Expression::Kind::Optional: {
            auto out = satisfy(e->children[0].get(), left, right, at);
            out.insert(at);
            return out;
        }
    }
    return {};
}

ExprPtr parse_formula(const std::string& f) {
    Dictionary d = parse_dictionary({"w: " + f + ";", "test"});
    return d.entries().at("w").expr;
}

std::set<std::string> disjunct_strs(const std::vector<Disjunct>& ds) {
    std::set<std::string> out;
    for (auto& d : ds) out.insert(d.str());
    return out;
}

uint64_t direct_count(const Expression* e) {
    switch (e->kind) {
        case Expression::Kind::Empty:
        case Expression::Kind::Leaf:
            return 1;
        case Expression::Kind::And: {
            uint64_t p = 1;
            for (auto& c : e->children) p *= direct_count(c.get());
            return p;
        }
        case Expression::Kind::Or: {
            uint64_t s = 0;
            for (auto& c : e->children) s += direct_count(c.get());
            return s;
        }
        case Expression::Kind::Optional:
            return 1 + direct_count(e->children[0].get());
    }
    return 0;
}

}  // namespace

TEST_CASE("expansion of the eight-disjunct formula") {
    auto e = parse_formula("(A- or ()) & D- & (B+ or ()) & (O- or S+)");
    auto ds = expand(e);
    CHECK(ds.size() == 8);
    std::set<std::string> expected = {
        "((A,D)(S,B))", "((A,D,O)(B))", "((A,D)(S))", "((A,D,O)())",
        "((D)(S,B))",   "((D,O)(B))",   "((D)(S))",   "((D,O)())",
    };
    CHECK(disjunct_strs(ds) == expected);
}

TEST_CASE("expansion corner cases") {
    CHECK(disjunct_strs(expand(parse_formula("()"))) == std::set<std::string>{"(()())"});
    CHECK(disjunct_strs(expand(parse_formula("{A-} & D-"))) ==
          std::set<std::string>{"((A,D)())", "((D)())"});
}

TEST_CASE("expansion count equals the direct recursive count") {
    // leaves get distinct names so no two disjuncts collide
    std::mt19937 rng(11);
    int leaf_id = 0;
    std::function<ExprPtr(int)> gen = [&](int depth) -> ExprPtr {
        int pick = depth >= 3 ? (int)(rng() % 2) : (int)(rng() % 5);
        if (pick == 0) {
            std::string name = "A";
            int x = leaf_id++;
            do {
                name.push_back((char)('a' + x % 26));
                x /= 26;
            } while (x);
            return Expression::make_leaf(conn(name, rng() % 2 ? Dir::Left : Dir::Right));
        }
        if (pick == 1) return Expression::make_empty();
        int k = 2 + rng() % 2;
        std::vector<ExprPtr> kids;
        for (int i = 0; i < k; ++i) kids.push_back(gen(depth + 1));
        if (pick == 2) return Expression::make_and(std::move(kids));
        if (pick == 3) return Expression::make_or(std::move(kids));
        return Expression::make_optional(kids[0]);
    };
    for (int round = 0; round < 60; ++round) {
        leaf_id = 0;
        ExprPtr e = gen(0);
        // without duplicate merging, the size is exactly the product-sum
        CHECK(expand_nodedup(e).size() == direct_count(e.get()));
        // round trip: each disjunct re-satisfies the formula exactly
        for (auto& d : expand(e)) {
            auto ends = satisfy(e.get(), d.left, d.right, {0, 0});
            CHECK(ends.count({d.left.size(), d.right.size()}) == 1);
        }
    }

    // collision-free shapes: merged size equals the direct count too
    std::function<ExprPtr(int)> gen2 = [&](int depth) -> ExprPtr {
        int pick = depth >= 3 ? 0 : (int)(rng() % 3);
        if (pick == 0) {
            std::string name = "A";
            int x = leaf_id++;
            do {
                name.push_back((char)('a' + x % 26));
                x /= 26;
            } while (x);
            return Expression::make_leaf(conn(name, rng() % 2 ? Dir::Left : Dir::Right));
        }
        std::vector<ExprPtr> kids;
        for (int i = 0; i < 2; ++i) kids.push_back(gen2(depth + 1));
        return pick == 1 ? Expression::make_and(std::move(kids))
                         : Expression::make_or(std::move(kids));
    };
    for (int round = 0; round < 40; ++round) {
        leaf_id = 0;
        ExprPtr e = gen2(0);
        CHECK(expand(e).size() == direct_count(e.get()));
    }
}

TEST_CASE("expansion preserves formula order per direction") {
    auto e = parse_formula("A- & B+ & C- & D+ & {E-} & F+");
    for (auto& d : expand(e)) {
        // left connectors in formula order A, C, (E); right B, D, F
        REQUIRE(d.left.size() >= 2);
        CHECK(d.left[0].name.head == "A");
        CHECK(d.left[1].name.head == "C");
        REQUIRE(d.right.size() == 3);
        CHECK(d.right[0].name.head == "B");
        CHECK(d.right[1].name.head == "D");
        CHECK(d.right[2].name.head == "F");
    }
}

TEST_CASE("duplicate disjuncts merge keeping minimum cost") {
    auto e = parse_formula("[A+] or A+");
    auto ds = expand(e);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].cost == 0);

    auto e2 = parse_formula("[A+] or [[A+]]");
    auto ds2 = expand(e2);
    REQUIRE(ds2.size() == 1);
    CHECK(ds2[0].cost == 1);
}
