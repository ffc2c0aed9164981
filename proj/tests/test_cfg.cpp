#include <doctest.h>

#include "helpers.hpp"
#include "lg/cfg.hpp"
#include "lg/engine.hpp"
#include "oracle.hpp"

using namespace lg;

namespace {

// a^n b^n, n >= 1, with a start variable that never recurs on a right side
const char* kAnBn =
    "S -> a R\n"
    "R -> b\n"
    "R -> a R B\n"
    "B -> b\n";

std::vector<std::string> words(std::initializer_list<const char*> ws) {
    return {ws.begin(), ws.end()};
}

}  // namespace

TEST_CASE("gnf parsing and invariants") {
    GnfGrammar g = parse_gnf(kAnBn);
    CHECK(g.start == "S");
    CHECK(g.prods.size() == 4);
    CHECK(g.terminals == std::set<std::string>{"a", "b"});

    CHECK_THROWS_AS(parse_gnf("S -> a S\n"), CfgError);       // start on a right side
    CHECK_THROWS_AS(parse_gnf("S -> a B\n"), CfgError);       // undefined variable
    CHECK_THROWS_AS(parse_gnf("S -> a\nS -> b\n"), CfgError); // two start productions
    CHECK_THROWS_AS(parse_gnf("S - a\n"), CfgError);          // syntax
}

TEST_CASE("two-word conversion accepts exactly ab") {
    GnfGrammar g = parse_gnf("S -> a B\nB -> b\n");
    Dictionary d = gnf_to_link_grammar(g);
    REQUIRE(d.has("a"));
    REQUIRE(d.has("b"));
    CHECK(d.find("a")->disjuncts[0].str() == "(()(B))");
    CHECK(d.find("b")->disjuncts[0].str() == "((B)())");

    auto acc = dictionary_acceptor(d);
    int accepted = 0;
    for (int len = 1; len <= 4; ++len)
        for (auto& seq : lgtest::vocabulary_sequences(d, len))
            if (acc(seq)) {
                ++accepted;
                CHECK(seq == words({"a", "b"}));
            }
    CHECK(accepted == 1);
}

TEST_CASE("a^n b^n round trip against the grammar itself") {
    GnfGrammar g = parse_gnf(kAnBn);
    Dictionary d = gnf_to_link_grammar(g);
    auto lg_acc = dictionary_acceptor(d);

    // independent membership: direct counting
    auto direct = [](const std::vector<std::string>& s) {
        size_t n = s.size();
        if (n < 2 || n % 2) return false;
        for (size_t i = 0; i < n / 2; ++i)
            if (s[i] != "a") return false;
        for (size_t i = n / 2; i < n; ++i)
            if (s[i] != "b") return false;
        return true;
    };
    auto rep = language_equiv_check(lg_acc, direct, {"a", "b"}, 8);
    CHECK(rep.agree());
    CHECK(rep.strings_checked == 510);
}

TEST_CASE("generated linkages are trees") {
    GnfGrammar g = parse_gnf(kAnBn);
    Dictionary d = gnf_to_link_grammar(g);
    for (auto& dj : d.find("a")->disjuncts) CHECK(dj.left.size() <= 1);
    for (auto& dj : d.find("b")->disjuncts) CHECK(dj.left.size() <= 1);
    auto all = prepare(d, "a a a b b b");
    REQUIRE(all.size() == 1);
    for (auto& lk : extract_linkages(all[0])) {
        CHECK(lk.links.size() == all[0].words.size() - 1);  // spanning tree
        CHECK(verify_linkage(all[0], lk));
    }
}

TEST_CASE("k = 0 productions give a one-word language") {
    GnfGrammar g = parse_gnf("S -> x\n");
    Dictionary d = gnf_to_link_grammar(g);
    auto acc = dictionary_acceptor(d);
    CHECK(acc(words({"x"})));
    CHECK_FALSE(acc(words({"x", "x"})));
}

TEST_CASE("variable renaming for non-connector names") {
    GnfGrammar g = parse_gnf("S -> a B1 Bx\nB1 -> b\nBx -> b B1\n");
    Dictionary d = gnf_to_link_grammar(g);  // would throw if names leaked
    auto acc = dictionary_acceptor(d);
    CHECK(acc(words({"a", "b", "b", "b"})));
    CHECK_FALSE(acc(words({"a", "b"})));
}

TEST_CASE("link grammar to cfg on the intro dictionary") {
    Dictionary d = lgtest::load_dict_asset("intro1.dict");
    CfgGrammar g = link_grammar_to_cfg(d);
    auto cfg_acc = cfg_acceptor(g);
    CHECK(cfg_acc(words({"the", "cat", "chased", "a", "snake"})));
    CHECK(cfg_acc(words({"Mary", "chased", "the", "cat"})));
    CHECK_FALSE(cfg_acc(words({"the", "Mary", "chased", "cat"})));
    CHECK_FALSE(cfg_acc(words({"ran", "Mary"})));

    // full agreement on short sequences (the acceptance suite pushes to 5)
    auto lg_acc = dictionary_acceptor(d);
    auto rep = language_equiv_check(lg_acc, cfg_acc, {"a", "the", "snake", "cat", "Mary",
                                                      "ran", "chased"}, 4);
    CHECK(rep.agree());
}

TEST_CASE("single empty-formula word gives a one-word cfg language") {
    Dictionary d = parse_dictionary({"w: ();", "t"});
    CfgGrammar g = link_grammar_to_cfg(d);
    auto acc = cfg_acceptor(g);
    CHECK(acc(words({"w"})));
    CHECK_FALSE(acc(words({"w", "w"})));
}

TEST_CASE("empty-language dictionary converts to an empty cfg language") {
    Dictionary d = parse_dictionary({"w: Q+;", "t"});
    CfgGrammar g = link_grammar_to_cfg(d);
    auto acc = cfg_acceptor(g);
    for (int len = 1; len <= 6; ++len)
        for (auto& seq : lgtest::vocabulary_sequences(d, len)) CHECK_FALSE(acc(seq));
}

TEST_CASE("unsupported features are refused") {
    Dictionary multi = parse_dictionary({"w: @A+ ; v: A-;", "t"});
    CHECK_THROWS_AS(link_grammar_to_cfg(multi), CfgError);
    Dictionary subs = parse_dictionary({"w: As+; v: A-;", "t"});
    CHECK_THROWS_AS(link_grammar_to_cfg(subs), CfgError);
}

TEST_CASE("the tester catches perturbed grammars") {
    GnfGrammar g = parse_gnf(kAnBn);
    Dictionary d = gnf_to_link_grammar(g);
    auto lg_acc = dictionary_acceptor(d);
    auto wrong = [](const std::vector<std::string>& s) {
        return s.size() == 2;  // deliberately different
    };
    auto rep = language_equiv_check(lg_acc, wrong, {"a", "b"}, 4);
    CHECK_FALSE(rep.agree());
    CHECK(!rep.disagreements.empty());

    auto rep2 = language_equiv_check(lg_acc, lg_acc, {"a", "b"}, 4);
    CHECK(rep2.agree());
}

TEST_CASE("enumeration guard") {
    auto yes = [](const std::vector<std::string>&) { return true; };
    CHECK_THROWS_AS(language_equiv_check(yes, yes, {"a", "b", "c", "d"}, 12), CfgError);
}
