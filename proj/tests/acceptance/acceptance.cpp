// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>

#include "helpers.hpp"
#include "lg/cfg.hpp"
#include "lg/pipeline.hpp"
#include "oracle.hpp"

using namespace lg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what, const std::string& detail = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what.c_str(),
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double secs(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

PostConfig default_pp() { return parse_post_config(default_postprocess_text()); }

// ---------------------------------------------------------------- criterion 1
void criterion1() {
    auto t0 = Clock::now();
    Dictionary d1 = lgtest::load_dict_asset("intro1.dict");
    bool ok = true;
    auto verdict = [&](const Dictionary& d, const std::string& line) {
        return process_sentence(d, nullptr, line, {}).accepted;
    };
    ok &= verdict(d1, "the cat chased a snake");
    ok &= verdict(d1, "Mary chased the cat");
    ok &= verdict(d1, "the cat ran");
    ok &= !verdict(d1, "the Mary chased cat");
    ok &= !verdict(d1, "ran Mary");
    ok &= !verdict(d1, "cat ran chased");

    Dictionary d2 = lgtest::load_dict_asset("intro2.dict");
    auto res = process_sentence(d2, nullptr, "the big snake the black cat chased bit Mary", {});
    ok &= res.total_count == 1;

    double dt = secs(t0);
    ok &= dt < 1.0;
    report(1, ok, "intro-dictionary judgements and the unique linkage",
           "count=" + std::to_string(res.total_count) + ", " + std::to_string(dt) + "s");
}

// ---------------------------------------------------------------- criterion 2
void criterion2() {
    Dictionary d =
        parse_dictionary({"w: (A- or ()) & D- & (B+ or ()) & (O- or S+);", "t"});
    std::set<std::string> got;
    for (auto& dj : d.find("w")->disjuncts) got.insert(dj.str());
    std::set<std::string> expected = {
        "((A,D)(S,B))", "((A,D,O)(B))", "((A,D)(S))", "((A,D,O)())",
        "((D)(S,B))",   "((D,O)(B))",   "((D)(S))",   "((D,O)())",
    };
    report(2, got == expected, "disjunctive-form expansion yields the eight disjuncts");
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
    auto m = [](const char* a, const char* b) {
        ConnectorName na, nb;
        parse_connector_name(a, na);
        parse_connector_name(b, nb);
        Connector ca, cb;
        ca.name = na;
        ca.dir = Dir::Right;
        cb.name = nb;
        cb.dir = Dir::Left;
        return match(ca, cb);
    };
    bool ok = m("S", "Ss") && m("S", "Sp") && !m("Sp", "Ss") && m("D*u", "Dmu") &&
              m("D*u", "Dm") && !m("D*u", "Dmc") && m("S", "Dm") == false;
    ok &= m("Dmu", "Dm") && m("Dmc", "Dm") && m("Dm", "Dm");  // all four vs Dm
    report(3, ok, "the subscript matching table");
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
    auto t0 = Clock::now();
    const Dictionary& d = load_abridged();
    PostConfig pp = default_pp();
    std::vector<lgtest::CorpusLine> corpus = lgtest::load_corpus("judgements.txt");
    std::vector<std::string> lines;
    for (auto& c : corpus) lines.push_back(c.text);
    auto results = process_batch(d, &pp, lines, {}, 0);
    int bad = 0;
    for (size_t i = 0; i < corpus.size(); ++i) {
        if (results[i].accepted != corpus[i].expect_accept) {
            ++bad;
            std::printf("    mismatch: %s%s\n", corpus[i].expect_accept ? "" : "*",
                        corpus[i].text.c_str());
        }
    }
    double dt = secs(t0);
    report(4, bad == 0 && dt < 30.0, "abridged-dictionary judgement corpus",
           std::to_string(corpus.size()) + " sentences, " + std::to_string(dt) + "s");
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
    auto t0 = Clock::now();
    bool ok = true;
    uint64_t checked = 0;
    for (const char* asset : {"intro1.dict", "intro2.dict", "syn10.dict"}) {
        Dictionary d = lgtest::load_dict_asset(asset);
        for (int len = 1; len <= 6 && ok; ++len) {
            auto seqs = lgtest::vocabulary_sequences(d, len);
            std::vector<char> bad(seqs.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 256)
#endif
            for (long i = 0; i < (long)seqs.size(); ++i) {
                std::string line;
                for (auto& t : seqs[i]) line += (line.empty() ? "" : " ") + t;
                auto s = lgtest::prepare_one(d, line);
                if (count_linkages(s) != lgtest::oracle_enumerate(s).count) bad[i] = 1;
            }
            checked += seqs.size();
            for (size_t i = 0; i < seqs.size(); ++i) {
                if (!bad[i]) continue;
                ok = false;
                std::string line;
                for (auto& t : seqs[i]) line += (line.empty() ? "" : " ") + t;
                std::printf("    oracle mismatch [%s]: %s\n", asset, line.c_str());
                break;
            }
        }
    }
    report(5, ok, "count equals brute-force enumeration for every sentence up to length 6",
           std::to_string(checked) + " sentences, " + std::to_string(secs(t0)) + "s");
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
    const Dictionary& d = load_abridged();
    PostConfig pp = default_pp();
    std::vector<PipelineOptions> configs(4);
    configs[0].use_prune = configs[0].use_power_prune = configs[0].use_fast_match = false;
    configs[1].use_power_prune = configs[1].use_fast_match = false;
    configs[2].use_fast_match = false;
    for (auto& c : configs) c.max_linkages = 100000;

    auto key_of = [](const SentenceResult& res) {
        std::multiset<std::string> keys;
        for (auto& pl : res.linkages) {
            std::string k;
            for (auto& l : pl.linkage.links)
                k += std::to_string(l.left_word) + l.left_end.str() + "-" +
                     std::to_string(l.right_word) + l.right_end.str() + ";";
            keys.insert(k);
        }
        std::string flat;
        for (auto& k : keys) flat += k + "|";
        return flat;
    };

    bool ok = true;
    for (auto& c : lgtest::load_corpus("judgements.txt")) {
        std::optional<std::string> base;
        for (auto& opts : configs) {
            auto res = process_sentence(d, &pp, c.text, opts);
            std::string key = key_of(res);
            if (!base) base = key;
            else if (*base != key) {
                ok = false;
                std::printf("    pipeline mismatch: %s\n", c.text.c_str());
            }
        }
    }
    report(6, ok, "linkage multisets identical across pruning configurations");
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
    Dictionary d = lgtest::load_dict_asset("and_demo.dict");
    bool ok = true;
    for (auto& c : lgtest::load_corpus("and_demo.txt")) {
        auto res = process_sentence(d, nullptr, c.text, {});
        if (res.accepted != c.expect_accept) {
            ok = false;
            std::printf("    coordination mismatch: %s\n", c.text.c_str());
        }
    }
    // "the cats and dog ran" must link through the D# intersection
    auto res = process_sentence(d, nullptr, "the cats and dog ran", {});
    bool dsharp = false;
    for (auto& pl : res.linkages)
        if (pl.valid())
            for (auto& l : pl.linkage.links)
                if (l.label.str() == "D#") dsharp = true;
    ok &= dsharp;
    report(7, ok, "coordination demo-dictionary judgements (D#, Sp, nesting)");
}

// ---------------------------------------------------------------- criterion 8
void criterion8() {
    Dictionary d = lgtest::load_dict_asset("pp_demo.dict");
    PostConfig pp = default_pp();
    bool ok = true;

    auto rows_of = [](const SentenceResult& res) {
        std::vector<std::string> rows;
        auto& pl = res.linkages.at(0);
        std::vector<int> order(pl.linkage.links.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const Link &x = pl.linkage.links[a], &y = pl.linkage.links[b];
            if (x.left_word != y.left_word) return x.left_word < y.left_word;
            return x.right_word > y.right_word;
        });
        const PreparedSentence& s = *res.variants[pl.variant];
        for (int i : order) {
            const Link& l = pl.linkage.links[i];
            std::string doms;
            for (int dd : pl.domains.link_domains[i])
                doms += std::string("(") + pl.domains.domains[dd].type + ") ";
            if (!doms.empty()) doms.pop_back();
            rows.push_back(doms + "|" + s.words[l.left_word].surface + "|" +
                           l.left_end.name.str() + "|" + l.label.str() + "|" +
                           l.right_end.name.str() + "|" + s.words[l.right_word].surface);
        }
        return rows;
    };

    auto res1 = process_sentence(d, &pp, "John thinks there might be a problem", {});
    std::vector<std::string> table1 = {
        "|/////|WA|WA|WA|John",
        "(g)|John|S|Ss|Ss|thinks",
        "(g)|thinks|CLb|CLb|CL|there",
        "(g) (b)|there|SXst|SXst|SX|might",
        "(g) (b)|might|I|Ii|Ii|be",
        "(g) (b)|be|Ost|Ost|Os|problem",
        "(g) (b)|a|Ds|Ds|Ds|problem",
    };
    ok &= res1.accepted && rows_of(res1) == table1;

    auto res2 = process_sentence(d, &pp, "John thinks there might be running", {});
    std::vector<std::string> table2 = {
        "|/////|WA|WA|WA|John",
        "(g)|John|S|Ss|Ss|thinks",
        "(g)|thinks|CLb|CLb|CL|there",
        "(g) (b)|there|SXst|SXst|SX|might",
        "(g) (b)|might|I|Ii|Ii|be",
        "(g) (b)|be|GI|GI|GI|running",
    };
    ok &= !res2.accepted && rows_of(res2) == table2;
    ok &= res2.linkages.at(0).pp_violations.size() == 1 &&
          res2.linkages[0].pp_violations[0].display == "There rule 2 violated";

    auto res3 = process_sentence(d, &pp, "the dog I screamed when Dave hit died", {});
    ok &= !res3.accepted && !res3.linkages.empty() &&
          res3.linkages[0].pp_violations.size() == 1 &&
          res3.linkages[0].pp_violations[0].display == "Unbounded e domain";

    Dictionary it = lgtest::load_dict_asset("it_demo.dict");
    struct Case {
        const char* line;
        bool accept;
    };
    Case cases[] = {
        {"John thought it was likely that Fred would go", true},
        {"it thought John was likely that Fred would go", false},
        {"It seemed to appear to be likely that John would go", true},
        {"John seemed to appear to be likely that John would go", false},
        {"John seemed to appear to be doubtful that John would go", true},
        {"It seemed to want to be likely that John would go", false},
        {"John seemed to appear to be likely to go", true},
    };
    for (auto& c : cases) {
        auto res = process_sentence(it, &pp, c.line, {});
        if (res.accepted != c.accept) {
            ok = false;
            std::printf("    it-judgement mismatch: %s\n", c.line);
        }
    }
    auto res4 = process_sentence(it, &pp, "it thought John was likely that Fred would go", {});
    auto displays = res4.linkages.at(0).violation_displays();
    ok &= displays.size() == 2 && displays[0] == "THi rule 1 violated" &&
          displays[1] == "THi rule 2 violated";

    report(8, ok, "domain tables row-for-row, verdicts, and the double THi violation");
}

// ---------------------------------------------------------------- criterion 9
void criterion9() {
    auto t0 = Clock::now();
    GnfGrammar g = parse_gnf(
        "S -> a R\n"
        "R -> b\n"
        "R -> a R B\n"
        "B -> b\n");
    Dictionary d = gnf_to_link_grammar(g);
    auto lg_acc = dictionary_acceptor(d);
    auto anbn = [](const std::vector<std::string>& s) {
        size_t n = s.size();
        if (n < 2 || n % 2) return false;
        for (size_t i = 0; i < n / 2; ++i)
            if (s[i] != "a") return false;
        for (size_t i = n / 2; i < n; ++i)
            if (s[i] != "b") return false;
        return true;
    };
    auto rep1 = language_equiv_check(lg_acc, anbn, {"a", "b"}, 8);

    Dictionary intro = lgtest::load_dict_asset("intro1.dict");
    CfgGrammar cfg = link_grammar_to_cfg(intro);
    auto rep2 = language_equiv_check(
        dictionary_acceptor(intro), cfg_acceptor(cfg),
        {"a", "the", "snake", "cat", "Mary", "ran", "chased"}, 5);

    bool ok = rep1.agree() && rep2.agree();
    for (auto& [words, ra, rb] : rep1.disagreements) {
        std::string s;
        for (auto& w : words) s += w + " ";
        std::printf("    gnf disagreement: %s (lg=%d direct=%d)\n", s.c_str(), (int)ra, (int)rb);
    }
    for (auto& [words, ra, rb] : rep2.disagreements) {
        std::string s;
        for (auto& w : words) s += w + " ";
        std::printf("    cfg disagreement: %s (lg=%d cfg=%d)\n", s.c_str(), (int)ra, (int)rb);
    }
    report(9, ok, "cfg bridge equivalences (a^n b^n to 8; intro dictionary to 5)",
           std::to_string(rep1.strings_checked + rep2.strings_checked) + " strings, " +
               std::to_string(secs(t0)) + "s");
}

// --------------------------------------------------------------- criterion 10
void criterion10() {
    Dictionary d = lgtest::load_dict_asset("scaling.dict");
    struct Point {
        int n;
        double t;
        size_t memo;
    };
    std::vector<Point> pts;
    for (int n : {8, 16, 32, 64}) {
        std::string line;
        for (int i = 0; i < n - 1; ++i) line += i ? " a" : "a";
        auto prepared = prepare(d, line);
        auto& sent = prepared.at(0);
        int reps = 0;
        size_t memo = 0;
        auto t0 = Clock::now();
        do {
            ParseContext ctx(sent);
            ctx.count_linkages();
            memo = ctx.stats().memo_entries;
            ++reps;
        } while (secs(t0) < 0.3);
        pts.push_back({n, secs(t0) / reps, memo});
    }
    double c8 = (double)pts[0].memo / (8.0 * 8.0);
    bool memo_ok = true;
    for (auto& p : pts) {
        if ((double)p.memo > 2.0 * c8 * p.n * p.n) memo_ok = false;
        std::printf("    n=%2d  time=%9.3fms  memo=%6zu  t/n^3=%.3g  memo/n^2=%.2f\n", p.n,
                    p.t * 1e3, p.memo, p.t / ((double)p.n * p.n * p.n),
                    (double)p.memo / p.n / p.n);
    }
    // fit t = c*n^3 (geometric mean) and require every point within x3
    double logsum = 0;
    for (auto& p : pts) logsum += std::log(p.t / ((double)p.n * p.n * p.n));
    double cfit = std::exp(logsum / pts.size());
    bool cubic_ok = true;
    double worst = 1;
    for (auto& p : pts) {
        double ratio = p.t / (cfit * p.n * p.n * p.n);
        worst = std::max({worst, ratio, 1.0 / ratio});
        if (ratio > 3.0 || ratio < 1.0 / 3.0) cubic_ok = false;
    }
    report(10, memo_ok && cubic_ok, "memo growth within c*n^2 and cubic time within x3",
           "worst deviation from the fitted cubic: x" + std::to_string(worst));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures ? 1 : 0;
}
