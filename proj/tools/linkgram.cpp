#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lg/cfg.hpp"
#include "lg/pipeline.hpp"

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Output {
    bool show_wall = false;
    bool show_domains = false;
    bool show_all = false;
    bool dump_prune = false;
};

json linkage_json(const lg::SentenceResult& res, const lg::ProcessedLinkage& pl) {
    const lg::PreparedSentence& s = *res.variants[pl.variant];
    json j;
    j["score"] = {{"pp_violations", pl.sc.pp_violations},
                  {"disjunct_cost", pl.sc.disjunct_cost},
                  {"and_cost", pl.sc.and_cost},
                  {"link_cost", pl.sc.link_cost}};
    j["violations"] = pl.violation_displays();
    json words = json::array();
    for (size_t w = 0; w < s.words.size(); ++w) words.push_back(s.words[w].display_for(pl.linkage.chosen[w]));
    j["words"] = words;
    json links = json::array();
    for (size_t i = 0; i < pl.linkage.links.size(); ++i) {
        auto& l = pl.linkage.links[i];
        json lj;
        lj["left"] = l.left_word;
        lj["right"] = l.right_word;
        lj["left_connector"] = l.left_end.fat ? l.left_end.fat->str() : l.left_end.name.str();
        lj["right_connector"] = l.right_end.fat ? l.right_end.fat->str() : l.right_end.name.str();
        lj["label"] = l.label.str();
        json doms = json::array();
        if (i < pl.domains.link_domains.size())
            for (int d : pl.domains.link_domains[i])
                doms.push_back(std::string(1, pl.domains.domains[d].type));
        lj["domains"] = doms;
        links.push_back(lj);
    }
    j["links"] = links;
    return j;
}

void print_prune_tables(const lg::SentenceResult& res) {
    for (auto& st : res.prune_stats) {
        for (size_t r = 0; r < st.rows.size(); ++r) {
            std::printf("%-12s", st.row_labels[r].c_str());
            for (auto c : st.rows[r]) std::printf("%6zu", c);
            std::printf("\n");
        }
        std::printf("\n");
    }
}

void print_result(const lg::SentenceResult& res, const Output& out) {
    if (res.failed()) {
        std::printf("error: %s\n", res.error.c_str());
        return;
    }
    if (out.dump_prune) print_prune_tables(res);
    size_t valid = 0;
    for (auto& pl : res.linkages)
        if (pl.valid()) ++valid;
    std::printf("Found %llu linkage%s (%zu valid, %zu shown)\n",
                (unsigned long long)res.total_count, res.total_count == 1 ? "" : "s", valid,
                res.linkages.size());
    size_t shown = 0;
    for (auto& pl : res.linkages) {
        if (!out.show_all && shown >= 1) break;
        ++shown;
        std::printf("  Linkage %zu: p.p. violations: %d, disjunct cost: %d, and cost: %d, "
                    "link cost: %d\n",
                    shown, pl.sc.pp_violations, pl.sc.disjunct_cost, pl.sc.and_cost,
                    pl.sc.link_cost);
        auto viols = pl.violation_displays();
        if (!viols.empty()) {
            std::string msg;
            for (auto& v : viols) msg += (msg.empty() ? "" : ", ") + v;
            std::printf("  Invalid linkage: %s.\n", msg.c_str());
        }
        const lg::PreparedSentence& s = *res.variants[pl.variant];
        std::string diagram = lg::render_diagram(s, pl.linkage, {out.show_wall});
        std::istringstream di(diagram);
        std::string line;
        while (std::getline(di, line)) std::printf("    %s\n", line.c_str());
        if (out.show_domains) {
            std::string table = lg::render_table(s, pl.linkage, pl.domains);
            std::istringstream ti(table);
            while (std::getline(ti, line)) std::printf("    %s\n", line.c_str());
        }
    }
    std::printf("\n");
}

int run_parse(const lg::Dictionary& dict, const lg::PostConfig* pp,
              const lg::PipelineOptions& opts, const Output& out, const std::string& batch_path,
              const std::string& export_path, int jobs) {
    std::vector<std::string> lines;
    std::vector<bool> expect_reject;
    bool batch = !batch_path.empty();

    if (batch) {
        std::istringstream in(slurp(batch_path));
        std::string raw;
        while (std::getline(in, raw)) {
            size_t b = raw.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            raw = raw.substr(b);
            if (raw[0] == '%') continue;
            bool reject = raw[0] == '*';
            if (reject) raw = raw.substr(1);
            lines.push_back(raw);
            expect_reject.push_back(reject);
        }
    } else if (!isatty(0)) {
        std::string raw;
        while (std::getline(std::cin, raw)) {
            if (raw.empty() || raw[0] == '%') continue;
            lines.push_back(raw);
            expect_reject.push_back(false);
        }
    }

    json export_doc = json::array();
    int mismatches = 0;

    auto handle = [&](const lg::SentenceResult& res, size_t idx, bool check) {
        if (!batch || !check) {
            std::printf("> %s\n", res.line.c_str());
            print_result(res, out);
        } else {
            bool acc = res.accepted;
            bool expected_acc = !expect_reject[idx];
            bool okay = acc == expected_acc;
            if (!okay) ++mismatches;
            std::printf("%-6s %s%s\n", okay ? "ok" : "FAIL", expect_reject[idx] ? "*" : "",
                        res.line.c_str());
            if (!okay && res.failed()) std::printf("       (%s)\n", res.error.c_str());
        }
        if (!export_path.empty()) {
            json j;
            j["sentence"] = res.line;
            j["count"] = res.total_count;
            j["accepted"] = res.accepted;
            if (res.failed()) j["error"] = res.error;
            json ls = json::array();
            for (auto& pl : res.linkages) ls.push_back(linkage_json(res, pl));
            j["linkages"] = ls;
            export_doc.push_back(j);
        }
    };

    if (!lines.empty()) {
        auto results = lg::process_batch(dict, pp, lines, opts, jobs);
        for (size_t i = 0; i < results.size(); ++i) handle(results[i], i, batch);
    } else {
        // interactive
        std::string raw;
        while (std::getline(std::cin, raw)) {
            if (raw.empty()) continue;
            handle(lg::process_sentence(dict, pp, raw, opts), 0, false);
        }
    }

    if (!export_path.empty()) {
        std::ofstream o(export_path);
        o << export_doc.dump(2) << "\n";
    }
    if (batch && mismatches) {
        std::printf("%d mismatch%s\n", mismatches, mismatches == 1 ? "" : "es");
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"link grammar parsing toolkit"};
    app.require_subcommand(0, 1);

    std::string dict_path, pp_path, batch_path, export_path;
    lg::PipelineOptions opts;
    Output out;
    int jobs = 1;
    bool no_prune = false, no_power = false, no_fast = false, no_and = false, no_pp = false;

    app.add_option("--dict", dict_path, "dictionary file (default: bundled abridged English)");
    app.add_option("--pp-config", pp_path, "post-processing config (default: bundled)");
    app.add_option("--max-linkages", opts.max_linkages, "extraction cap (default 1000)");
    app.add_flag("--show-wall", out.show_wall, "draw wall links in diagrams");
    app.add_flag("--show-domains", out.show_domains, "print the per-link domain table");
    app.add_flag("--all", out.show_all, "print every linkage, not just the best");
    app.add_flag("--no-prune", no_prune, "disable connector pruning");
    app.add_flag("--no-power-prune", no_power, "disable power pruning");
    app.add_flag("--no-fast-match", no_fast, "disable the fast-match tables");
    app.add_flag("--no-and", no_and, "disable coordination handling");
    app.add_flag("--no-pp", no_pp, "disable post-processing");
    app.add_flag("--dump-prune", out.dump_prune, "print per-pass disjunct-count tables");
    app.add_option("--batch", batch_path, "judgement corpus: one sentence per line, '*' = reject");
    app.add_option("--export-json", export_path, "write structured results to a file");
    app.add_option("--jobs", jobs, "batch worker threads (default 1)");
    app.add_option("--max-tokens", opts.length_guard, "sentence length guard (default 64)");

    auto* cg = app.add_subcommand("convert-gnf", "Greibach normal form grammar -> dictionary");
    std::string cg_in, cg_out;
    cg->add_option("input", cg_in)->required();
    cg->add_option("-o,--output", cg_out, "output file (default: stdout)");

    auto* cl = app.add_subcommand("convert-lg", "basic dictionary -> context-free grammar");
    std::string cl_in, cl_out;
    cl->add_option("input", cl_in)->required();
    cl->add_option("-o,--output", cl_out, "output file (default: stdout)");

    auto* eq = app.add_subcommand("equiv-check", "compare two acceptors over short strings");
    std::string eq_lg, eq_gnf, eq_lg2;
    std::vector<std::string> eq_alphabet;
    int eq_maxlen = 6;
    eq->add_option("--lg-dict", eq_lg, "link grammar dictionary side A");
    eq->add_option("--gnf", eq_gnf, "GNF grammar side B");
    eq->add_option("--lg-dict-b", eq_lg2, "link grammar dictionary side B");
    eq->add_option("--alphabet", eq_alphabet, "words to enumerate over (default: inferred)");
    eq->add_option("--maxlen", eq_maxlen, "maximum string length");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cg) {
            lg::GnfGrammar g = lg::parse_gnf(slurp(cg_in));
            lg::Dictionary d = lg::gnf_to_link_grammar(g);
            std::string text = d.print();
            if (cg_out.empty()) std::fputs(text.c_str(), stdout);
            else std::ofstream(cg_out) << text;
            return 0;
        }
        if (*cl) {
            lg::Dictionary d = lg::parse_dictionary({slurp(cl_in), cl_in});
            lg::CfgGrammar g = lg::link_grammar_to_cfg(d);
            std::string text = g.print();
            if (cl_out.empty()) std::fputs(text.c_str(), stdout);
            else std::ofstream(cl_out) << text;
            return 0;
        }
        if (*eq) {
            std::vector<lg::Acceptor> accs;
            std::vector<std::shared_ptr<void>> keep;
            std::set<std::string> sigma(eq_alphabet.begin(), eq_alphabet.end());
            auto add_lg = [&](const std::string& path) {
                auto d = std::make_shared<lg::Dictionary>(lg::parse_dictionary({slurp(path), path}));
                keep.push_back(d);
                accs.push_back(lg::dictionary_acceptor(*d));
                if (eq_alphabet.empty())
                    for (auto& [k, e] : d->entries()) sigma.insert(k);
            };
            if (!eq_lg.empty()) add_lg(eq_lg);
            if (!eq_gnf.empty()) {
                auto g = std::make_shared<lg::GnfGrammar>(lg::parse_gnf(slurp(eq_gnf)));
                // a GNF grammar is already a CFG; recognize it directly
                auto cfg = std::make_shared<lg::CfgGrammar>();
                std::map<std::string, int> vid;
                auto var = [&](const std::string& v) {
                    auto it = vid.find(v);
                    if (it != vid.end()) return it->second;
                    int id = (int)cfg->var_names.size();
                    cfg->var_names.push_back(v);
                    vid[v] = id;
                    return id;
                };
                cfg->start = var(g->start);
                for (auto& p : g->prods) {
                    lg::CfgGrammar::Prod cp;
                    cp.lhs = var(p.lhs);
                    cp.rhs.push_back({true, p.terminal, -1});
                    for (auto& v : p.vars) cp.rhs.push_back({false, "", var(v)});
                    cfg->prods.push_back(std::move(cp));
                }
                keep.push_back(cfg);
                accs.push_back(lg::cfg_acceptor(*cfg));
                if (eq_alphabet.empty())
                    for (auto& t : g->terminals) sigma.insert(t);
            }
            if (!eq_lg2.empty()) add_lg(eq_lg2);
            if (accs.size() != 2) {
                std::fprintf(stderr, "equiv-check needs exactly two acceptors\n");
                return 2;
            }
            std::vector<std::string> alphabet(sigma.begin(), sigma.end());
            auto rep = lg::language_equiv_check(accs[0], accs[1], alphabet, eq_maxlen);
            std::printf("%llu strings checked\n", (unsigned long long)rep.strings_checked);
            if (rep.agree()) {
                std::printf("no disagreements\n");
                return 0;
            }
            for (auto& [words, ra, rb] : rep.disagreements) {
                std::string s;
                for (auto& w : words) s += (s.empty() ? "" : " ") + w;
                std::printf("disagree: \"%s\"  A=%d B=%d\n", s.c_str(), (int)ra, (int)rb);
            }
            return 1;
        }

        lg::Dictionary dict_local;
        const lg::Dictionary* dict;
        if (dict_path.empty()) {
            dict = &lg::load_abridged();
        } else {
            dict_local = lg::parse_dictionary({slurp(dict_path), dict_path});
            dict = &dict_local;
        }
        lg::PostConfig pp = lg::parse_post_config(
            pp_path.empty() ? lg::default_postprocess_text() : slurp(pp_path));

        opts.use_prune = !no_prune;
        opts.use_power_prune = !no_power;
        opts.use_fast_match = !no_fast;
        opts.use_coordination = !no_and;
        opts.use_postprocess = !no_pp;
        opts.collect_prune_stats = out.dump_prune;

        return run_parse(*dict, &pp, opts, out, batch_path, export_path, jobs);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
