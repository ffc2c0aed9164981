#include "lg/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lg {

std::vector<std::string> ProcessedLinkage::violation_displays() const {
    std::vector<std::string> out;
    for (auto& v : and_violations) out.push_back(v.name + " violated");
    for (auto& v : pp_violations) out.push_back(v.display);
    return out;
}

SentenceResult process_sentence(const Dictionary& d, const PostConfig* pp,
                                const std::string& line, const PipelineOptions& opts) {
    SentenceResult res;
    res.line = line;

    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) return res;
    if ((int)tokens.size() > opts.length_guard) {
        res.error = "sentence longer than " + std::to_string(opts.length_guard) + " tokens";
        return res;
    }

    std::vector<PreparedSentence> variants;
    try {
        PrepareOptions popt;
        popt.coordination = opts.use_coordination;
        variants = prepare(d, line, popt);
    } catch (const UnknownWordError& e) {
        res.error = e.what();
        return res;
    }

    for (auto& var : variants) {
        auto sent = std::make_shared<PreparedSentence>(std::move(var));
        if (opts.use_coordination) expand_for_coordination(*sent, opts.coord);

        NearestInfo nearest;
        if (opts.use_prune) {
            PruneStats st = prune(*sent);
            if (opts.collect_prune_stats) res.prune_stats.push_back(std::move(st));
        }
        if (opts.use_power_prune) {
            PowerPruneResult pr = power_prune(*sent);
            nearest = std::move(pr.nearest);
            if (opts.collect_prune_stats) res.prune_stats.push_back(std::move(pr.stats));
        }
        FastMatchTables tables;
        EngineOptions eopt;
        if (!nearest.empty()) eopt.nearest = &nearest;
        if (opts.use_fast_match)
            tables = FastMatchTables::build(*sent, nearest.empty() ? nullptr : &nearest);

        int vi = (int)res.variants.size();
        res.variants.push_back(sent);

        if (opts.use_fast_match) eopt.fast_match = &tables;
        ParseContext ctx(*sent, eopt);
        res.total_count += ctx.count_linkages();
        res.engine.memo_entries += ctx.stats().memo_entries;
        res.engine.count_calls += ctx.stats().count_calls;

        size_t room = opts.max_linkages > res.linkages.size()
                          ? opts.max_linkages - res.linkages.size()
                          : 0;
        for (auto& lk : ctx.extract_linkages(room)) {
            ProcessedLinkage pl;
            pl.variant = vi;
            pl.linkage = std::move(lk);
            if (opts.use_coordination) {
                AndValidation av = validate_and_linkage(*sent, pl.linkage);
                pl.and_violations = std::move(av.violations);
                pl.and_lists = std::move(av.lists);
                pl.sc.and_cost = av.and_cost;
            }
            if (opts.use_postprocess && pp) {
                pl.domains = build_domains(pl.linkage, *pp);
                pl.pp_violations = check_rules(pl.domains, pl.linkage, *pp);
            }
            size_t nviol = pl.pp_violations.size() + pl.and_violations.size();
            int and_cost = pl.sc.and_cost;
            pl.sc = score(*sent, pl.linkage, nviol, and_cost);
            res.linkages.push_back(std::move(pl));
        }
    }

    rank(res.linkages, [](const ProcessedLinkage& p) { return p.sc; });
    for (auto& pl : res.linkages)
        if (pl.valid()) res.accepted = true;
    return res;
}

std::vector<SentenceResult> process_batch(const Dictionary& d, const PostConfig* pp,
                                          const std::vector<std::string>& lines,
                                          const PipelineOptions& opts, int jobs) {
    std::vector<SentenceResult> out(lines.size());
#ifdef _OPENMP
    if (jobs != 1) {
        int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long i = 0; i < (long)lines.size(); ++i)
            out[i] = process_sentence(d, pp, lines[i], opts);
        return out;
    }
#endif
    for (size_t i = 0; i < lines.size(); ++i) out[i] = process_sentence(d, pp, lines[i], opts);
    return out;
}

}  // namespace lg
