// Benchmarks: cubic-scaling measurement on the synthetic chain grammar, and
// serial vs OpenMP batch throughput on a judgement corpus.
#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "lg/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// counts wrap past ~32 words; the measurements use time and memo size only
const char* kScalingDict = "a: {@X+} & {X-};\n";

struct ScalingPoint {
    int words;
    double seconds;      // per parse
    size_t memo_entries;
    uint64_t count;
};

ScalingPoint measure_scaling(const lg::Dictionary& dict, int words, double min_time) {
    // `words` includes the wall; the sentence has words-1 tokens
    std::string line;
    for (int i = 0; i < words - 1; ++i) line += i ? " a" : "a";
    auto prepared = lg::prepare(dict, line);
    auto& sent = prepared.at(0);

    ScalingPoint pt{words, 0.0, 0, 0};
    int reps = 0;
    auto t0 = Clock::now();
    do {
        lg::ParseContext ctx(sent);
        pt.count = ctx.count_linkages();
        pt.memo_entries = ctx.stats().memo_entries;
        ++reps;
    } while (seconds_since(t0) < min_time);
    pt.seconds = seconds_since(t0) / reps;
    return pt;
}

int run_scaling(const std::vector<int>& sizes, double min_time) {
    lg::Dictionary dict = lg::parse_dictionary({kScalingDict, "scaling"});
    std::printf("%8s %12s %14s %12s %12s %10s\n", "words", "linkages", "time/parse", "memo",
                "t/n^3", "memo/n^2");
    std::vector<double> cs;
    for (int n : sizes) {
        auto pt = measure_scaling(dict, n, min_time);
        double c = pt.seconds / ((double)n * n * n);
        cs.push_back(c);
        std::printf("%8d %12llu %12.3fms %12zu %12.3g %10.2f\n", n,
                    (unsigned long long)pt.count, pt.seconds * 1e3, pt.memo_entries, c,
                    pt.memo_entries / ((double)n * n));
    }
    double lo = *std::min_element(cs.begin(), cs.end());
    double hi = *std::max_element(cs.begin(), cs.end());
    std::printf("cubic fit spread: x%.2f\n", hi / lo);
    return 0;
}

int run_batch(const std::string& dict_path, const std::string& batch_path, int jobs, int reps) {
    const lg::Dictionary* dict;
    lg::Dictionary local;
    if (dict_path.empty()) {
        dict = &lg::load_abridged();
    } else {
        local = lg::parse_dictionary({slurp(dict_path), dict_path});
        dict = &local;
    }
    lg::PostConfig pp = lg::parse_post_config(lg::default_postprocess_text());

    std::vector<std::string> lines;
    std::istringstream in(slurp(batch_path));
    std::string raw;
    while (std::getline(in, raw)) {
        size_t b = raw.find_first_not_of(" \t\r*");
        if (b == std::string::npos || raw[raw.find_first_not_of(" \t\r")] == '%') continue;
        lines.push_back(raw.substr(b));
    }
    std::printf("%zu sentences\n", lines.size());

    auto run = [&](int j) {
        auto t0 = Clock::now();
        std::vector<lg::SentenceResult> results;
        for (int r = 0; r < reps; ++r) results = lg::process_batch(*dict, &pp, lines, {}, j);
        double dt = seconds_since(t0) / reps;
        size_t accepted = 0;
        for (auto& r : results) accepted += r.accepted;
        std::printf("jobs=%d: %.3fs per pass (%zu accepted)\n", j, dt, accepted);
        return std::make_pair(dt, accepted);
    };

    auto [t1, a1] = run(1);
    if (jobs == 1) return 0;
#ifdef _OPENMP
    auto [tj, aj] = run(jobs > 0 ? jobs : omp_get_max_threads());
    if (a1 != aj) {
        std::printf("MISMATCH: serial and parallel verdicts differ\n");
        return 1;
    }
    std::printf("speedup: x%.2f\n", t1 / tj);
#else
    std::printf("built without OpenMP; serial only\n");
#endif
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linkgram benchmarks"};
    app.require_subcommand(1);

    auto* sc = app.add_subcommand("scaling", "cubic-time scaling on the synthetic grammar");
    std::vector<int> sizes{8, 16, 32, 64};
    double min_time = 0.2;
    sc->add_option("--sizes", sizes, "word counts to measure");
    sc->add_option("--min-time", min_time, "minimum sampling time per size (s)");

    auto* bt = app.add_subcommand("batch", "serial vs parallel corpus throughput");
    std::string dict_path, batch_path;
    int jobs = 0, reps = 3;
    bt->add_option("--dict", dict_path, "dictionary (default: bundled abridged)");
    bt->add_option("--batch", batch_path, "corpus file")->required();
    bt->add_option("--jobs", jobs, "parallel worker count (default: all cores)");
    bt->add_option("--reps", reps, "repetitions per configuration");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*sc) return run_scaling(sizes, min_time);
        if (*bt) return run_batch(dict_path, batch_path, jobs, reps);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
