#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lg/conjunctions.hpp"
#include "lg/dictionary.hpp"
#include "lg/engine.hpp"
#include "lg/postprocess.hpp"
#include "lg/prune.hpp"
#include "lg/render.hpp"

namespace lg {

struct PipelineOptions {
    bool use_prune = true;
    bool use_power_prune = true;
    bool use_fast_match = true;
    bool use_coordination = true;
    bool use_postprocess = true;
    size_t max_linkages = 1000;
    int length_guard = 64;  // tokens
    CoordOptions coord;
    bool collect_prune_stats = false;
};

struct ProcessedLinkage {
    Linkage linkage;
    int variant = 0;  // index into SentenceResult::variants
    LinkageScore sc;
    std::vector<Violation> pp_violations;
    std::vector<AndViolation> and_violations;
    std::vector<AndList> and_lists;
    DomainStructure domains;

    bool valid() const { return pp_violations.empty() && and_violations.empty(); }
    std::vector<std::string> violation_displays() const;
};

struct SentenceResult {
    std::string line;
    std::string error;  // nonempty = preparation failed (unknown word, ...)
    uint64_t total_count = 0;
    std::vector<std::shared_ptr<PreparedSentence>> variants;  // post-rewrite
    std::vector<ProcessedLinkage> linkages;                   // ranked
    bool accepted = false;  // >= 1 linkage with no violations
    EngineStats engine;
    std::vector<PruneStats> prune_stats;  // per variant, when collected

    bool failed() const { return !error.empty(); }
};

SentenceResult process_sentence(const Dictionary& d, const PostConfig* pp,
                                const std::string& line, const PipelineOptions& opts = {});

// Batch processing; jobs > 1 uses OpenMP with ordered result assembly.
// jobs = 0 picks the default thread count.
std::vector<SentenceResult> process_batch(const Dictionary& d, const PostConfig* pp,
                                          const std::vector<std::string>& lines,
                                          const PipelineOptions& opts = {}, int jobs = 1);

}  // namespace lg
