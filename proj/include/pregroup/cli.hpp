#pragma once

#include <iosfwd>
#include <string>

#include "pregroup/reduce.hpp"

namespace pregroup::cli {

// Exit codes: 0 = success with results, 1 = clean no-result, 2 = input or
// configuration error.
constexpr int kExitOk = 0;
constexpr int kExitNoResult = 1;
constexpr int kExitError = 2;

struct RunConfig {
    std::string grammar_path;           // falls back to $PREGROUP_LAB_GRAMMAR
    std::string model_path;             // word-model manifest
    std::string targets;                // target group override
    std::string data_dir = "data";      // fixture directory for the demo
    std::string write_model_dir;        // demo: also persist the built model here
    bool all = false;                   // meaning: evaluate every parse
    bool show_links = false;
    bool strict_lombard = false;
    std::string format = "text";        // text | tsv | svg
    int limit = 1000;                   // max derivations per reduction
};

int cmd_parse(const RunConfig& config, const std::string& sentence, std::ostream& out,
              std::ostream& err);
int cmd_meaning(const RunConfig& config, const std::string& sentence, std::ostream& out,
                std::ostream& err);
int cmd_similarity(const RunConfig& config, const std::string& phrase_a,
                   const std::string& phrase_b, std::ostream& out, std::ostream& err);
int cmd_audit(const RunConfig& config, long long m, long long n, long long p,
              std::ostream& out, std::ostream& err);
int cmd_demo_lumberjack(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace pregroup::cli
