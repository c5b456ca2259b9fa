#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pregroup/cli.hpp"

namespace {

std::string join(const std::vector<std::string>& words) {
    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    return out;
}

// With no sentence argument, commands read one sentence per line from stdin;
// the process exit code is the worst per-line code.
template <typename Fn>
int run_lines(const std::vector<std::string>& words, Fn fn) {
    if (!words.empty()) return fn(join(words));
    int worst = pregroup::cli::kExitOk;
    for (std::string line; std::getline(std::cin, line);) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        worst = std::max(worst, fn(line));
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pregroup grammar engine: reduction search and tensor semantics"};
    app.require_subcommand(1);
    app.fallthrough();

    pregroup::cli::RunConfig config;
    app.add_option("--grammar", config.grammar_path,
                   "grammar file (default: $PREGROUP_LAB_GRAMMAR)");
    app.add_option("--model", config.model_path, "word-model manifest");
    app.add_option("--targets", config.targets, "target group override");
    app.add_option("--format", config.format, "output format: text | tsv | svg")
        ->check(CLI::IsMember({"text", "tsv", "svg"}));
    app.add_option("--limit", config.limit, "derivation limit per reduction");
    app.add_flag("--all", config.all, "evaluate every parse, not only the first");
    app.add_flag("--show-links", config.show_links, "print contraction links");

    std::vector<std::string> sentence, phrase_a_words;
    std::string phrase_a, phrase_b;
    std::vector<long long> audit_dims;

    CLI::App* parse = app.add_subcommand("parse", "parse a sentence");
    parse->add_option("sentence", sentence, "sentence words");

    CLI::App* meaning = app.add_subcommand("meaning", "evaluate a sentence meaning tensor");
    meaning->add_option("sentence", sentence, "sentence words");

    CLI::App* similarity =
        app.add_subcommand("similarity", "cosine between two phrase meanings");
    similarity->add_option("phrase_a", phrase_a, "first phrase")->required();
    similarity->add_option("phrase_b", phrase_b, "second phrase")->required();

    CLI::App* audit = app.add_subcommand("audit", "tensor vs direct-sum dimension audit");
    audit->add_option("dims", audit_dims, "dim x, dim y, dim z")->expected(3);

    CLI::App* demo = app.add_subcommand("demo", "run the lumberjack walkthrough");
    demo->add_option("--data", config.data_dir, "fixture directory");
    demo->add_option("--write-model", config.write_model_dir,
                     "also write the built word model to this directory");
    demo->add_flag("--strict-lombard", config.strict_lombard,
                   "warn when the printed lombard row disagrees with the raw table");

    CLI11_PARSE(app, argc, argv);

    using namespace pregroup::cli;
    if (parse->parsed())
        return run_lines(sentence,
                         [&](const std::string& s) { return cmd_parse(config, s, std::cout, std::cerr); });
    if (meaning->parsed())
        return run_lines(sentence,
                         [&](const std::string& s) { return cmd_meaning(config, s, std::cout, std::cerr); });
    if (similarity->parsed())
        return cmd_similarity(config, phrase_a, phrase_b, std::cout, std::cerr);
    if (audit->parsed()) {
        if (audit_dims.size() != 3) {
            std::cerr << "error: audit needs three dimensions\n";
            return kExitError;
        }
        return cmd_audit(config, audit_dims[0], audit_dims[1], audit_dims[2], std::cout,
                         std::cerr);
    }
    return cmd_demo_lumberjack(config, std::cout, std::cerr);
}
