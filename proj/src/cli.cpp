#include "pregroup/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "pregroup/distributional.hpp"
#include "pregroup/grammar.hpp"
#include "pregroup/tensor.hpp"

namespace pregroup::cli {

namespace {

std::string resolve_grammar_path(const RunConfig& config) {
    if (!config.grammar_path.empty()) return config.grammar_path;
    if (const char* env = std::getenv("PREGROUP_LAB_GRAMMAR"); env && *env) return env;
    throw Error("no grammar: pass --grammar or set PREGROUP_LAB_GRAMMAR");
}

std::vector<Parse> run_parse(const RunConfig& config, const GrammarSpec& grammar,
                             const std::string& sentence) {
    const SentenceInput input = tokenize_sentence(sentence);
    const std::string group = config.targets.empty() ? input.target_group : config.targets;
    ReduceLimits limits;
    limits.max_derivations = config.limit;
    return parse_tokens(input.tokens, grammar, group, limits);
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void print_parse_text(std::ostream& out, const Parse& p, std::size_t index, bool show_links) {
    out << "parse " << index + 1 << ": target " << to_string(p.derivation.target) << "\n";
    out << render_word_types(p.tokens, p.choice);
    if (show_links) out << render_links(p.derivation);
}

void print_parse_tsv(std::ostream& out, const Parse& p, std::size_t index, bool show_links) {
    out << index + 1 << '\t' << to_string(p.derivation.target);
    for (std::size_t k = 0; k < p.tokens.size(); ++k)
        out << '\t' << p.tokens[k] << ':' << to_string(p.choice[k]);
    if (show_links) {
        out << '\t';
        for (const Link& l : p.derivation.links) out << l.i << '-' << l.j << ';';
        out << '*' << p.derivation.survivor;
    }
    out << '\n';
}

void print_tensor(std::ostream& out, const Tensor& t, const std::string& format) {
    if (format == "tsv") {
        out << "shape";
        for (int d : t.shape.dims) out << '\t' << d;
        out << '\n';
        for (std::size_t k = 0; k < t.values.size(); ++k)
            out << (k ? "\t" : "") << format_number(t.values[k]);
        out << '\n';
    } else {
        write_tensor(out, t);
    }
}

double vec_cosine(const std::vector<double>& u, const std::vector<double>& v) {
    double dot = 0, nu = 0, nv = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        dot += u[k] * v[k];
        nu += u[k] * u[k];
        nv += v[k] * v[k];
    }
    return dot / std::sqrt(nu * nv);
}

double max_abs_diff(const std::vector<double>& u, const std::vector<double>& v) {
    double m = 0;
    for (std::size_t k = 0; k < u.size(); ++k) m = std::max(m, std::fabs(u[k] - v[k]));
    return m;
}

// Plain Gaussian-elimination solve of the normal equations, used as an
// independent check against the library's pseudo-inverse route.
Matrix normal_equations_gaussian(
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& pairs) {
    const int din = static_cast<int>(pairs.front().first.size());
    const int dout = static_cast<int>(pairs.front().second.size());
    Matrix gram(din, din);
    Matrix cross(dout, din);
    for (const auto& [u, w] : pairs) {
        for (int a = 0; a < din; ++a)
            for (int b = 0; b < din; ++b)
                gram.at(a, b) += u[static_cast<std::size_t>(a)] * u[static_cast<std::size_t>(b)];
        for (int a = 0; a < dout; ++a)
            for (int b = 0; b < din; ++b)
                cross.at(a, b) += w[static_cast<std::size_t>(a)] * u[static_cast<std::size_t>(b)];
    }
    // Solve M gram = cross row by row: gram^T x = cross_row^T with gram symmetric.
    Matrix out(dout, din);
    for (int r = 0; r < dout; ++r) {
        Matrix a = gram;
        std::vector<double> rhs(static_cast<std::size_t>(din));
        for (int c = 0; c < din; ++c) rhs[static_cast<std::size_t>(c)] = cross.at(r, c);
        for (int col = 0; col < din; ++col) {
            int pivot = col;
            for (int row = col + 1; row < din; ++row)
                if (std::fabs(a.at(row, col)) > std::fabs(a.at(pivot, col))) pivot = row;
            for (int c = 0; c < din; ++c) std::swap(a.at(col, c), a.at(pivot, c));
            std::swap(rhs[static_cast<std::size_t>(col)], rhs[static_cast<std::size_t>(pivot)]);
            const double d = a.at(col, col);
            if (std::fabs(d) < 1e-12) throw Error("singular normal equations");
            for (int row = 0; row < din; ++row) {
                if (row == col) continue;
                const double f = a.at(row, col) / d;
                for (int c = 0; c < din; ++c) a.at(row, c) -= f * a.at(col, c);
                rhs[static_cast<std::size_t>(row)] -= f * rhs[static_cast<std::size_t>(col)];
            }
        }
        for (int c = 0; c < din; ++c) out.at(r, c) = rhs[static_cast<std::size_t>(c)] / a.at(c, c);
    }
    return out;
}

Tensor vector_tensor(const std::vector<double>& v, const std::string& space,
                     const SpaceTable& spaces) {
    Tensor t;
    t.shape.factors = {{space, false}};
    t.shape.dims = {spaces.dim(space)};
    t.values = v;
    return t;
}

Tensor adjective_tensor(const Matrix& m, const SpaceTable& spaces) {
    Tensor t;
    t.shape.factors = {{"N", false}, {"N", true}};
    t.shape.dims = {spaces.dim("N"), spaces.dim("N")};
    t.values.assign(t.shape.value_count(), 0.0);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            t.values[static_cast<std::size_t>(r * m.cols + c)] = m.at(r, c);
    return t;
}

Tensor verb_tensor(const Matrix& m, const SpaceTable& spaces) {
    // Term n^r s (or i): shape [N*, S]; T[e, f] = M[f, e].
    Tensor t;
    t.shape.factors = {{"N", true}, {"S", false}};
    t.shape.dims = {spaces.dim("N"), spaces.dim("S")};
    t.values.assign(t.shape.value_count(), 0.0);
    for (int e = 0; e < t.shape.dims[0]; ++e)
        for (int f = 0; f < t.shape.dims[1]; ++f)
            t.values[static_cast<std::size_t>(e * t.shape.dims[1] + f)] = m.at(f, e);
    return t;
}

struct DemoModel {
    GrammarSpec grammar;
    WordModel model;
    Matrix mu;
    std::vector<double> lumberjack;
};

DemoModel build_demo_model(const GrammarSpec& grammar, const std::vector<double>& lumberjack,
                           const std::vector<double>& tall_vec,
                           const std::vector<double>& red_vec, const Matrix& f_tall,
                           const Matrix& f_red) {
    SpaceTable spaces;
    spaces.spaces = {{"N", 3}, {"S", 2}};
    BasicInterpretation interp;
    for (const auto& [base, factors] : default_english_interpretation().map)
        if (grammar.poset.contains(base)) interp.map.emplace_back(base, factors);
    interp.validate_against(grammar.poset);

    DemoModel demo{grammar, WordModel(spaces, interp), Matrix::diagonal({0.9375, 1.75}), lumberjack};
    WordModel& model = demo.model;
    const TypePoset& poset = grammar.poset;

    const Matrix drink = learn_linear_map({{tall_vec, {1.0, 0.0}}, {red_vec, {0.0, 1.0}}});

    model.add("lumberjacks", parse_type_expr("n", poset), vector_tensor(lumberjack, "N", spaces));
    model.add("lumberjack", parse_type_expr("n", poset), vector_tensor(lumberjack, "N", spaces));
    model.add("bank", parse_type_expr("n", poset), vector_tensor({1, 0, 0}, "N", spaces));
    model.add("wood", parse_type_expr("n", poset), vector_tensor({0, 1, 0}, "N", spaces));
    model.add("fashion", parse_type_expr("n", poset), vector_tensor({0, 0, 1}, "N", spaces));
    model.add("tall", parse_type_expr("n n^l", poset), adjective_tensor(f_tall, spaces));
    model.add("red", parse_type_expr("n n^l", poset), adjective_tensor(f_red, spaces));
    model.add("drink", parse_type_expr("n^r s", poset), verb_tensor(drink, spaces));
    model.add("drink", parse_type_expr("i", poset), verb_tensor(drink, spaces));
    model.add("may", parse_type_expr("pi3^r s1 j^l", poset),
              lift_auxiliary(demo.mu, AuxiliaryVariant::Declarative, spaces));
    model.add("may", parse_type_expr("q1 i^l pi^l", poset),
              lift_auxiliary(demo.mu, AuxiliaryVariant::YesNo, spaces));
    model.add("who", parse_type_expr("qbar s1^l pi3", poset),
              lift_wh_subject(lumberjack, spaces));
    return demo;
}

void write_demo_model(const DemoModel& demo, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::ostringstream manifest;
    manifest << "# word model for the lumberjack walkthrough\n";
    struct Row {
        const char* word;
        const char* expr;
        const char* file;
    };
    const Row rows[] = {
        {"lumberjacks", "n", "lumberjacks.tensor"},
        {"lumberjack", "n", "lumberjacks.tensor"},
        {"bank", "n", "bank_axis.tensor"},
        {"wood", "n", "wood_axis.tensor"},
        {"fashion", "n", "fashion_axis.tensor"},
        {"tall", "n n^l", "tall.tensor"},
        {"red", "n n^l", "red.tensor"},
        {"drink", "n^r s", "drink.tensor"},
        {"drink", "i", "drink.tensor"},
        {"may", "pi3^r s1 j^l", "may_declarative.tensor"},
        {"may", "q1 i^l pi^l", "may_yesno.tensor"},
        {"who", "qbar s1^l pi3", "who.tensor"},
    };
    std::vector<std::string> written;
    for (const Row& row : rows) {
        manifest << row.word << '\t' << row.expr << '\t' << row.file << '\n';
        if (std::find(written.begin(), written.end(), row.file) != written.end()) continue;
        written.push_back(row.file);
        const Term term = parse_type_expr(row.expr, demo.grammar.poset);
        const Tensor* t = demo.model.find(row.word, term);
        std::ofstream f(fs::path(dir) / row.file);
        write_tensor(f, *t, 17);
    }
    std::ofstream mf(fs::path(dir) / "demo.manifest");
    mf << manifest.str();
}

Tensor demo_meaning(const DemoModel& demo, const std::string& sentence) {
    ReduceLimits limits;
    const std::vector<Parse> parses = parse_sentence(sentence, demo.grammar, limits);
    if (parses.empty()) throw Error("no parse for '" + sentence + "'");
    return evaluate(parses.front(), demo.model);
}

}  // namespace

int cmd_parse(const RunConfig& config, const std::string& sentence, std::ostream& out,
              std::ostream& err) {
    try {
        const GrammarSpec grammar = load_grammar_file(resolve_grammar_path(config));
        const std::vector<Parse> parses = run_parse(config, grammar, sentence);
        if (parses.empty()) return kExitNoResult;
        for (std::size_t k = 0; k < parses.size(); ++k) {
            if (config.format == "tsv")
                print_parse_tsv(out, parses[k], k, config.show_links);
            else if (config.format == "svg")
                out << render_svg(parses[k].tokens, parses[k].choice, parses[k].derivation);
            else
                print_parse_text(out, parses[k], k, config.show_links);
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_meaning(const RunConfig& config, const std::string& sentence, std::ostream& out,
                std::ostream& err) {
    try {
        if (config.model_path.empty()) throw Error("no word model: pass --model");
        const GrammarSpec grammar = load_grammar_file(resolve_grammar_path(config));
        const WordModel model = load_word_model(config.model_path, grammar.poset);
        const std::vector<Parse> parses = run_parse(config, grammar, sentence);
        if (parses.empty()) return kExitNoResult;
        const std::size_t n = config.all ? parses.size() : 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (config.show_links) out << render_links(parses[k].derivation);
            print_tensor(out, evaluate(parses[k], model), config.format);
        }
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_similarity(const RunConfig& config, const std::string& phrase_a,
                   const std::string& phrase_b, std::ostream& out, std::ostream& err) {
    try {
        if (config.model_path.empty()) throw Error("no word model: pass --model");
        const GrammarSpec grammar = load_grammar_file(resolve_grammar_path(config));
        const WordModel model = load_word_model(config.model_path, grammar.poset);
        const std::vector<Parse> pa = run_parse(config, grammar, phrase_a);
        const std::vector<Parse> pb = run_parse(config, grammar, phrase_b);
        if (pa.empty() || pb.empty()) return kExitNoResult;
        const double c = cosine(evaluate(pa.front(), model), evaluate(pb.front(), model));
        out << format_number(c) << "\n";
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_audit(const RunConfig& config, long long m, long long n, long long p,
              std::ostream& out, std::ostream& err) {
    (void)config;
    try {
        out << to_string(dim_audit(m, n, p));
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_demo_lumberjack(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        namespace fs = std::filesystem;
        const fs::path data(config.data_dir);
        int failures = 0;
        auto check = [&](const std::string& name, bool ok) {
            out << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
            if (!ok) ++failures;
        };

        out << "== windowed co-occurrence from the toy corpus (k = 5) ==\n";
        const CooccurrenceTable raw = read_table_file((data / "lumberjack_raw.tsv").string());
        const Corpus corpus = load_corpus_file((data / "lumberjack_corpus.txt").string());
        write_table(out, build_cooccurrence(corpus, {"lumberjack", "lombard"},
                                            raw.contexts, 5));

        out << "\n== fixture raw table, clustered ==\n";
        ClusterMap clusters;
        clusters.cluster_order = {"bank", "wood", "fashion"};
        for (const char* c : {"pawn", "bank", "furniture"})
            clusters.context_to_cluster.emplace_back(c, "bank");
        for (const char* c : {"log", "wood", "saw", "tree"})
            clusters.context_to_cluster.emplace_back(c, "wood");
        for (const char* c : {"shirt", "boot", "beard"})
            clusters.context_to_cluster.emplace_back(c, "fashion");
        const CooccurrenceTable clustered = cluster_columns(raw, clusters);
        write_table(out, clustered);

        const std::vector<double> lumberjack = clustered.row("lumberjack");
        check("A8 clustered lumberjack vector is (0, 91, 6)",
              lumberjack == std::vector<double>({0.0, 91.0, 6.0}));

        const CooccurrenceTable printed =
            read_table_file((data / "lumberjack_clustered_printed.tsv").string());
        if (config.strict_lombard) {
            const std::vector<double> computed = clustered.row("lombard");
            const std::vector<double> as_printed = printed.row("lombard");
            if (computed != as_printed) {
                out << "WARN  clustered lombard row computed from the raw table is (";
                for (std::size_t k = 0; k < computed.size(); ++k)
                    out << (k ? ", " : "") << format_number(computed[k]);
                out << ") but the printed table has (";
                for (std::size_t k = 0; k < as_printed.size(); ++k)
                    out << (k ? ", " : "") << format_number(as_printed[k]);
                out << ")\n";
            }
        }

        out << "\n== adjective maps learnt from single pairs ==\n";
        const std::vector<double> red_vec = printed.row("red lumberjack");
        const std::vector<double> tall_vec = printed.row("tall lumberjack");
        const Matrix f_red = learn_linear_map({{lumberjack, red_vec}});
        const Matrix f_tall = learn_linear_map({{lumberjack, tall_vec}});
        check("A8 red map reproduces (0, 16, 73) with residual < 1e-9",
              residual(f_red, {{lumberjack, red_vec}}) < 1e-9);
        check("A8 tall map reproduces (0, 98, 2) with residual < 1e-9",
              residual(f_tall, {{lumberjack, tall_vec}}) < 1e-9);

        const std::vector<double> fashion_axis = {0, 0, 1};
        const double cos_lj = vec_cosine(lumberjack, fashion_axis);
        const double cos_red = vec_cosine(apply(f_red, lumberjack), fashion_axis);
        const double cos_tall = vec_cosine(apply(f_tall, lumberjack), fashion_axis);
        out << "cos(lumberjack, fashion)      = " << format_number(cos_lj) << "\n";
        out << "cos(red lumberjack, fashion)  = " << format_number(cos_red) << "\n";
        out << "cos(tall lumberjack, fashion) = " << format_number(cos_tall) << "\n";
        check("A8 red moves towards the fashion axis", cos_red > cos_lj);
        check("A8 tall moves away from the fashion axis", cos_tall < cos_lj);

        {
            std::mt19937 rng(20240811);
            std::uniform_real_distribution<double> dist(-1.0, 1.0);
            std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
            for (int k = 0; k < 5; ++k) {
                std::vector<double> u(3), w(2);
                for (double& x : u) x = dist(rng);
                for (double& x : w) x = dist(rng);
                pairs.emplace_back(u, w);
            }
            const Matrix a = learn_linear_map(pairs);
            const Matrix b = normal_equations_gaussian(pairs);
            check("A8 multi-pair learning matches the normal-equation solve within 1e-6",
                  max_abs_diff(a.v, b.v) <= 1e-6);
        }

        out << "\n== tensor vs direct-sum dimension audit ==\n";
        out << to_string(dim_audit(2, 3, 4));
        bool audit_ok = true;
        for (long long m = 1; m <= 6; ++m)
            for (long long n = 1; n <= 6; ++n)
                for (long long p = 1; p <= 6; ++p) {
                    const DimAuditReport r = dim_audit(m, n, p);
                    audit_ok = audit_ok && r.tensor_equal && (r.direct_sum_equal == (p == 1));
                }
        check("A4 tensor bracketings agree on [1..6]^3; direct sum only at p = 1", audit_ok);

        out << "\n== bracketing invariance of contraction ==\n";
        {
            std::mt19937 rng(5585);
            std::uniform_real_distribution<double> dist(-1.0, 1.0);
            SpaceTable spaces;
            spaces.spaces = {{"N", 3}, {"S", 2}};
            double worst = 0.0;
            for (int trial = 0; trial < 100; ++trial) {
                // x . y . z^l applied to z, with z spanning 1-3 slots.
                auto random_list = [&](std::size_t len) {
                    FactorList fl;
                    for (std::size_t k = 0; k < len; ++k)
                        fl.push_back(SpaceFactor{rng() % 2 ? "N" : "S", false});
                    return fl;
                };
                const FactorList fx = random_list(1 + rng() % 2);
                const FactorList fy = random_list(1 + rng() % 2);
                const FactorList fz = random_list(1 + rng() % 3);
                auto make = [&](const FactorList& fl) {
                    Tensor t;
                    for (const SpaceFactor& f : fl) {
                        t.shape.factors.push_back(f);
                        t.shape.dims.push_back(spaces.dim(f.space));
                    }
                    t.values.resize(t.shape.value_count());
                    for (double& v : t.values) v = dist(rng);
                    return t;
                };
                FactorList fzl(fz.rbegin(), fz.rend());
                for (SpaceFactor& f : fzl) f.dual = true;
                const Tensor tx = make(fx), ty = make(fy), tzl = make(fzl), tz = make(fz);
                ContractionPlan plan;
                const int nx = static_cast<int>(fx.size()), ny = static_cast<int>(fy.size());
                const int nz = static_cast<int>(fz.size());
                for (int k = 0; k < nz; ++k)
                    plan.pairs.push_back(AxisPair{nx + ny + k, nx + ny + nz + (nz - 1 - k)});
                for (int k = 0; k < nx + ny; ++k) plan.output_axes.push_back(k);
                for (const FactorList* fl : {&fx, &fy})
                    for (const SpaceFactor& f : *fl) {
                        plan.output_shape.factors.push_back(f);
                        plan.output_shape.dims.push_back(spaces.dim(f.space));
                    }
                const std::vector<Tensor> words = {tx, ty, tzl, tz};
                const Tensor base = contract(words, plan);
                std::vector<int> order(plan.pairs.size());
                for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
                do {
                    const Tensor alt = contract_in_order(words, plan, order);
                    worst = std::max(worst, max_abs_diff(base.values, alt.values));
                } while (std::next_permutation(order.begin(), order.end()));
            }
            out << "largest deviation across contraction orders: " << format_number(worst)
                << "\n";
            check("A5 all contraction orders agree within 1e-9", worst <= 1e-9);
        }

        out << "\n== truth-degree pipeline ==\n";
        const GrammarSpec grammar = load_grammar_file((data / "lumberjack.grammar").string());
        const DemoModel demo =
            build_demo_model(grammar, lumberjack, tall_vec, red_vec, f_tall, f_red);
        if (!config.write_model_dir.empty()) {
            write_demo_model(demo, config.write_model_dir);
            out << "word model written to " << config.write_model_dir << "\n";
        }

        auto show = [&](const std::string& sentence) {
            const Tensor t = demo_meaning(demo, sentence);
            out << std::left << std::setw(28) << sentence << " -> ";
            for (std::size_t k = 0; k < t.values.size(); ++k)
                out << (k ? " " : "") << format_number(t.values[k]);
            out << "\n";
            return t;
        };

        show("lumberjacks drink .");
        const Tensor tall_s = show("tall lumberjacks drink .");
        const Tensor red_s = show("red lumberjacks drink .");
        check("A6 tall lumberjacks drink = (1, 0)",
              max_abs_diff(tall_s.values, {1.0, 0.0}) <= 1e-12);
        check("A6 red lumberjacks drink = (0, 1)",
              max_abs_diff(red_s.values, {0.0, 1.0}) <= 1e-12);
        check("A6 mu nudges (0.8, 0.2) to (0.75, 0.35)",
              max_abs_diff(apply(demo.mu, {0.8, 0.2}), {0.75, 0.35}) <= 1e-12);

        const Tensor decl = show("lumberjacks may drink .");
        const Tensor yesno = show("may lumberjacks drink ?");
        const Tensor who = show("who may drink ?");
        check("A7 yes-no question meaning equals the declarative",
              max_abs_diff(yesno.values, decl.values) <= 1e-12);
        check("A7 who-question meaning equals the declarative",
              max_abs_diff(who.values, decl.values) <= 1e-12);

        out << "\n" << (failures == 0 ? "all checks passed" : "CHECKS FAILED") << "\n";
        return failures == 0 ? kExitOk : kExitNoResult;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace pregroup::cli
