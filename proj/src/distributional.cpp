#include "pregroup/distributional.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace pregroup {

namespace {

void check_labels_unique(const std::vector<std::string>& labels, const char* what) {
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = a + 1; b < labels.size(); ++b)
            if (labels[a] == labels[b])
                throw Error(std::string("duplicate ") + what + " label '" + labels[a] + "'");
}

}  // namespace

const std::vector<double>& CooccurrenceTable::row(const std::string& target) const {
    for (std::size_t r = 0; r < targets.size(); ++r)
        if (targets[r] == target) return counts[r];
    throw Error("unknown target word '" + target + "'");
}

double CooccurrenceTable::at(const std::string& target, const std::string& context) const {
    const std::vector<double>& r = row(target);
    for (std::size_t c = 0; c < contexts.size(); ++c)
        if (contexts[c] == context) return r[c];
    throw Error("unknown context word '" + context + "'");
}

const std::string& ClusterMap::cluster_of(const std::string& context) const {
    for (const auto& [ctx, cluster] : context_to_cluster)
        if (ctx == context) return cluster;
    throw Error("context word '" + context + "' has no cluster");
}

CooccurrenceTable build_cooccurrence(const Corpus& corpus,
                                     const std::vector<std::string>& targets,
                                     const std::vector<std::string>& contexts, int window) {
    if (window < 1) throw Error("window radius must be >= 1");
    check_labels_unique(targets, "target");
    check_labels_unique(contexts, "context");

    CooccurrenceTable table;
    table.targets = targets;
    table.contexts = contexts;
    table.counts.assign(targets.size(), std::vector<double>(contexts.size(), 0.0));

    std::map<std::string, std::size_t> target_index, context_index;
    for (std::size_t k = 0; k < targets.size(); ++k) target_index[targets[k]] = k;
    for (std::size_t k = 0; k < contexts.size(); ++k) context_index[contexts[k]] = k;

    for (const auto& doc : corpus) {
        const long len = static_cast<long>(doc.size());
        for (long pt = 0; pt < len; ++pt) {
            auto ti = target_index.find(doc[static_cast<std::size_t>(pt)]);
            if (ti == target_index.end()) continue;
            const long lo = std::max<long>(0, pt - window);
            const long hi = std::min<long>(len - 1, pt + window);
            for (long pc = lo; pc <= hi; ++pc) {
                if (pc == pt) continue;  // a token is never its own context
                auto ci = context_index.find(doc[static_cast<std::size_t>(pc)]);
                if (ci == context_index.end()) continue;
                table.counts[ti->second][ci->second] += 1.0;
            }
        }
    }
    return table;
}

CooccurrenceTable ppmi(const CooccurrenceTable& table) {
    double total = 0.0;
    std::vector<double> row_sum(table.targets.size(), 0.0);
    std::vector<double> col_sum(table.contexts.size(), 0.0);
    for (std::size_t r = 0; r < table.targets.size(); ++r)
        for (std::size_t c = 0; c < table.contexts.size(); ++c) {
            const double v = table.counts[r][c];
            if (v < 0.0 || !std::isfinite(v)) throw Error("invalid count in table");
            total += v;
            row_sum[r] += v;
            col_sum[c] += v;
        }
    if (total == 0.0) throw Error("cannot normalize an all-zero table");

    CooccurrenceTable out = table;
    for (std::size_t r = 0; r < table.targets.size(); ++r)
        for (std::size_t c = 0; c < table.contexts.size(); ++c) {
            const double joint = table.counts[r][c];
            if (joint == 0.0 || row_sum[r] == 0.0 || col_sum[c] == 0.0) {
                out.counts[r][c] = 0.0;
                continue;
            }
            const double pmi =
                std::log(joint * total / (row_sum[r] * col_sum[c]));
            out.counts[r][c] = std::max(0.0, pmi);
        }
    return out;
}

CooccurrenceTable cluster_columns(const CooccurrenceTable& table, const ClusterMap& clusters) {
    std::map<std::string, std::size_t> cluster_index;
    for (std::size_t k = 0; k < clusters.cluster_order.size(); ++k)
        cluster_index[clusters.cluster_order[k]] = k;

    CooccurrenceTable out;
    out.targets = table.targets;
    out.contexts = clusters.cluster_order;
    out.counts.assign(table.targets.size(),
                      std::vector<double>(clusters.cluster_order.size(), 0.0));
    for (std::size_t c = 0; c < table.contexts.size(); ++c) {
        const std::string& cluster = clusters.cluster_of(table.contexts[c]);
        auto it = cluster_index.find(cluster);
        if (it == cluster_index.end())
            throw Error("cluster '" + cluster + "' missing from cluster order");
        for (std::size_t r = 0; r < table.targets.size(); ++r)
            out.counts[r][it->second] += table.counts[r][c];
    }
    return out;
}

Matrix learn_linear_map(
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& pairs) {
    if (pairs.empty()) throw Error("need at least one training pair");
    const std::size_t din = pairs.front().first.size();
    const std::size_t dout = pairs.front().second.size();
    for (const auto& [u, w] : pairs)
        if (u.size() != din || w.size() != dout)
            throw Error("inconsistent pair dimensions");

    // Normal equations M G = B with G = sum u u^T and B = sum w u^T; the
    // pseudo-inverse picks the minimum-norm M when G is singular.
    Matrix gram(static_cast<int>(din), static_cast<int>(din));
    Matrix cross(static_cast<int>(dout), static_cast<int>(din));
    for (const auto& [u, w] : pairs) {
        for (std::size_t a = 0; a < din; ++a)
            for (std::size_t b = 0; b < din; ++b)
                gram.at(static_cast<int>(a), static_cast<int>(b)) += u[a] * u[b];
        for (std::size_t a = 0; a < dout; ++a)
            for (std::size_t b = 0; b < din; ++b)
                cross.at(static_cast<int>(a), static_cast<int>(b)) += w[a] * u[b];
    }
    return multiply(cross, pseudo_inverse_spd(gram));
}

double residual(const Matrix& m,
                const std::vector<std::pair<std::vector<double>, std::vector<double>>>& pairs) {
    double sum = 0.0;
    for (const auto& [u, w] : pairs) {
        const std::vector<double> got = apply(m, u);
        for (std::size_t k = 0; k < w.size(); ++k) {
            const double d = got[k] - w[k];
            sum += d * d;
        }
    }
    return sum;
}

Corpus load_corpus(std::istream& in) {
    Corpus corpus;
    std::vector<std::string> doc;
    std::string line;
    auto flush = [&] {
        if (!doc.empty()) corpus.push_back(std::move(doc));
        doc = {};
    };
    while (std::getline(in, line)) {
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) {
            flush();
            continue;
        }
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            for (char& c : tok) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            doc.push_back(tok);
        }
    }
    flush();
    return corpus;
}

Corpus load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file '" + path + "'");
    return load_corpus(in);
}

CooccurrenceTable read_table(std::istream& in) {
    CooccurrenceTable table;
    std::string line;
    int line_no = 0;
    auto split_tabs = [](const std::string& s) {
        std::vector<std::string> out;
        std::string field;
        std::istringstream fs(s);
        while (std::getline(fs, field, '\t')) {
            while (!field.empty() && (field.back() == '\r' || field.back() == '\n'))
                field.pop_back();
            out.push_back(field);
        }
        return out;
    };
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_tabs(line);
        if (!have_header) {
            if (fields.size() < 2) throw SyntaxError("table header needs contexts", line_no);
            table.contexts.assign(fields.begin() + 1, fields.end());
            have_header = true;
            continue;
        }
        if (fields.size() != table.contexts.size() + 1)
            throw SyntaxError("row width does not match header", line_no);
        table.targets.push_back(fields[0]);
        std::vector<double> row;
        for (std::size_t c = 1; c < fields.size(); ++c) {
            try {
                row.push_back(std::stod(fields[c]));
            } catch (const std::exception&) {
                throw SyntaxError("invalid number '" + fields[c] + "'", line_no);
            }
        }
        table.counts.push_back(std::move(row));
    }
    if (!have_header) throw Error("empty table");
    check_labels_unique(table.targets, "target");
    check_labels_unique(table.contexts, "context");
    return table;
}

CooccurrenceTable read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open table file '" + path + "'");
    return read_table(in);
}

void write_table(std::ostream& out, const CooccurrenceTable& table) {
    for (const auto& c : table.contexts) out << '\t' << c;
    out << '\n';
    for (std::size_t r = 0; r < table.targets.size(); ++r) {
        out << table.targets[r];
        for (double v : table.counts[r]) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.12g", v);
            out << '\t' << buf;
        }
        out << '\n';
    }
}

}  // namespace pregroup
