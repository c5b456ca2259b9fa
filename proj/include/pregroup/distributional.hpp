#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pregroup/linalg.hpp"

namespace pregroup {

// Target x context count (or weight) matrix. Row and column labels are unique
// and keep their declared order.
struct CooccurrenceTable {
    std::vector<std::string> targets;
    std::vector<std::string> contexts;
    std::vector<std::vector<double>> counts;  // targets x contexts

    const std::vector<double>& row(const std::string& target) const;
    double at(const std::string& target, const std::string& context) const;
};

// Total assignment of context words to named clusters, clusters ordered.
struct ClusterMap {
    std::vector<std::string> cluster_order;
    std::vector<std::pair<std::string, std::string>> context_to_cluster;

    const std::string& cluster_of(const std::string& context) const;
};

// A corpus is a list of documents, each a token sequence.
using Corpus = std::vector<std::vector<std::string>>;

// Windowed counting: counts[t][c] is the number of ordered position pairs
// (pt, pc), pt != pc, within distance k in the same document, with the target
// word at pt and the context word at pc. Windows never cross document
// boundaries; unknown words contribute nothing.
CooccurrenceTable build_cooccurrence(const Corpus& corpus,
                                     const std::vector<std::string>& targets,
                                     const std::vector<std::string>& contexts, int window);

// Positive pointwise mutual information: max(0, log(p(t,c) / (p(t) p(c)))),
// probabilities from grand-total normalization, zero counts staying zero.
// Errors on an all-zero table.
CooccurrenceTable ppmi(const CooccurrenceTable& table);

// Sums columns cluster-wise; the new contexts are the cluster names.
CooccurrenceTable cluster_columns(const CooccurrenceTable& table, const ClusterMap& clusters);

// Least-squares linear map through the given (input, output) pairs, solved by
// normal equations with a pseudo-inverse, so rank-deficient systems get the
// minimum-norm solution. With a single pair (u -> w) this is w u^T / |u|^2.
Matrix learn_linear_map(
    const std::vector<std::pair<std::vector<double>, std::vector<double>>>& pairs);

// Sum of squared residuals of a candidate map over the pairs.
double residual(const Matrix& m,
                const std::vector<std::pair<std::vector<double>, std::vector<double>>>& pairs);

// Corpus file: one document per blank-line-separated block, whitespace
// tokenization, lowercased.
Corpus load_corpus(std::istream& in);
Corpus load_corpus_file(const std::string& path);

// Table file: tab-separated, header row of contexts, first column of targets.
CooccurrenceTable read_table(std::istream& in);
CooccurrenceTable read_table_file(const std::string& path);
void write_table(std::ostream& out, const CooccurrenceTable& table);

}  // namespace pregroup
