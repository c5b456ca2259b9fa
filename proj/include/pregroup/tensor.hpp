#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pregroup/core.hpp"
#include "pregroup/linalg.hpp"
#include "pregroup/reduce.hpp"

namespace pregroup {

// Named semantic spaces with their dimensions, over the reals.
struct SpaceTable {
    std::vector<std::pair<std::string, int>> spaces;

    int dim(const std::string& name) const;
    bool has(const std::string& name) const;
};

// One tensor index slot: a space, primal or dual. With the fixed orthonormal
// basis a dual slot has the dimension of its space; the flag only validates
// that contraction pairs a slot with its dual.
struct SpaceFactor {
    std::string space;
    bool dual = false;

    bool operator==(const SpaceFactor& o) const {
        return dual == o.dual && space == o.space;
    }
    bool operator!=(const SpaceFactor& o) const { return !(*this == o); }
};

using FactorList = std::vector<SpaceFactor>;

std::string to_string(const SpaceFactor& f);

// Assigns each basic type its factor list, e.g. n -> [N], j -> [N*, S].
// Order-related basic types must share one factor list, so that order steps
// are identities on the semantic side.
struct BasicInterpretation {
    std::vector<std::pair<std::string, FactorList>> map;

    const FactorList& at(const std::string& base) const;
    bool has(const std::string& base) const;

    // Enforces the shared-factor-list requirement for every comparable pair
    // of interpreted basic types.
    void validate_against(const TypePoset& poset) const;
};

// The English-fragment default: noun-like types -> [N], sentence-like -> [S],
// infinitives -> [N*, S].
BasicInterpretation default_english_interpretation();

struct Shape {
    std::vector<SpaceFactor> factors;
    std::vector<int> dims;  // parallel to factors

    std::size_t value_count() const;
    bool operator==(const Shape& o) const { return factors == o.factors && dims == o.dims; }
};

// Dense real tensor, values in row-major order over shape.dims.
struct Tensor {
    Shape shape;
    std::vector<double> values;
};

Tensor scalar_tensor(double value);

// Factor list of one simple type: |z| dualization steps applied to the base
// list, each reversing the order and toggling every dual flag.
FactorList interpret_simple(const SimpleType& t, const BasicInterpretation& interp);

// Concatenation of interpret_simple over the factors, with dims resolved.
Shape interpret_term(const Term& term, const BasicInterpretation& interp,
                     const SpaceTable& spaces);

// A derivation compiled to tensor index plumbing. Axes are numbered globally
// across the concatenated factor lists of all term positions.
struct AxisPair {
    int a = 0;
    int b = 0;
};

struct ContractionPlan {
    std::vector<AxisPair> pairs;   // summed index pairs, one per shape slot per link
    std::vector<int> output_axes;  // the survivor's axes, ascending
    Shape output_shape;
    std::vector<int> position_offset;  // global axis offset of each term position
};

// For each link (i, j), pairs position i's factors with position j's factors
// reversed; every pair must agree on the space and differ on the dual flag,
// otherwise the interpretation is inconsistent and an error names the link
// and factor index.
ContractionPlan contraction_plan(const Derivation& d, const BasicInterpretation& interp,
                                 const SpaceTable& spaces);

// Contracts word tensors laid side by side along the plan's pairs. Equivalent
// to the full outer product followed by summing every paired index group; the
// implementation contracts pairwise as soon as both ends are available.
Tensor contract(const std::vector<Tensor>& word_tensors, const ContractionPlan& plan);

// Reference path: materializes the full outer product, then sums the plan's
// pairs one at a time following pair_order (a permutation of the pair
// indices). Any order must agree with contract(); kept separate so that
// invariance is checkable against the production path.
Tensor contract_in_order(const std::vector<Tensor>& word_tensors, const ContractionPlan& plan,
                         const std::vector<int>& pair_order);

// Word meanings: one tensor per (word, term) pair, plus the interpretation
// they were shaped under. Immutable after construction.
class WordModel {
public:
    WordModel() = default;
    WordModel(SpaceTable spaces, BasicInterpretation interp);

    void add(const std::string& word, const Term& term, Tensor tensor);
    const Tensor* find(const std::string& word, const Term& term) const;

    const SpaceTable& spaces() const { return spaces_; }
    const BasicInterpretation& interpretation() const { return interp_; }

private:
    SpaceTable spaces_;
    BasicInterpretation interp_;
    std::vector<std::pair<std::pair<std::string, Term>, Tensor>> entries_;
};

// Meaning of a parse: the word tensors contracted along the derivation.
Tensor evaluate(const Parse& parse, const WordModel& model);

enum class AuxiliaryVariant { Declarative, YesNo };

// Auxiliary word tensor from an endomorphism mu of the sentence space:
//   declarative (pi3^r s1 j^l): T[n, s, s', n'] = delta(n, n') * mu[s, s']
//   yes-no (q1 i^l pi^l):       T[s, s', n, n'] = mu[s, s'] * delta(n, n')
// Both evaluate to mu(verb(subject)) when contracted in a sentence.
Tensor lift_auxiliary(const Matrix& mu, AuxiliaryVariant variant, const SpaceTable& spaces,
                      const std::string& noun_space = "N",
                      const std::string& sentence_space = "S");

// Subject wh-word tensor over (S, S*, N): T[t, u, m] = delta(t, u) * v[m].
// Applying it to a lifted verb phrase yields the declarative meaning with v
// as subject.
Tensor lift_wh_subject(const std::vector<double>& v, const SpaceTable& spaces,
                       const std::string& noun_space = "N",
                       const std::string& sentence_space = "S");

// Cosine of the flattened values; errors on a zero vector or shape mismatch.
double cosine(const Tensor& u, const Tensor& v);

// Dimension bookkeeping for the term x . y . z^l under both semantics.
struct DimAuditReport {
    long long m = 0, n = 0, p = 0;
    long long tensor_left = 0, tensor_right = 0;    // both bracketings, tensor product
    long long direct_sum_left = 0, direct_sum_right = 0;  // p(m+n) vs m+pn
    bool tensor_equal = false;
    bool direct_sum_equal = false;
};

DimAuditReport dim_audit(long long m, long long n, long long p);
std::string to_string(const DimAuditReport& r);

// Tensor file: "shape d1 d2 ... dk" on the first line, then value_count
// whitespace-separated values in row-major order.
struct RawTensor {
    std::vector<int> dims;
    std::vector<double> values;
};

RawTensor read_raw_tensor(std::istream& in);
RawTensor read_raw_tensor_file(const std::string& path);
void write_tensor(std::ostream& out, const Tensor& t, int digits = 12);

// Word-model manifest: one "<word> \t <type-expr> \t <tensor-file>" line per
// entry (paths relative to the manifest), with optional directives
//   @space <name> <dim>
//   @interp <basic> : <factor> [<factor> ...]      e.g. @interp j : N* S
// Without directives the spaces default to N=3, S=2 under the English-default
// interpretation. Tensor dims are checked against interpret_term of the entry.
WordModel load_word_model(const std::string& manifest_path, const TypePoset& poset);

}  // namespace pregroup
