#pragma once

#include <string>
#include <vector>

#include "pregroup/core.hpp"
#include "pregroup/grammar.hpp"

namespace pregroup {

// One contraction link between two term positions, 1-based, i < j.
struct Link {
    int i = 0;
    int j = 0;

    bool operator==(const Link& o) const { return i == o.i && j == o.j; }
    bool operator<(const Link& o) const { return i != o.i ? i < o.i : j < o.j; }
};

// Proof object for t1 ... tn <= target: a non-crossing set of contraction
// links covering every position except one survivor, whose factor is below
// the target in the simple-type order. Links are kept sorted by (i, j).
struct Derivation {
    Term term;
    std::vector<Link> links;
    int survivor = 0;  // 1-based
    SimpleType target;

    bool operator==(const Derivation& o) const {
        return term == o.term && links == o.links && survivor == o.survivor &&
               target == o.target;
    }
};

struct ReduceLimits {
    int max_derivations = 1000;
    int max_choice_combos = 64;
};

// Enumerates every derivation of term <= target, deterministically ordered
// (lexicographic on the sorted link lists). An empty result means no
// reduction exists; hitting a bound throws LimitExceeded instead of
// truncating silently. The target must be a bare type (z = 0).
std::vector<Derivation> reduce(const Term& term, const SimpleType& target,
                               const TypePoset& poset, const ReduceLimits& limits = {});

// Same contract as reduce, computed by breadth-first enumeration of
// immediately-adjacent contraction sequences on shrinking terms. Kept
// deliberately independent of reduce's interval search; the two are checked
// against each other.
std::vector<Derivation> oracle_reduce(const Term& term, const SimpleType& target,
                                      const TypePoset& poset,
                                      const ReduceLimits& limits = {});

// Throws Error if any derivation invariant fails: link endpoints disjoint and
// non-crossing, every non-survivor covered, every link contractible with its
// interior fully nested, survivor bare and below the target.
void check_derivation(const Derivation& d, const TypePoset& poset);

// A grammatical reading of a token sequence: one lexicon alternative per
// token plus a derivation of the concatenated term.
struct Parse {
    std::vector<std::string> tokens;
    std::vector<Term> choice;
    Derivation derivation;
};

// Tries every combination of lexicon alternatives (bounded by limits) against
// every target in the group. Readings that differ only in the matched target
// keep the first matching target in declared group order. Output order:
// choice combination first, then derivation order.
std::vector<Parse> parse_tokens(const std::vector<std::string>& tokens,
                                const GrammarSpec& grammar, const std::string& target_group,
                                const ReduceLimits& limits = {});

// Convenience: tokenize, pick the target group from the punctuation, parse.
std::vector<Parse> parse_sentence(const std::string& sentence, const GrammarSpec& grammar,
                                  const ReduceLimits& limits = {});

// Text rendering used by --show-links: one "i-j : ti tj" line per link and a
// final "* k : tk <= target" survivor line.
std::string render_links(const Derivation& d);

// Two aligned rows, words above their types, like the worked examples.
std::string render_word_types(const std::vector<std::string>& tokens,
                              const std::vector<Term>& choice);

// Arc diagram: tokens on a line, non-crossing contraction arcs drawn below.
std::string render_svg(const std::vector<std::string>& tokens, const std::vector<Term>& choice,
                       const Derivation& d);

}  // namespace pregroup
