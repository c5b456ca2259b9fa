#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pregroup/core.hpp"

namespace pregroup {

// Word-to-type dictionary. A word may carry several alternative terms; entry
// and alternative order follow the source file and are preserved, so that
// downstream enumeration is reproducible.
struct Lexicon {
    std::vector<std::pair<std::string, std::vector<Term>>> entries;

    // Exact token first, then its lowercased form (proper names).
    const std::vector<Term>* find(const std::string& word) const;

    bool operator==(const Lexicon& o) const { return entries == o.entries; }
};

// Named set of reduction goals, e.g. declarative -> {s1, s2, s}. Members are
// bare basic types (adjoint order zero), kept in declared order.
struct TargetGroup {
    std::string name;
    std::vector<SimpleType> members;

    bool operator==(const TargetGroup& o) const {
        return name == o.name && members == o.members;
    }
};

struct GrammarSpec {
    TypePoset poset;
    Lexicon lexicon;
    std::vector<TargetGroup> targets;

    const TargetGroup* find_targets(const std::string& group) const;

    bool operator==(const GrammarSpec& o) const {
        return poset == o.poset && lexicon == o.lexicon && targets == o.targets;
    }
};

// Parses the textual type-expression syntax: factors separated by whitespace,
// adjoint suffixes ^l, ^r, ^ll, ..., parenthesized groups, and "1" for the
// unit. Compound adjoints are expanded on the spot, so the result is always a
// flat simple-type sequence. Throws SyntaxError with a column, or Error for an
// undeclared basic type.
Term parse_type_expr(const std::string& text, const TypePoset& poset);

// Line-oriented grammar file format ('#' starts a comment):
//   basic <name>
//   order <name> <= <name>
//   target <group> : <name> [<name> ...]
//   word <token> : <type-expr> [| <type-expr> ...]
// Basic types must be declared before any other directive uses them. Errors
// carry the offending line number.
GrammarSpec load_grammar(std::istream& in);
GrammarSpec load_grammar(const std::string& text);
GrammarSpec load_grammar_file(const std::string& path);

// Writes a grammar back in the file format, in declaration order.
std::string save_grammar(const GrammarSpec& grammar);

// The bundled English fragment: subscripted subject/sentence/question types,
// noun hierarchy, infinitives, and every word used by the example sentences.
const std::string& builtin_english_text();
GrammarSpec builtin_english();

// Sentence tokenization: whitespace split; a terminal "." or "?" (attached or
// free-standing) is stripped and selects the target group, "?" -> question,
// otherwise declarative.
struct SentenceInput {
    std::vector<std::string> tokens;
    std::string target_group;
};
SentenceInput tokenize_sentence(const std::string& text);

}  // namespace pregroup
