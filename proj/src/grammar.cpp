#include "pregroup/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pregroup {

namespace {

bool is_name_char(char c) {
    return c == '_' || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

std::string lowercased(const std::string& s) {
    std::string out = s;
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

struct ExprParser {
    const std::string& text;
    const TypePoset& poset;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    int column() const { return static_cast<int>(pos) + 1; }

    Term parse_sequence(bool inside_parens) {
        Term out;
        for (;;) {
            skip_ws();
            if (pos >= text.size()) {
                if (inside_parens) throw SyntaxError("expected ')'", 0, column());
                break;
            }
            if (text[pos] == ')') {
                if (inside_parens) break;
                throw SyntaxError("unmatched ')'", 0, column());
            }
            out = concat(out, parse_factor());
        }
        return out;
    }

    Term parse_factor() {
        Term atom;
        if (text[pos] == '(') {
            ++pos;
            atom = parse_sequence(true);
            ++pos;  // the ')' seen by parse_sequence
        } else if (is_name_char(text[pos])) {
            const std::size_t start = pos;
            while (pos < text.size() && is_name_char(text[pos])) ++pos;
            const std::string name = text.substr(start, pos - start);
            if (name != "1") {
                if (!poset.contains(name))
                    throw Error("undeclared basic type '" + name + "'");
                atom = Term{{SimpleType{name, 0}}};
            }
        } else {
            throw SyntaxError(std::string("unexpected character '") + text[pos] +
                                  "' in type expression",
                              0, column());
        }
        while (pos < text.size() && text[pos] == '^') {
            ++pos;
            const std::size_t start = pos;
            while (pos < text.size() && (text[pos] == 'l' || text[pos] == 'r')) ++pos;
            if (pos == start) throw SyntaxError("expected 'l' or 'r' after '^'", 0, column());
            for (std::size_t k = start; k < pos; ++k)
                atom = adjoint(atom, text[k] == 'l' ? AdjointDirection::Left
                                                    : AdjointDirection::Right);
        }
        return atom;
    }
};

}  // namespace

const std::vector<Term>* Lexicon::find(const std::string& word) const {
    for (const auto& [w, terms] : entries)
        if (w == word) return &terms;
    const std::string lower = lowercased(word);
    if (lower != word)
        for (const auto& [w, terms] : entries)
            if (w == lower) return &terms;
    return nullptr;
}

const TargetGroup* GrammarSpec::find_targets(const std::string& group) const {
    for (const auto& g : targets)
        if (g.name == group) return &g;
    return nullptr;
}

Term parse_type_expr(const std::string& text, const TypePoset& poset) {
    ExprParser p{text, poset};
    Term out = p.parse_sequence(false);
    return out;
}

GrammarSpec load_grammar(std::istream& in) {
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);

    // Pass 1: basic type declarations, so later directives can reference any
    // of them regardless of position.
    std::vector<std::string> names;
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        std::string body = lines[ln].substr(0, lines[ln].find('#'));
        auto fields = split_ws(body);
        if (fields.empty() || fields[0] != "basic") continue;
        if (fields.size() != 2)
            throw SyntaxError("expected 'basic <name>'", static_cast<int>(ln) + 1);
        if (std::find(names.begin(), names.end(), fields[1]) != names.end())
            throw SyntaxError("duplicate basic type '" + fields[1] + "'",
                              static_cast<int>(ln) + 1);
        try {
            TypePoset::validate_name(fields[1]);
        } catch (const Error& e) {
            throw SyntaxError(e.what(), static_cast<int>(ln) + 1);
        }
        names.push_back(fields[1]);
    }

    const std::size_t n = names.size();
    auto index_of = [&](const std::string& name, std::size_t ln) -> std::size_t {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            throw SyntaxError("undeclared basic type '" + name + "'",
                              static_cast<int>(ln) + 1);
        return static_cast<std::size_t>(it - names.begin());
    };

    // Incremental closure so a cycle is reported at the line that closes it.
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    std::vector<std::pair<std::string, std::string>> declared_order;
    Lexicon lexicon;
    std::vector<TargetGroup> targets;
    const TypePoset alphabet_only(names, {});

    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        std::string body = trimmed(lines[ln].substr(0, lines[ln].find('#')));
        if (body.empty()) continue;
        auto fields = split_ws(body);
        const std::string& kind = fields[0];
        const int line_no = static_cast<int>(ln) + 1;

        if (kind == "basic") {
            continue;  // handled in pass 1
        } else if (kind == "order") {
            if (fields.size() != 4 || fields[2] != "<=")
                throw SyntaxError("expected 'order <name> <= <name>'", line_no);
            const std::size_t a = index_of(fields[1], ln);
            const std::size_t b = index_of(fields[3], ln);
            if (a != b && leq[b][a])
                throw SyntaxError("order cycle between '" + fields[1] + "' and '" +
                                      fields[3] + "'",
                                  line_no);
            declared_order.emplace_back(fields[1], fields[3]);
            for (std::size_t x = 0; x < n; ++x) {
                if (!leq[x][a]) continue;
                for (std::size_t y = 0; y < n; ++y)
                    if (leq[b][y]) leq[x][y] = true;
            }
        } else if (kind == "target" || kind == "word") {
            const std::size_t colon = body.find(':');
            if (colon == std::string::npos)
                throw SyntaxError("expected ':' in '" + kind + "' directive", line_no);
            auto head = split_ws(body.substr(kind.size(), colon - kind.size()));
            if (head.size() != 1)
                throw SyntaxError("expected exactly one name before ':'", line_no);
            const std::string rhs = body.substr(colon + 1);
            if (kind == "target") {
                auto members = split_ws(rhs);
                if (members.empty())
                    throw SyntaxError("empty target group", line_no);
                TargetGroup* group = nullptr;
                for (auto& g : targets)
                    if (g.name == head[0]) group = &g;
                if (!group) {
                    targets.push_back(TargetGroup{head[0], {}});
                    group = &targets.back();
                }
                for (const auto& m : members) {
                    index_of(m, ln);
                    group->members.push_back(SimpleType{m, 0});
                }
            } else {
                std::vector<Term> alternatives;
                std::string piece;
                std::istringstream alts(rhs);
                while (std::getline(alts, piece, '|')) {
                    if (trimmed(piece).empty())
                        throw SyntaxError("empty type expression", line_no);
                    try {
                        alternatives.push_back(parse_type_expr(piece, alphabet_only));
                    } catch (const SyntaxError& e) {
                        throw SyntaxError(e.what() + std::string(" in entry '") + head[0] + "'",
                                          line_no);
                    } catch (const Error& e) {
                        throw SyntaxError(e.what() + std::string(" in entry '") + head[0] + "'",
                                          line_no);
                    }
                }
                if (alternatives.empty())
                    throw SyntaxError("empty word entry '" + head[0] + "'", line_no);
                std::vector<std::pair<std::string, std::vector<Term>>>& es = lexicon.entries;
                auto it = std::find_if(es.begin(), es.end(),
                                       [&](const auto& e) { return e.first == head[0]; });
                if (it == es.end())
                    es.emplace_back(head[0], std::move(alternatives));
                else
                    it->second.insert(it->second.end(), alternatives.begin(),
                                      alternatives.end());
            }
        } else {
            throw SyntaxError("unknown directive '" + kind + "'", line_no);
        }
    }

    GrammarSpec out;
    out.poset = TypePoset(names, declared_order);
    out.lexicon = std::move(lexicon);
    out.targets = std::move(targets);
    return out;
}

GrammarSpec load_grammar(const std::string& text) {
    std::istringstream in(text);
    return load_grammar(in);
}

GrammarSpec load_grammar_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open grammar file '" + path + "'");
    return load_grammar(in);
}

std::string save_grammar(const GrammarSpec& grammar) {
    std::ostringstream out;
    for (const auto& name : grammar.poset.names()) out << "basic " << name << "\n";
    for (const auto& [a, b] : grammar.poset.declared_order())
        out << "order " << a << " <= " << b << "\n";
    for (const auto& g : grammar.targets) {
        out << "target " << g.name << " :";
        for (const auto& m : g.members) out << ' ' << m.base;
        out << "\n";
    }
    for (const auto& [word, terms] : grammar.lexicon.entries) {
        out << "word " << word << " : ";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) out << " | ";
            out << to_string(terms[i]);
        }
        out << "\n";
    }
    return out.str();
}

GrammarSpec builtin_english() { return load_grammar(builtin_english_text()); }

SentenceInput tokenize_sentence(const std::string& text) {
    SentenceInput out;
    out.tokens = split_ws(text);
    char punct = '\0';
    if (!out.tokens.empty()) {
        std::string& last = out.tokens.back();
        if (last == "." || last == "?") {
            punct = last[0];
            out.tokens.pop_back();
        } else if (!last.empty() && (last.back() == '.' || last.back() == '?')) {
            punct = last.back();
            last.pop_back();
        }
    }
    out.target_group = punct == '?' ? "question" : "declarative";
    return out;
}

}  // namespace pregroup
