#include "pregroup/reduce.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pregroup {

namespace {

using LinkSet = std::vector<std::pair<int, int>>;  // 0-based, sorted

// Enumerates non-crossing complete contraction matchings of half-open
// intervals of the term, memoized per interval. A link from the leftmost
// position must close over a fully matched inside and be followed by a fully
// matched remainder, which is exactly the nesting invariant.
class IntervalMatcher {
public:
    IntervalMatcher(const Term& term, const TypePoset& poset, int cap)
        : term_(term), poset_(poset), cap_(cap) {}

    const std::vector<LinkSet>& matchings(int i, int j) {
        const auto key = std::make_pair(i, j);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        std::vector<LinkSet> out;
        if (i >= j) {
            out.push_back({});
        } else if ((j - i) % 2 == 0) {
            for (int m = i + 1; m < j; m += 2) {
                if (!contractible(term_[static_cast<std::size_t>(i)],
                                  term_[static_cast<std::size_t>(m)], poset_))
                    continue;
                const auto& inside = matchings(i + 1, m);
                const auto& after = matchings(m + 1, j);
                for (const auto& in_links : inside)
                    for (const auto& after_links : after) {
                        LinkSet links;
                        links.reserve(1 + in_links.size() + after_links.size());
                        links.emplace_back(i, m);
                        links.insert(links.end(), in_links.begin(), in_links.end());
                        links.insert(links.end(), after_links.begin(), after_links.end());
                        out.push_back(std::move(links));
                        if (static_cast<int>(out.size()) > cap_)
                            throw LimitExceeded("derivation limit exceeded (" +
                                                std::to_string(cap_) + ")");
                    }
            }
        }
        return memo_.emplace(key, std::move(out)).first->second;
    }

private:
    const Term& term_;
    const TypePoset& poset_;
    int cap_;
    std::map<std::pair<int, int>, std::vector<LinkSet>> memo_;
};

Derivation make_derivation(const Term& term, const LinkSet& links0, int survivor0,
                           const SimpleType& target) {
    Derivation d;
    d.term = term;
    d.links.reserve(links0.size());
    for (const auto& [a, b] : links0) d.links.push_back(Link{a + 1, b + 1});
    std::sort(d.links.begin(), d.links.end());
    d.survivor = survivor0 + 1;
    d.target = target;
    return d;
}

void sort_derivations(std::vector<Derivation>& ds) {
    std::sort(ds.begin(), ds.end(), [](const Derivation& a, const Derivation& b) {
        return a.links != b.links ? a.links < b.links : a.survivor < b.survivor;
    });
}

void require_reducible_target(const Term& term, const SimpleType& target) {
    if (term.empty()) throw Error("cannot reduce the empty term");
    if (target.z != 0)
        throw Error("reduction target must be a bare type, got " + to_string(target));
}

}  // namespace

std::vector<Derivation> reduce(const Term& term, const SimpleType& target,
                               const TypePoset& poset, const ReduceLimits& limits) {
    require_reducible_target(term, target);
    const int n = static_cast<int>(term.size());
    IntervalMatcher matcher(term, poset, limits.max_derivations);
    std::vector<Derivation> out;
    for (int k = 0; k < n; ++k) {
        const SimpleType& cand = term[static_cast<std::size_t>(k)];
        if (cand.z != 0 || !leq_simple(cand, target, poset)) continue;
        if (k % 2 != 0 || (n - k - 1) % 2 != 0) continue;
        for (const auto& left : matcher.matchings(0, k))
            for (const auto& right : matcher.matchings(k + 1, n)) {
                LinkSet links = left;
                links.insert(links.end(), right.begin(), right.end());
                out.push_back(make_derivation(term, links, k, target));
                if (static_cast<int>(out.size()) > limits.max_derivations)
                    throw LimitExceeded("derivation limit exceeded (" +
                                        std::to_string(limits.max_derivations) + ")");
            }
    }
    sort_derivations(out);
    return out;
}

std::vector<Derivation> oracle_reduce(const Term& term, const SimpleType& target,
                                      const TypePoset& poset, const ReduceLimits& limits) {
    require_reducible_target(term, target);
    const int n = static_cast<int>(term.size());

    // States are the sets of links applied so far; the links determine the
    // remaining positions, so a set<> both dedupes and orders the frontier.
    std::set<LinkSet> frontier;
    frontier.insert(LinkSet{});
    std::vector<Derivation> out;

    const int rounds = (n - 1) / 2;
    for (int round = 0; round < rounds; ++round) {
        std::set<LinkSet> next;
        for (const auto& links : frontier) {
            std::vector<int> remaining;
            std::vector<bool> used(static_cast<std::size_t>(n), false);
            for (const auto& [a, b] : links) {
                used[static_cast<std::size_t>(a)] = true;
                used[static_cast<std::size_t>(b)] = true;
            }
            for (int p = 0; p < n; ++p)
                if (!used[static_cast<std::size_t>(p)]) remaining.push_back(p);
            for (std::size_t r = 0; r + 1 < remaining.size(); ++r) {
                const int a = remaining[r];
                const int b = remaining[r + 1];
                if (!contractible(term[static_cast<std::size_t>(a)],
                                  term[static_cast<std::size_t>(b)], poset))
                    continue;
                LinkSet extended = links;
                extended.emplace_back(a, b);
                std::sort(extended.begin(), extended.end());
                next.insert(std::move(extended));
                if (static_cast<int>(next.size()) > limits.max_derivations * 4)
                    throw LimitExceeded("oracle state limit exceeded");
            }
        }
        frontier = std::move(next);
    }

    if ((n - 1) % 2 != 0) return out;  // parity: no survivor possible
    for (const auto& links : frontier) {
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        for (const auto& [a, b] : links) {
            used[static_cast<std::size_t>(a)] = true;
            used[static_cast<std::size_t>(b)] = true;
        }
        int survivor = -1;
        for (int p = 0; p < n; ++p)
            if (!used[static_cast<std::size_t>(p)]) survivor = p;
        const SimpleType& cand = term[static_cast<std::size_t>(survivor)];
        if (cand.z == 0 && leq_simple(cand, target, poset)) {
            out.push_back(make_derivation(term, links, survivor, target));
            if (static_cast<int>(out.size()) > limits.max_derivations)
                throw LimitExceeded("derivation limit exceeded (" +
                                    std::to_string(limits.max_derivations) + ")");
        }
    }
    sort_derivations(out);
    return out;
}

void check_derivation(const Derivation& d, const TypePoset& poset) {
    const int n = static_cast<int>(d.term.size());
    std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);  // 1-based
    for (std::size_t li = 0; li < d.links.size(); ++li) {
        const Link& l = d.links[li];
        if (l.i < 1 || l.j > n || l.i >= l.j) throw Error("link out of range");
        for (int p : {l.i, l.j}) {
            if (owner[static_cast<std::size_t>(p)] != -1)
                throw Error("position " + std::to_string(p) + " in two links");
            owner[static_cast<std::size_t>(p)] = static_cast<int>(li);
        }
        if (!contractible(d.term[static_cast<std::size_t>(l.i - 1)],
                          d.term[static_cast<std::size_t>(l.j - 1)], poset))
            throw Error("link " + std::to_string(l.i) + "-" + std::to_string(l.j) +
                        " is not contractible");
    }
    for (const Link& a : d.links)
        for (const Link& b : d.links)
            if (a.i < b.i && b.i < a.j && a.j < b.j)
                throw Error("crossing links " + std::to_string(a.i) + "-" +
                            std::to_string(a.j) + " and " + std::to_string(b.i) + "-" +
                            std::to_string(b.j));
    for (const Link& l : d.links)
        for (int p = l.i + 1; p < l.j; ++p) {
            const int o = owner[static_cast<std::size_t>(p)];
            if (o == -1)
                throw Error("unlinked position " + std::to_string(p) + " inside link");
            const Link& inner = d.links[static_cast<std::size_t>(o)];
            if (inner.i <= l.i || inner.j >= l.j)
                throw Error("link through position " + std::to_string(p) +
                            " escapes its enclosing link");
        }
    if (d.survivor < 1 || d.survivor > n) throw Error("survivor out of range");
    if (owner[static_cast<std::size_t>(d.survivor)] != -1)
        throw Error("survivor participates in a link");
    for (int p = 1; p <= n; ++p)
        if (p != d.survivor && owner[static_cast<std::size_t>(p)] == -1)
            throw Error("position " + std::to_string(p) + " neither linked nor survivor");
    const SimpleType& s = d.term[static_cast<std::size_t>(d.survivor - 1)];
    if (s.z != 0) throw Error("survivor carries an adjoint");
    if (!leq_simple(s, d.target, poset))
        throw Error("survivor " + to_string(s) + " is not below target " +
                    to_string(d.target));
}

std::vector<Parse> parse_tokens(const std::vector<std::string>& tokens,
                                const GrammarSpec& grammar, const std::string& target_group,
                                const ReduceLimits& limits) {
    const TargetGroup* group = grammar.find_targets(target_group);
    if (!group) throw Error("unknown target group '" + target_group + "'");
    if (tokens.empty()) return {};

    std::vector<const std::vector<Term>*> options;
    options.reserve(tokens.size());
    long long combos = 1;
    for (const auto& tok : tokens) {
        const std::vector<Term>* entry = grammar.lexicon.find(tok);
        if (!entry) throw Error("unknown word '" + tok + "'");
        options.push_back(entry);
        combos *= static_cast<long long>(entry->size());
        if (combos > limits.max_choice_combos)
            throw LimitExceeded("lexical choice limit exceeded (" +
                                std::to_string(limits.max_choice_combos) + ")");
    }

    std::vector<Parse> out;
    std::vector<std::size_t> pick(tokens.size(), 0);
    for (long long c = 0; c < combos; ++c) {
        std::vector<Term> choice;
        Term term;
        for (std::size_t k = 0; k < tokens.size(); ++k) {
            choice.push_back((*options[k])[pick[k]]);
            term = concat(term, choice.back());
        }

        // Collect per-target derivations; a structure seen under an earlier
        // target keeps that target (groups list specific types first).
        std::vector<Derivation> found;
        for (const auto& target : group->members) {
            for (auto& d : reduce(term, target, grammar.poset, limits)) {
                const bool seen = std::any_of(found.begin(), found.end(),
                                              [&](const Derivation& e) {
                                                  return e.links == d.links &&
                                                         e.survivor == d.survivor;
                                              });
                if (!seen) found.push_back(std::move(d));
            }
        }
        sort_derivations(found);
        for (auto& d : found) out.push_back(Parse{tokens, choice, std::move(d)});

        // Advance the mixed-radix choice counter, last token fastest.
        for (std::size_t k = tokens.size(); k-- > 0;) {
            if (++pick[k] < options[k]->size()) break;
            pick[k] = 0;
        }
    }
    return out;
}

std::vector<Parse> parse_sentence(const std::string& sentence, const GrammarSpec& grammar,
                                  const ReduceLimits& limits) {
    const SentenceInput input = tokenize_sentence(sentence);
    return parse_tokens(input.tokens, grammar, input.target_group, limits);
}

std::string render_links(const Derivation& d) {
    std::ostringstream out;
    for (const Link& l : d.links)
        out << l.i << "-" << l.j << " : " << to_string(d.term[static_cast<std::size_t>(l.i - 1)])
            << " " << to_string(d.term[static_cast<std::size_t>(l.j - 1)]) << "\n";
    out << "* " << d.survivor << " : "
        << to_string(d.term[static_cast<std::size_t>(d.survivor - 1)]) << " <= "
        << to_string(d.target) << "\n";
    return out.str();
}

std::string render_word_types(const std::vector<std::string>& tokens,
                              const std::vector<Term>& choice) {
    std::string words, types;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        std::string w = tokens[k];
        std::string t = to_string(choice[k]);
        const std::size_t width = std::max(w.size(), t.size()) + 2;
        w.resize(width, ' ');
        t.resize(width, ' ');
        words += w;
        types += t;
    }
    while (!words.empty() && words.back() == ' ') words.pop_back();
    while (!types.empty() && types.back() == ' ') types.pop_back();
    return words + "\n" + types + "\n";
}

std::string render_svg(const std::vector<std::string>& tokens, const std::vector<Term>& choice,
                       const Derivation& d) {
    // One column per term position; word labels span their positions.
    const int col = 46, x0 = 30, y_word = 24, y_type = 44, y_base = 56;
    const int n = static_cast<int>(d.term.size());

    // Arc depth = nesting level, so inner arcs stay above outer ones.
    std::vector<int> depth(d.links.size(), 1);
    for (std::size_t a = 0; a < d.links.size(); ++a)
        for (std::size_t b = 0; b < d.links.size(); ++b)
            if (d.links[b].i < d.links[a].i && d.links[a].j < d.links[b].j)
                ++depth[b];
    int max_depth = 1;
    for (int v : depth) max_depth = std::max(max_depth, v);

    const int width = x0 * 2 + col * std::max(n - 1, 1);
    const int height = y_base + 22 * max_depth + 30;
    auto x_of = [&](int pos1) { return x0 + col * (pos1 - 1); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" font-family=\"monospace\" font-size=\"13\">\n";
    int pos = 1;
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        const int span = static_cast<int>(choice[k].size());
        const int cx = span > 0 ? (x_of(pos) + x_of(pos + span - 1)) / 2 : x_of(pos);
        svg << "  <text x=\"" << cx << "\" y=\"" << y_word
            << "\" text-anchor=\"middle\">" << tokens[k] << "</text>\n";
        for (int f = 0; f < span; ++f)
            svg << "  <text x=\"" << x_of(pos + f) << "\" y=\"" << y_type
                << "\" text-anchor=\"middle\">"
                << to_string(d.term[static_cast<std::size_t>(pos + f - 1)]) << "</text>\n";
        pos += span;
    }
    for (std::size_t li = 0; li < d.links.size(); ++li) {
        const Link& l = d.links[li];
        const int ya = y_base + 22 * depth[li];
        svg << "  <path d=\"M " << x_of(l.i) << " " << y_base << " C " << x_of(l.i) << " "
            << ya << ", " << x_of(l.j) << " " << ya << ", " << x_of(l.j) << " " << y_base
            << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
    svg << "  <text x=\"" << x_of(d.survivor) << "\" y=\"" << y_base + 22 * max_depth + 20
        << "\" text-anchor=\"middle\">&#8595; "
        << to_string(d.term[static_cast<std::size_t>(d.survivor - 1)])
        << " &#8804; " << to_string(d.target) << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace pregroup
