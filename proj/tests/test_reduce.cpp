#include <doctest.h>

#include <algorithm>
#include <random>

#include "pregroup/reduce.hpp"

using namespace pregroup;

namespace {

Term term_of(std::initializer_list<SimpleType> ts) { return Term{std::vector<SimpleType>(ts)}; }

std::vector<Link> links_of(std::initializer_list<std::pair<int, int>> ps) {
    std::vector<Link> out;
    for (const auto& [i, j] : ps) out.push_back(Link{i, j});
    std::sort(out.begin(), out.end());
    return out;
}

// Replays the links innermost-first as adjacent contractions; returns the
// surviving factor. Fails the test if some link never becomes adjacent or is
// not contractible when applied.
SimpleType replay(const Derivation& d, const TypePoset& poset) {
    std::vector<int> positions;
    for (int p = 1; p <= static_cast<int>(d.term.size()); ++p) positions.push_back(p);
    std::vector<Link> todo = d.links;
    while (!todo.empty()) {
        bool stepped = false;
        for (std::size_t k = 0; k < todo.size(); ++k) {
            auto it = std::find(positions.begin(), positions.end(), todo[k].i);
            if (it == positions.end() || it + 1 == positions.end() || *(it + 1) != todo[k].j)
                continue;
            REQUIRE(contractible(d.term[static_cast<std::size_t>(todo[k].i - 1)],
                                 d.term[static_cast<std::size_t>(todo[k].j - 1)], poset));
            positions.erase(it, it + 2);
            todo.erase(todo.begin() + static_cast<long>(k));
            stepped = true;
            break;
        }
        REQUIRE(stepped);
    }
    REQUIRE(positions.size() == 1);
    REQUIRE(positions[0] == d.survivor);
    return d.term[static_cast<std::size_t>(d.survivor - 1)];
}

struct Golden {
    const char* name;
    const char* words;         // space-separated lexicon-style type expressions
    const char* target;
};

Term sequence_term(const GrammarSpec& g, const std::string& exprs) {
    return parse_type_expr(exprs, g.poset);
}

}  // namespace

TEST_CASE("she sleeps reduces uniquely") {
    const GrammarSpec g = builtin_english();
    const Term t = term_of({{"pi3", 0}, {"pi3", 1}, {"s1", 0}});
    const auto ds = reduce(t, {"s1", 0}, g.poset);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].links == links_of({{1, 2}}));
    CHECK(ds[0].survivor == 3);
    check_derivation(ds[0], g.poset);
}

TEST_CASE("single factor reduces by an order step alone") {
    const GrammarSpec g = builtin_english();
    const auto ds = reduce(term_of({{"s1", 0}}), {"s", 0}, g.poset);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].links.empty());
    CHECK(ds[0].survivor == 1);
}

TEST_CASE("whom may she see: iterated adjoint spans the moved object") {
    const GrammarSpec g = builtin_english();
    const Term t = sequence_term(g, "qbar o^ll q^l  q1 j^l pi^l  pi3  i o^l");
    REQUIRE(t.size() == 9);
    const auto ds = reduce(t, {"qbar", 0}, g.poset);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].links == links_of({{3, 4}, {6, 7}, {5, 8}, {2, 9}}));
    CHECK(ds[0].survivor == 1);
    CHECK(oracle_reduce(t, {"qbar", 0}, g.poset) == std::vector<Derivation>{ds[0]});
}

TEST_CASE("when may she see him: nested iterated-adjoint link") {
    const GrammarSpec g = builtin_english();
    const Term t = sequence_term(g, "qbar i^l i^ll q^l  q1 j^l pi^l  pi3  i o^l  o");
    REQUIRE(t.size() == 11);
    const auto ds = reduce(t, {"qbar", 0}, g.poset);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].links == links_of({{4, 5}, {7, 8}, {3, 6}, {2, 9}, {10, 11}}));
    CHECK(ds[0].survivor == 1);
    // the i^ll - j^l pairing is the trace of the fronted phrase
    CHECK(t[2] == SimpleType{"i", -2});
    CHECK(t[5] == SimpleType{"j", -1});
}

TEST_CASE("even-length terms cannot reduce to a simple type") {
    const GrammarSpec g = builtin_english();
    const Term t = term_of({{"pi", 0}, {"pi", 1}, {"pi", 0}, {"pi", 1}});
    CHECK(reduce(t, {"pi", 0}, g.poset).empty());
    CHECK(oracle_reduce(t, {"pi", 0}, g.poset).empty());
}

TEST_CASE("reduce equals oracle_reduce on every worked type sequence") {
    const GrammarSpec g = builtin_english();
    // Printed type sequences, with the documented corrections applied:
    // ate uses o^l, the who-relative entry is the reconstruction, and the
    // what-question reduces to qbar.
    const Golden goldens[] = {
        {"she sleeps", "pi3  pi3^r s1", "s1"},
        {"she may sleep", "pi3  pi3^r s1 j^l  i", "s1"},
        {"she sees him", "pi3  pi3^r s1 o^l  o", "s1"},
        {"she may see him", "pi3  pi3^r s1 j^l  i o^l  o", "s1"},
        {"she may see him tomorrow", "pi3  pi3^r s1 j^l  i o^l  o  i^r i", "s1"},
        {"she may see him in the university",
         "pi3  pi3^r s1 j^l  i o^l  o  i^r i o^l  nbar1 n1^l  n1", "s1"},
        {"mary may see john", "n  pi3^r s1 j^l  i o^l  n", "s1"},
        {"some people may eat pork", "nbar2 n2^l  n2  pi6^r s1 j^l  i o^l  n0", "s1"},
        {"some people are vegetarian", "nbar2 n2^l  n2  pi6^r s1 abar^l  a", "s1"},
        {"the tall old woman ate vegetables",
         "nbar1 n1^l  n1 n1^l  n1 n1^l  n1  pi3^r s2 o^l  n2", "s2"},
        {"the old woman ate vegetables and rice",
         "nbar1 n1^l  n1 n1^l  n1  pi3^r s2 o^l  n1  n1^r o n0^l  n0", "s2"},
        {"may she sleep", "q1 i^l pi^l  pi3  i", "q1"},
        {"may she see him", "q1 i^l pi^l  pi3  i o^l  o", "q1"},
        {"who may sleep", "qbar s1^l pi3  pi3^r s1 i^l  i", "qbar"},
        {"who may eat pork", "qbar s1^l pi3  pi3^r s1 i^l  i o^l  n0", "qbar"},
        {"who ate vegetables", "qbar s2^l pi3  pi3^r s2 o^l  n2", "qbar"},
        {"whom may she see", "qbar o^ll q^l  q1 j^l pi^l  pi3  i o^l", "qbar"},
        {"when may she see him", "qbar i^l i^ll q^l  q1 j^l pi^l  pi3  i o^l  o", "qbar"},
        {"where may she see him", "qbar i^l i^ll q^l  q1 j^l pi^l  pi3  i o^l  o", "qbar"},
        {"what did the old man eat",
         "qbar o^ll q^l  q1 j^l pi^l  nbar1 n1^l  n1 n1^l  n1  i o^l", "qbar"},
        {"men who saw john", "n2  n^r nbar s^l pi3  pi3^r s2 o^l  n", "nbar"},
        {"men whom john saw", "n2  n^r nbar n^ll s^l  n  pi3^r s2 o^l", "nbar"},
        {"the old woman slept and snored",
         "nbar1 n1^l  n1 n1^l  n1  pi3^r s2  (pi3^r s2)^r (pi3^r s2) (pi3^r s2)^l  pi3^r s2",
         "s2"},
    };
    for (const Golden& gold : goldens) {
        CAPTURE(gold.name);
        const Term t = sequence_term(g, gold.words);
        const SimpleType target{gold.target, 0};
        const auto fast = reduce(t, target, g.poset);
        const auto slow = oracle_reduce(t, target, g.poset);
        CHECK(fast == slow);
        CHECK(fast.size() >= 1);
        for (const Derivation& d : fast) {
            check_derivation(d, g.poset);
            const SimpleType survivor = replay(d, g.poset);
            CHECK(leq_simple(survivor, target, g.poset));
        }
    }
}

TEST_CASE("reduce equals oracle_reduce on random terms") {
    const TypePoset poset({"a", "b", "c"}, {{"a", "b"}});
    std::mt19937 rng(42);
    const std::vector<std::string> bases = {"a", "b", "c"};
    for (int trial = 0; trial < 1000; ++trial) {
        Term t;
        const std::size_t len = 1 + rng() % 7;
        for (std::size_t k = 0; k < len; ++k)
            t.factors.push_back(
                SimpleType{bases[rng() % bases.size()], static_cast<int>(rng() % 5) - 2});
        const SimpleType target{bases[rng() % bases.size()], 0};
        CAPTURE(to_string(t));
        const auto fast = reduce(t, target, poset);
        const auto slow = oracle_reduce(t, target, poset);
        CHECK(fast == slow);
        for (const Derivation& d : fast) check_derivation(d, poset);
    }
}

TEST_CASE("limits are reported, not silently applied") {
    const GrammarSpec g = builtin_english();
    ReduceLimits tight;
    tight.max_derivations = 0;
    CHECK_THROWS_AS(reduce(term_of({{"pi3", 0}, {"pi3", 1}, {"s1", 0}}), {"s1", 0}, g.poset,
                           tight),
                    LimitExceeded);

    std::string many = "basic a\nbasic t\nword w :";
    for (int k = 0; k < 65; ++k) many += (k ? " | a" : " a");
    many += "\ntarget t : t\n";
    const GrammarSpec wide = load_grammar(many);
    CHECK_THROWS_AS(parse_tokens({"w"}, wide, "t"), LimitExceeded);
}

TEST_CASE("reduce validates its preconditions") {
    const GrammarSpec g = builtin_english();
    CHECK_THROWS_AS(reduce(Term{}, {"s", 0}, g.poset), Error);
    CHECK_THROWS_AS(reduce(term_of({{"s", 0}}), {"s", 1}, g.poset), Error);
}

TEST_CASE("parse_tokens: worked sentences") {
    const GrammarSpec g = builtin_english();

    auto parses = parse_sentence("she sleeps .", g);
    REQUIRE(parses.size() == 1);
    CHECK(parses[0].derivation.target == SimpleType{"s1", 0});

    parses = parse_sentence("may she sleep ?", g);
    CHECK(parses.size() >= 1);
    for (const Parse& p : parses) CHECK(p.derivation.target == SimpleType{"q1", 0});

    CHECK(parse_sentence("she sleep .", g).empty());

    CHECK_THROWS_WITH_AS(parse_sentence("she xyzzy .", g), "unknown word 'xyzzy'", Error);
}

TEST_CASE("parse output is deterministic") {
    const GrammarSpec g = builtin_english();
    auto render_all = [&] {
        std::string out;
        for (const Parse& p : parse_sentence("may she see him ?", g))
            out += render_links(p.derivation);
        return out;
    };
    const std::string first = render_all();
    CHECK(first == render_all());
    CHECK(!first.empty());
}

TEST_CASE("link rendering format") {
    const GrammarSpec g = builtin_english();
    const auto ds = reduce(term_of({{"pi3", 0}, {"pi3", 1}, {"s1", 0}}), {"s1", 0}, g.poset);
    REQUIRE(ds.size() == 1);
    CHECK(render_links(ds[0]) == "1-2 : pi3 pi3^r\n* 3 : s1 <= s1\n");
    const std::string svg = render_svg({"she", "sleeps"},
                                       {term_of({{"pi3", 0}}), term_of({{"pi3", 1}, {"s1", 0}})},
                                       ds[0]);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<path") != std::string::npos);
}
