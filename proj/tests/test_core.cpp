#include <doctest.h>

#include <random>

#include "pregroup/core.hpp"

using namespace pregroup;

namespace {

Term term_of(std::initializer_list<SimpleType> ts) { return Term{std::vector<SimpleType>(ts)}; }

TypePoset tiny_poset() { return TypePoset({"p", "q"}, {{"p", "q"}}); }

// Diamond: a <= b <= d and a <= c <= d.
TypePoset diamond_poset() {
    return TypePoset({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "d"}, {"a", "c"}, {"c", "d"}});
}

// Proof search for u . v <= 1 from the pregroup axioms alone: same-base
// adjacent-z pairs contract axiomatically, and each side may be raised along
// declared order edges (direction flipping with z parity) up to the given
// depth. Independent of contractible(); used to validate the parity rule.
bool axiom_chain_proves(const SimpleType& u, const SimpleType& v, const TypePoset& poset,
                        int depth) {
    if (u.z + 1 == v.z && u.base == v.base) return true;
    if (depth == 0) return false;
    auto raised = [&](const SimpleType& t) {
        std::vector<SimpleType> out;
        for (const auto& [x, y] : poset.declared_order()) {
            const bool even = t.z % 2 == 0;
            if (even && t.base == x) out.push_back(SimpleType{y, t.z});
            if (!even && t.base == y) out.push_back(SimpleType{x, t.z});
        }
        return out;
    };
    for (const SimpleType& u2 : raised(u))
        if (axiom_chain_proves(u2, v, poset, depth - 1)) return true;
    for (const SimpleType& v2 : raised(v))
        if (axiom_chain_proves(u, v2, poset, depth - 1)) return true;
    return false;
}

}  // namespace

TEST_CASE("adjoint reverses factors and shifts z") {
    const TypePoset poset = tiny_poset();
    const Term pq = term_of({{"p", 0}, {"q", 0}});
    CHECK(adjoint(pq, AdjointDirection::Left) == term_of({{"q", -1}, {"p", -1}}));
    CHECK(adjoint(pq, AdjointDirection::Right) == term_of({{"q", 1}, {"p", 1}}));
    // p^{rl} = p
    CHECK(adjoint(term_of({{"p", 1}}), AdjointDirection::Left) == term_of({{"p", 0}}));
    CHECK(adjoint(Term{}, AdjointDirection::Left) == Term{});
    (void)poset;
}

TEST_CASE("adjoint involution and anti-homomorphism") {
    std::mt19937 rng(7);
    const std::vector<std::string> bases = {"p", "q"};
    auto random_term = [&](std::size_t len) {
        Term t;
        for (std::size_t k = 0; k < len; ++k)
            t.factors.push_back(
                SimpleType{bases[rng() % bases.size()], static_cast<int>(rng() % 7) - 3});
        return t;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const Term t = random_term(rng() % 6);
        CHECK(adjoint(adjoint(t, AdjointDirection::Left), AdjointDirection::Right) == t);
        CHECK(adjoint(adjoint(t, AdjointDirection::Right), AdjointDirection::Left) == t);
        const Term s = random_term(rng() % 6);
        for (auto dir : {AdjointDirection::Left, AdjointDirection::Right})
            CHECK(adjoint(concat(s, t), dir) == concat(adjoint(t, dir), adjoint(s, dir)));
    }
}

TEST_CASE("poset closure, reflexivity, and errors") {
    const TypePoset poset = diamond_poset();
    CHECK(leq_basic("a", "a", poset));
    CHECK(leq_basic("a", "d", poset));  // transitive
    CHECK_FALSE(leq_basic("d", "a", poset));
    CHECK_FALSE(leq_basic("b", "c", poset));
    CHECK_THROWS_WITH_AS(leq_basic("nope", "a", poset),
                         "undeclared basic type 'nope'", Error);
    CHECK_THROWS_AS(TypePoset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
    CHECK_THROWS_AS(TypePoset({"a", "a"}, {}), Error);
    CHECK_THROWS_AS(TypePoset({"Bad"}, {}), Error);
}

TEST_CASE("leq_simple flips the order once per adjoint iteration") {
    const TypePoset poset = tiny_poset();
    CHECK(leq_simple({"p", 0}, {"q", 0}, poset));
    CHECK_FALSE(leq_simple({"q", 0}, {"p", 0}, poset));
    // q^l <= p^l and q^r <= p^r
    CHECK(leq_simple({"q", -1}, {"p", -1}, poset));
    CHECK(leq_simple({"q", 1}, {"p", 1}, poset));
    // p^{ll} <= q^{ll}: double reversal restores the direction
    CHECK(leq_simple({"p", -2}, {"q", -2}, poset));
    CHECK(leq_simple({"p", 2}, {"q", 2}, poset));
    CHECK_FALSE(leq_simple({"p", 0}, {"p", 1}, poset));
}

TEST_CASE("contractible parity rule") {
    const TypePoset poset = tiny_poset();
    CHECK(contractible({"p", 0}, {"p", 1}, poset));
    CHECK(contractible({"p", -1}, {"p", 0}, poset));
    CHECK(contractible({"p", -2}, {"p", -1}, poset));
    CHECK(contractible({"p", 1}, {"p", 2}, poset));
    // adjoint orders must step up by exactly one, left to right
    CHECK_FALSE(contractible({"p", -1}, {"p", -2}, poset));
    CHECK_FALSE(contractible({"p", 0}, {"p", 0}, poset));
    CHECK_FALSE(contractible({"p", 1}, {"p", 0}, poset));
    // order steps inside a contraction: p <= q
    CHECK(contractible({"p", 0}, {"q", 1}, poset));
    CHECK(contractible({"q", -1}, {"p", 0}, poset));
    CHECK_FALSE(contractible({"q", 0}, {"p", 1}, poset));
    CHECK(contractible({"q", 1}, {"p", 2}, poset));  // odd z(u): order reversed
}

TEST_CASE("contractible agrees with the axiom-chain oracle on a 4-element poset") {
    const TypePoset poset = diamond_poset();
    for (const std::string& bu : poset.names())
        for (const std::string& bv : poset.names())
            for (int zu = -3; zu <= 3; ++zu)
                for (int zv = -3; zv <= 3; ++zv) {
                    const SimpleType u{bu, zu}, v{bv, zv};
                    const bool rule = contractible(u, v, poset);
                    const bool proof = axiom_chain_proves(u, v, poset, 4);
                    CAPTURE(to_string(u));
                    CAPTURE(to_string(v));
                    CHECK(rule == proof);
                }
}

TEST_CASE("term rendering") {
    CHECK(to_string(Term{}) == "1");
    CHECK(to_string(term_of({{"pi3", 1}, {"s1", 0}, {"j", -1}})) == "pi3^r s1 j^l");
    CHECK(to_string(SimpleType{"o", -2}) == "o^ll");
}

TEST_CASE("concatenation is associative with the empty term as unit") {
    const Term a = term_of({{"p", 0}});
    const Term b = term_of({{"q", -1}, {"p", 2}});
    const Term c = term_of({{"q", 1}});
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(concat(a, Term{}) == a);
    CHECK(concat(Term{}, a) == a);
}
