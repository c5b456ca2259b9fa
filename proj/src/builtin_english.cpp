#include "pregroup/grammar.hpp"

namespace pregroup {

// Kept byte-identical with data/english_fragment.grammar; a test enforces it.
const std::string& builtin_english_text() {
    static const std::string text = R"(# English fragment: types, orders, targets, and lexicon.
# ASCII names: pi = subject, o = object, s = statement, q = question,
# nbar/abar/qbar = the barred noun-phrase/adjectival/wh-question types,
# pi1..pi6 = person subscripts, s1/s2 and q1/q2 = present/past.

basic pi
basic pi1
basic pi2
basic pi3
basic pi4
basic pi5
basic pi6
basic o
basic s
basic s1
basic s2
basic q
basic q1
basic q2
basic qbar
basic n
basic n0
basic n1
basic n2
basic nbar
basic nbar1
basic nbar2
basic a
basic abar
basic i
basic j

# subscripted types under their main type
order pi1 <= pi
order pi2 <= pi
order pi3 <= pi
order pi4 <= pi
order pi5 <= pi
order pi6 <= pi
order s1 <= s
order s2 <= s
order q1 <= q
order q2 <= q

# nouns and noun phrases
order n <= pi
order n <= o
order nbar <= pi
order nbar <= o

# infinitives
order i <= j

# questions
order q <= qbar

# extensions required by the example sentences
order n <= pi3
order nbar1 <= nbar
order nbar2 <= nbar
order nbar1 <= pi3
order nbar2 <= pi6
order n0 <= nbar
order n2 <= nbar
order n2 <= n    # corrected: plural heads of relative clauses ("men who ...")
order a <= abar  # corrected: bare predicative adjective as adjectival phrase

target declarative : s1 s2 s
target question : q1 q2 q qbar
target noun_phrase : nbar

word she : pi3
word sleeps : pi3^r s1
word may : pi3^r s1 j^l | q1 i^l pi^l | q1 j^l pi^l | pi6^r s1 j^l
word sleep : i
word sees : pi3^r s1 o^l
word see : i o^l
word him : o
word tomorrow : i^r i
word in : i^r i o^l
word the : nbar1 n1^l
word university : n1
word mary : n
word john : n
word some : nbar2 n2^l
word people : n2
word eat : i o^l
word pork : n0
word are : pi6^r s1 abar^l
word vegetarian : a
word tall : n1 n1^l
word old : n1 n1^l
word woman : n1
word man : n1
word men : n2
word ate : pi3^r s2 o^l  # corrected from obar^l, which has no ordering with o
word vegetables : n2 | n1
word and : n1^r o n0^l | (pi3^r s2)^r (pi3^r s2) (pi3^r s2)^l
word rice : n0
word slept : pi3^r s2
word snored : pi3^r s2
word saw : pi3^r s2 o^l
word who : qbar s1^l pi3 | qbar s2^l pi3 | n^r nbar s^l pi3  # corrected: relative entry reconstructed
word whom : qbar o^ll q^l | n^r nbar n^ll s^l
word when : qbar i^l i^ll q^l
word where : qbar i^l i^ll q^l
word what : qbar o^ll q^l
word did : q1 j^l pi^l | q2 j^l pi^l  # corrected: past-tense variant added
)";
    return text;
}

}  // namespace pregroup
