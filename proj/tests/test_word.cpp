#include <doctest.h>

#include "goldman/word.hpp"

using namespace goldman;

namespace {
const GenNames kNames = GenNames::rankDefault(4);
Word W(const std::string& s) { return parseWord(s, kNames); }
}  // namespace

TEST_CASE("free reduction") {
    CHECK(W("c1 c1^-1").empty());
    CHECK(W("c1 c2 c2^-1 c3") == W("c1 c3"));
    CHECK(W("c1 c2") == W("c1 c2"));
    // Idempotent and length-nonincreasing on nested cancellations.
    CHECK(W("c1 c2 c3 c3^-1 c2^-1 c1^-1").empty());
    Word w = W("c2 c1 c1^-1 c2 c3");
    CHECK(w.size() == 3);
    CHECK(freeReduce(w.letters()) == w);
}

TEST_CASE("invert and rotate") {
    CHECK(W("c1 c2").inverted() == W("c2^-1 c1^-1"));
    CHECK(W("c1 c2 c3").rotated(1) == W("c2 c3 c1"));
    CHECK(W("c1 c2 c3").rotated(0) == W("c1 c2 c3"));
    Word w = W("c1 c2 c3^-1 c2");
    CHECK(w.inverted().inverted() == w);
    CHECK_THROWS(W("c1 c2 c1^-1").rotated(1));
}

TEST_CASE("cyclic reduction") {
    auto r = cyclicReduce(W("c1 c2 c1^-1"));
    CHECK(r.core == CyclicWord(W("c2")));
    CHECK(r.conjugator == W("c1"));

    auto r2 = cyclicReduce(W("c1 c2"));
    CHECK(r2.core == CyclicWord(W("c1 c2")));
    CHECK(r2.conjugator.empty());

    auto r3 = cyclicReduce(W("c2^-1 c1 c2 c3 c2"));
    CHECK(r3.core == CyclicWord(W("c1 c2 c3")));
    CHECK(r3.conjugator == W("c2^-1"));

    // Round trip: conjugator . core . conjugator^-1 reduces back to the word.
    for (const char* s : {"c1 c2 c1^-1", "c2^-1 c1 c2 c3 c2", "c1 c2 c3", "c1 c1 c2 c1^-1"}) {
        Word w = W(s);
        auto rr = cyclicReduce(w);
        Word back = rr.conjugator.concat(rr.core.rep()).concat(rr.conjugator.inverted());
        CHECK(CyclicWord(back) == rr.core);
        CHECK(back == w);
    }
}

TEST_CASE("cyclic word equality is rotation invariant") {
    Word w = W("c1 c2 c3 c2");
    CyclicWord c(w);
    for (int k = 0; k < 4; ++k) CHECK(CyclicWord(w.rotated(k)) == c);
    CHECK(CyclicWord(W("c1 c2")) != CyclicWord(W("c2 c3")));
}

TEST_CASE("word parsing and formatting") {
    CHECK(formatWord(W("c1 c2^-1"), kNames) == "c1 c2^-1");
    CHECK(formatWord(Word(), kNames) == "1");
    CHECK(W("c1^2") == W("c1 c1"));
    CHECK(W("c1^-2") == W("c1^-1 c1^-1"));
    CHECK_THROWS(parseWord("x9", kNames));
    GenNames genus = GenNames::surface(2, 1);
    CHECK(genus.names == std::vector<std::string>{"a1", "b1", "c1"});
    CHECK(parseWord("a1 b1 c1", genus).size() == 3);
}
