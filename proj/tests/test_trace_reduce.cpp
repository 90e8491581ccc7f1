#include <doctest.h>

#include "goldman/trace_reduce.hpp"

#include <cmath>

using namespace goldman;

namespace {
const GenNames kNames = GenNames::rankDefault(4);
Word W(const std::string& s) { return parseWord(s, kNames); }
Poly P(const std::string& s) { return parsePoly(s); }
}  // namespace

TEST_CASE("base cases") {
    TraceReducer red(4);
    CHECK(red.reduce(Word()) == Poly(2));
    CHECK(red.reduce(W("c2 c1")) == P("t[1,2]"));
    CHECK(red.reduce(W("c1^-1")) == P("t[1]"));
    CHECK(red.reduce(W("c1 c2^-1")) == P("t[1]*t[2] - t[1,2]"));
    CHECK(red.reduce(W("c1 c1")) == P("t[1]^2 - 2"));
    CHECK_THROWS(TraceReducer(5));
    CHECK_THROWS(red.reduce(parseWord("c5", GenNames::rankDefault(5))));
}

TEST_CASE("triple sorting identity") {
    TraceReducer red(4);
    CHECK(red.reduce(W("c1 c3 c2")) ==
          P("t[1]*t[2,3] + t[2]*t[1,3] + t[3]*t[1,2] - t[1]*t[2]*t[3] - t[1,2,3]"));
    // Verified against the matrix oracle as well.
    auto rep = red.oracle(W("c1 c3 c2"), 100, 7);
    CHECK(rep.pass);
}

TEST_CASE("length-4 words pass the oracle") {
    TraceReducer red(4);
    for (const char* s : {"c1 c2 c3 c4", "c1 c2 c4 c3", "c1 c3 c2 c4", "c1 c3 c4 c2",
                          "c1 c4 c2 c3", "c1 c4 c3 c2"}) {
        auto rep = red.oracle(W(s), 60, 11);
        INFO(s, " residual ", rep.maxResidual);
        CHECK(rep.pass);
    }
}

TEST_CASE("rotation, inversion and conjugation invariance") {
    TraceReducer red(4);
    Word w = W("c1 c3 c2 c4 c2^-1");
    Poly p = red.reduce(w);
    for (std::size_t k = 0; k < w.size(); ++k) CHECK(red.reduce(w.rotated(k)) == p);
    CHECK(red.reduce(w.inverted()) == p);
    for (const char* us : {"c1", "c2 c4", "c3^-1 c1 c2"}) {
        Word u = W(us);
        CHECK(red.reduce(u.concat(w).concat(u.inverted())) == p);
    }
}

TEST_CASE("random words against the matrix oracle") {
    TraceReducer red(4);
    CounterRng rng(99, 0);
    auto randomWord = [&](int len) {
        Letters ls;
        for (int i = 0; i < len; ++i) {
            int gen = 1 + static_cast<int>((rng.nextUnit() + 1.0) * 2.0);
            gen = std::min(gen, 4);
            int exp = rng.nextUnit() > 0 ? 1 : -1;
            ls.emplace_back(gen, exp);
        }
        return Word::fromLetters(std::move(ls));
    };
    for (int t = 0; t < 60; ++t) {
        Word w = randomWord(2 + t % 9);
        auto rep = red.oracle(w, 20, 1000 + t);
        INFO("word ", formatWord(w, kNames), " residual ", rep.maxResidual);
        CHECK(rep.pass);
    }
}

TEST_CASE("memoization shares classes") {
    TraceReducer red(4);
    red.reduce(W("c1 c2 c3 c4"));
    const std::size_t before = red.memoSize();
    red.reduce(W("c2 c3 c4 c1"));            // rotation
    red.reduce(W("c4^-1 c3^-1 c2^-1 c1^-1"));  // inverse
    CHECK(red.memoSize() == before);
}

TEST_CASE("coordinate values match reduced traces") {
    TraceReducer red(4);
    Representation r = sampleRepresentation(4, 21);
    auto vals = coordinateValues(r, 4);
    for (const char* s : {"c1 c2", "c1 c2 c3", "c2 c4"}) {
        Word w = W(s);
        const Complex truth = evalWord(r, w).trace();
        CHECK(std::abs(red.reduce(w).eval(vals) - truth) < 1e-9 * std::max(1.0, std::abs(truth)));
    }
}
