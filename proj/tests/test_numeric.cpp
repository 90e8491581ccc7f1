#include <doctest.h>

#include "goldman/numeric.hpp"

#include <cmath>

using namespace goldman;

namespace {
const GenNames kNames = GenNames::rankDefault(4);
Word W(const std::string& s) { return parseWord(s, kNames); }
}  // namespace

TEST_CASE("sampling is deterministic and unimodular") {
    Representation a = sampleRepresentation(4, 42);
    Representation b = sampleRepresentation(4, 42);
    for (int i = 0; i < 4; ++i) {
        CHECK(a.matrices[i].a == b.matrices[i].a);
        CHECK(a.matrices[i].d == b.matrices[i].d);
        CHECK(std::abs(a.matrices[i].det() - Complex(1.0)) < 1e-12);
        CHECK(std::abs(a.matrices[i].a) >= 0.1);
    }
    Representation c = sampleRepresentation(4, 43);
    CHECK(a.matrices[0].a != c.matrices[0].a);
}

TEST_CASE("word evaluation") {
    Representation r = sampleRepresentation(3, 7);
    CHECK(std::abs(evalWord(r, Word()).trace() - Complex(2.0)) < 1e-12);
    Word w = W("c1 c2 c3^-1");
    Mat2 prod = evalWord(r, w.concat(w.inverted()));
    CHECK(std::abs(prod.trace() - Complex(2.0)) < 1e-11);
    CHECK(std::abs(prod.b) < 1e-11);
    // Homomorphism property.
    Word u = W("c1 c2"), v = W("c3 c1^-1");
    Mat2 lhs = evalWord(r, u.concat(v));
    Mat2 rhs = evalWord(r, u) * evalWord(r, v);
    CHECK(std::abs(lhs.a - rhs.a) < 1e-11);
    CHECK(std::abs(lhs.trace() - rhs.trace()) < 1e-11);
}

TEST_CASE("coordinate values") {
    Representation id;
    id.matrices.assign(4, Mat2::identity());
    auto vals = coordinateValues(id, 4);
    CHECK(vals.size() == 14);
    for (const auto& [v, x] : vals) CHECK(std::abs(x - Complex(2.0)) < 1e-12);

    Representation r = sampleRepresentation(1, 5);
    auto v1 = coordinateValues(r, 1);
    CHECK(std::abs(v1.at(TraceVar::single(1)) - r.matrices[0].trace()) < 1e-12);

    Representation r4 = sampleRepresentation(4, 11);
    auto v4 = coordinateValues(r4, 4);
    CHECK(std::abs(v4.at(TraceVar::pair(1, 3)) -
                   (r4.matrices[0] * r4.matrices[2]).trace()) < 1e-11);
    CHECK(std::abs(v4.at(TraceVar::triple(2, 3, 4)) -
                   (r4.matrices[1] * r4.matrices[2] * r4.matrices[3]).trace()) < 1e-11);

    Representation bad;
    bad.matrices.assign(1, Mat2{2.0, 0.0, 0.0, 2.0});
    CHECK_THROWS(coordinateValues(bad, 1));
}

TEST_CASE("trace is conjugation invariant numerically") {
    Representation r = sampleRepresentation(4, 13);
    Word w = W("c1 c3 c2 c4");
    for (const char* us : {"c1", "c2 c3", "c4 c1^-1 c2"}) {
        Word u = W(us);
        const Complex a = evalWord(r, w).trace();
        const Complex b = evalWord(r, u.concat(w).concat(u.inverted())).trace();
        CHECK(std::abs(a - b) < 1e-10 * std::max(1.0, std::abs(a)));
    }
}
