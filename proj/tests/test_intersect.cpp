#include <doctest.h>

#include "goldman/intersect.hpp"

#include <algorithm>
#include <cmath>

using namespace goldman;

namespace {

const FatGraph kSigma50 = standardModel(5, 0);
Word W(const std::string& s) { return parseWord(s, kSigma50.names); }
Poly P(const std::string& s) { return parsePoly(s); }

bool samePoints(std::vector<IntersectionDatum> got,
                std::vector<std::pair<int, std::string>> want) {
    if (got.size() != want.size()) return false;
    std::vector<std::pair<int, CyclicWord>> a, b;
    for (const auto& p : got) a.emplace_back(p.sign, CyclicWord(p.resolved));
    for (const auto& [s, w] : want) b.emplace_back(s, CyclicWord(W(w)));
    auto lt = [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first < y.first : x.second < y.second;
    };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    return a == b;
}

}  // namespace

TEST_CASE("disjoint curves have no intersections") {
    CHECK(intersections(kSigma50, W("c1 c2"), W("c3 c4")).empty());
    CHECK(intersections(kSigma50, W("c1 c4"), W("c2 c3")).empty());
    CHECK(intersections(kSigma50, W("c1 c2 c3"), W("c1 c2")).empty());
    CHECK(intersections(kSigma50, W("c1"), W("c2 c4")).empty());
}

TEST_CASE("linked pair enumeration, exact points") {
    // Four alternating points of {c1c3, c2c4}.
    auto pts = intersections(kSigma50, W("c1 c3"), W("c2 c4"));
    CHECK(samePoints(pts, {{+1, "c1 c3 c2 c4"},
                           {-1, "c3 c1 c2 c4"},
                           {+1, "c3 c1 c4 c2"},
                           {-1, "c1 c3 c4 c2"}}));
    // The first listed point of the calibration figure is +1 on c1c3c2c4.
    bool found = false;
    for (const auto& p : pts)
        if (p.resolved == W("c1 c3 c2 c4")) {
            found = true;
            CHECK(p.sign == +1);
        }
    CHECK(found);

    CHECK(samePoints(intersections(kSigma50, W("c1 c2"), W("c1 c4")),
                     {{+1, "c1 c2 c1 c4"}, {-1, "c1 c2 c4 c1"}}));
    CHECK(samePoints(intersections(kSigma50, W("c1 c2 c3"), W("c1 c4")),
                     {{+1, "c1 c2 c3 c1 c4"}, {-1, "c1 c2 c3 c4 c1"}}));
}

TEST_CASE("input validation") {
    CHECK_THROWS(intersections(kSigma50, W("c2 c1 c2^-1"), W("c3")));  // not cyclically reduced
    CHECK_THROWS(intersections(kSigma50, W("c1 c2"), W("c2 c1")));     // equal classes
    CHECK_THROWS(intersections(kSigma50, W("c1 c2"), W("c2^-1 c1^-1")));  // inverse classes
}

TEST_CASE("bracket basics") {
    TraceReducer red(4);
    CHECK(bracket(kSigma50, W("c1 c2"), W("c3 c4"), red).isZero());
    CHECK(bracket(kSigma50, W("c1 c2"), W("c2 c1"), red).isZero());
    CHECK(bracket(kSigma50, W("c1 c2"), W("c1 c4"), red) ==
          P("t[1,2]*t[1,4] + 2*t[2,4] - t[1]*t[1,2,4] - t[2]*t[4]"));
    CHECK(bracket(kSigma50, W("c1 c3"), W("c2 c4"), red) ==
          P("t[3]*t[4]*t[1,2] - 2*t[3,4]*t[1,2] - t[2]*t[3]*t[1,4] - t[1]*t[4]*t[2,3] "
            "+ 2*t[1,4]*t[2,3] + t[1]*t[2]*t[3,4]"));
}

TEST_CASE("antisymmetry") {
    TraceReducer red(4);
    for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{
             {"c1 c3", "c2 c4"}, {"c1 c2", "c1 c4"}, {"c1 c2 c3", "c1 c4"},
             {"c1 c2 c3", "c1 c3 c4"}}) {
        Poly ab = bracket(kSigma50, W(a), W(b), red);
        Poly ba = bracket(kSigma50, W(b), W(a), red);
        CHECK(ab == -ba);
    }
}

TEST_CASE("boundary casimirs vanish structurally") {
    TraceReducer red(4);
    const Word boundary = W("c1 c2 c3 c4");
    for (const char* w : {"c1 c2", "c1 c3", "c2 c4", "c1 c2 c3", "c2 c3 c4", "c1 c3 c2"}) {
        for (const char* b : {"c1", "c2", "c3", "c4"})
            CHECK(bracket(kSigma50, W(b), W(w), red).isZero());
        CHECK(intersections(kSigma50, boundary, W(w)).empty());
    }
}

TEST_CASE("homotopy invariance of the bracket") {
    TraceReducer red(4);
    Poly base = bracket(kSigma50, W("c1 c3"), W("c2 c4"), red);
    // Conjugated, non-cyclically-reduced inputs reduce to the same classes.
    Word alpha = W("c2 c1 c3 c2^-1");
    auto core = cyclicReduce(alpha).core.rep();
    CHECK(bracket(kSigma50, core, W("c2 c4"), red) == base);
    Word beta = W("c4 c2");  // rotation
    CHECK(bracket(kSigma50, W("c1 c3"), beta, red) == base);
}

TEST_CASE("one holed torus bracket") {
    FatGraph t = standardModel(1, 1);
    TraceReducer red(2);
    Word a = parseWord("a1", t.names);
    Word b = parseWord("b1", t.names);
    auto pts = intersections(t, a, b);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].sign == +1);
    CHECK(CyclicWord(pts[0].resolved) == CyclicWord(parseWord("a1 b1", t.names)));
    CHECK(bracket(t, a, b, red) == P("t[1,2] - 1/2*t[1]*t[2]"));
}

TEST_CASE("bracket from diagram data") {
    TraceReducer red(4);
    DiagramData fig;
    fig.figure = "1324";
    fig.lhs = W("c1 c3");
    fig.rhs = W("c2 c4");
    fig.points = {{+1, W("c1 c3 c2 c4")},
                  {-1, W("c3 c1 c2 c4")},
                  {+1, W("c3 c1 c4 c2")},
                  {-1, W("c1 c3 c4 c2")}};
    CHECK(bracketFromData(fig, red) == bracket(kSigma50, fig.lhs, fig.rhs, red));

    DiagramData zero;
    zero.figure = "none";
    zero.lhs = W("c1 c2");
    zero.rhs = W("c3 c4");
    CHECK(bracketFromData(zero, red).isZero());

    DiagramData fig3;
    fig3.figure = "1214";
    fig3.lhs = W("c1 c2");
    fig3.rhs = W("c1 c4");
    fig3.points = {{+1, W("c1 c2 c1 c4")}, {-1, W("c1 c2 c4 c1")}};
    CHECK(bracketFromData(fig3, red) ==
          P("t[1,2]*t[1,4] + 2*t[2,4] - t[1]*t[1,2,4] - t[2]*t[4]"));

    DiagramData bad = fig3;
    bad.points[0].sign = 2;
    CHECK_THROWS(bracketFromData(bad, red));
}
