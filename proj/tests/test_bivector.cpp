#include <doctest.h>

#include "goldman/bivector.hpp"
#include "goldman/data_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

using namespace goldman;

namespace {
Poly P(const std::string& s) { return parsePoly(s); }
TraceVar V(const std::string& s) { return parseTraceVar(s); }
}  // namespace

TEST_CASE("permutation parsing and action") {
    Perm id = parseCycles("()", 4);
    CHECK(id == Perm::identity(4));
    Perm p34 = parseCycles("(34)", 4);
    CHECK(applyPerm(p34, V("t[1,3]")) == V("t[1,4]"));
    CHECK(applyPerm(id, P("t[1]*t[2,3] - 2")) == P("t[1]*t[2,3] - 2"));
    Perm c = parseCycles("(1234)", 4);
    CHECK(c(1) == 2);
    CHECK(c(4) == 1);
    CHECK(parseCycles("(13)(24)", 4) == c.after(c));
    CHECK(parseCycles("(1 2 3 4)", 5).cycles() == "(1 2 3 4)");
    CHECK(c.inverse() == parseCycles("(1432)", 4));
    // Ring homomorphism and cycle-order consistency.
    Poly q = P("t[1,2]*t[1,4] + 2*t[2,4] - t[1]*t[1,2,4] - t[2]*t[4]");
    CHECK(applyPerm(c, q * q) == applyPerm(c, q) * applyPerm(c, q));
    Poly r = q;
    for (int i = 0; i < 4; ++i) r = applyPerm(c, r);
    CHECK(r == q);
}

TEST_CASE("relabel instance from the type-b table") {
    // sigma = (1234) sends the {t123,t24} coefficient to the {t234,t13} one.
    Poly a12324 = P("-t[3]*t[1,4] + t[1]*t[3,4] + t[2,3]*t[1,2,4] - t[1,2]*t[2,3,4]");
    Poly expect = P("-t[4]*t[1,2] + t[2]*t[1,4] + t[3,4]*t[1,2,3] - t[2,3]*t[1,3,4]");
    CHECK(applyPerm(parseCycles("(1234)", 4), a12324) == expect);
    FatGraph fat = standardModel(5, 0);
    TraceReducer red(4);
    CHECK(bracket(fat, parseWord("c2 c3 c4", fat.names), parseWord("c1 c3", fat.names), red) ==
          expect);
}

TEST_CASE("small surface bi-vectors") {
    Bivector s30 = computeBivector(standardModel(3, 0));
    CHECK(s30.coordinates.size() == 3);
    CHECK(s30.entries.empty());
    CHECK(casimirs(s30).size() == 3);

    Bivector s20 = computeBivector(standardModel(2, 0));
    CHECK(s20.coordinates.size() == 1);
    CHECK(s20.entries.empty());

    CHECK_THROWS(computeBivector(standardModel(6, 0)));
}

TEST_CASE("five holed sphere bi-vector structure") {
    Bivector bv = computeBivector(standardModel(5, 0), 2);
    CHECK(bv.coordinates.size() == 14);
    CHECK(bv.entries.size() == 31);
    auto cas = casimirs(bv);
    REQUIRE(cas.size() == 4);
    for (int i = 1; i <= 4; ++i) CHECK(std::count(cas.begin(), cas.end(), TraceVar::single(i)));
    // Orientation: flipping a pair negates.
    CHECK(bv.entry(V("t[2,4]"), V("t[1,3]")) == -bv.entry(V("t[1,3]"), V("t[2,4]")));
    // Parallel and serial computation agree.
    CHECK(computeBivector(standardModel(5, 0), 1) == bv);
}

TEST_CASE("symmetric form expansion") {
    auto terms = loadSymmetricForm(dataDir() + "/golden/sigma_5_0_bivector_form.json");
    REQUIRE(terms.size() == 7);
    Bivector exp = expandSymmetricForm(terms, 5, 0);
    // Leading slot carries the base coefficient verbatim.
    CHECK(exp.entry(V("t[1,3]"), V("t[2,4]")) ==
          P("t[3]*t[4]*t[1,2] - 2*t[3,4]*t[1,2] - t[2]*t[3]*t[1,4] - t[1]*t[4]*t[2,3] "
            "+ 2*t[1,4]*t[2,3] + t[1]*t[2]*t[3,4]"));
    // The sigma1 orbit fills exactly the 12 nonzero type-(a) pairs beyond it.
    int typeA = 0;
    for (const auto& [key, p] : exp.entries)
        if (key.first.size() == 2 && key.second.size() == 2) ++typeA;
    CHECK(typeA == 13);
    CHECK(exp.entry(V("t[1,2]"), V("t[3,4]")).isZero());
    CHECK(exp.entry(V("t[1,4]"), V("t[2,3]")).isZero());
    CHECK(exp.entries.size() == 31);

    // Conflicting writes to one slot are rejected.
    std::vector<SymmetricFormTerm> clash;
    clash.push_back({P("t[1]"), V("t[1,2]"), V("t[1,4]"), nullptr});
    clash.push_back({P("t[2]"), V("t[1,4]"), V("t[1,2]"), nullptr});
    CHECK_THROWS(expandSymmetricForm(clash, 5, 0));
}

TEST_CASE("sigma1 orbit covers the nonzero type-a pairs") {
    // The twelve permutations send the seed slot to twelve distinct pairs,
    // exactly the nonzero off-diagonal type-(a) entries of the bi-vector.
    Bivector bv = computeBivector(standardModel(5, 0), 2);
    std::set<std::pair<TraceVar, TraceVar>> orbit;
    for (const Perm& s : sigma1().perms) {
        TraceVar u = applyPerm(s, V("t[1,2]"));
        TraceVar v = applyPerm(s, V("t[1,4]"));
        orbit.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    }
    CHECK(orbit.size() == 12);
    std::set<std::pair<TraceVar, TraceVar>> nonzeroA;
    for (const auto& [key, p] : bv.entries)
        if (key.first.size() == 2 && key.second.size() == 2) nonzeroA.insert(key);
    CHECK(orbit.count({V("t[1,3]"), V("t[2,4]")}) == 0);
    nonzeroA.erase({V("t[1,3]"), V("t[2,4]")});
    CHECK(orbit == nonzeroA);
}

TEST_CASE("bi-derivation bracket") {
    Bivector bv = computeBivector(standardModel(5, 0), 2);
    Poly f = Poly::var(V("t[1,3]"));
    Poly g = Poly::var(V("t[2,4]"));
    CHECK(poissonBracketPoly(f, g, bv) == bv.entry(V("t[1,3]"), V("t[2,4]")));
    CHECK(poissonBracketPoly(g, f, bv) == -bv.entry(V("t[1,3]"), V("t[2,4]")));
    // Leibniz rule.
    Poly h = Poly::var(V("t[1,2]"));
    CHECK(poissonBracketPoly(f * g, h, bv) ==
          f * poissonBracketPoly(g, h, bv) + poissonBracketPoly(f, h, bv) * g);
}

TEST_CASE("bi-vector json round trip") {
    Bivector bv = computeBivector(standardModel(5, 0), 2);
    Bivector back = bivectorFromJson(bivectorToJson(bv));
    CHECK(back == bv);
}

TEST_CASE("malformed diagram records name the figure") {
    FatGraph fat = standardModel(5, 0);
    const std::string tmp = "/tmp/goldman_bad_diagram.json";
    {
        std::ofstream out(tmp);
        out << "{\"figure\":\"9999\",\"lhs\":\"c1 c2\",\"rhs\":\"c3 c4\","
               "\"points\":[{\"sign\":3,\"word\":\"c1\"}]}";
    }
    try {
        loadDiagram(tmp, fat.names);
        CHECK(false);
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("9999") != std::string::npos);
    }
}

TEST_CASE("latex emission") {
    CHECK(parsePoly("1/2*t[1,2]^2 - 2*t[3]").latex() ==
          "\\frac{1}{2} t_{\\{1,2\\}}^{2} - 2 t_{\\{3\\}}");
    CHECK(Poly().latex() == "0");
}

TEST_CASE("diagram loading") {
    FatGraph fat = standardModel(5, 0);
    auto all = loadDiagramDir(dataDir() + "/diagrams/sigma_5_0", fat.names);
    CHECK(all.size() == 37);
    int withPoints = 0;
    for (const auto& d : all) withPoints += d.points.empty() ? 0 : 1;
    CHECK(withPoints == 23);
    auto fig = loadDiagram(dataDir() + "/diagrams/sigma_5_0/1324.json", fat.names);
    CHECK(fig.figure == "1324");
    REQUIRE(fig.points.size() == 4);
    CHECK(fig.points[0].sign == 1);
    CHECK(fig.points[0].resolved == parseWord("c1 c3 c2 c4", fat.names));
}
