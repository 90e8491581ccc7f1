#include "goldman/verify.hpp"

#include "goldman/numeric.hpp"
#include "goldman/intersect.hpp"
#include "goldman/trace_reduce.hpp"

#include <cmath>

namespace goldman {

GoldenComparison compareGolden(const Bivector& bv, const std::vector<GoldenBracket>& golden) {
    GoldenComparison out;
    for (const GoldenBracket& g : golden) {
        ++out.total;
        if (g.poly.isZero()) ++out.zeros;
        Poly mine = bv.entry(g.u, g.v);
        if (mine == g.poly) {
            ++out.exact;
        } else {
            out.mismatches.push_back("{" + g.u.text() + "," + g.v.text() + "} (" + g.source +
                                     "): engine " + mine.text() + " vs golden " + g.poly.text());
        }
    }
    return out;
}

ExpansionComparison compareExpansion(const Bivector& computed, const Bivector& expanded,
                                     int samples, std::uint64_t seed) {
    ExpansionComparison out;
    std::vector<std::map<TraceVar, Complex>> points;
    for (int s = 0; s < samples; ++s)
        points.push_back(coordinateValues(sampleRepresentation(computed.rank, seed, s),
                                          computed.rank));
    const auto& coords = computed.coordinates;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        for (std::size_t j = i + 1; j < coords.size(); ++j) {
            ++out.total;
            Poly a = computed.entry(coords[i], coords[j]);
            Poly b = expanded.entry(coords[i], coords[j]);
            if (a == b) {
                ++out.exact;
                continue;
            }
            Poly diff = a - b;
            double worst = 0.0;
            for (const auto& vals : points)
                worst = std::max(worst, std::abs(diff.eval(vals)));
            const std::string slot = "{" + coords[i].text() + "," + coords[j].text() + "}";
            if (worst < 1e-9) {
                out.modularSlots.push_back(slot);
                out.worstModularResidual = std::max(out.worstModularResidual, worst);
            } else {
                out.failures.push_back(slot + " differs on the variety (residual " +
                                       std::to_string(worst) + ")");
            }
        }
    }
    return out;
}

CasimirCheck checkCasimirs(const Bivector& bv, const FatGraph& fat) {
    CasimirCheck out;
    auto cas = casimirs(bv);
    out.variablesPass = true;
    for (int i = 1; i <= bv.rank; ++i) {
        TraceVar v = TraceVar::single(i);
        bool found = false;
        for (const TraceVar& c : cas)
            if (c == v) found = true;
        if (!found) out.variablesPass = false;
    }
    // Dependent boundary: prod [a_i,b_i] prod c_j.
    TraceReducer red(bv.rank);
    Letters rel;
    for (int i = 1; i <= bv.g; ++i) {
        const int a = 2 * i - 1, b = 2 * i;
        rel.emplace_back(a, +1);
        rel.emplace_back(b, +1);
        rel.emplace_back(a, -1);
        rel.emplace_back(b, -1);
    }
    for (int j = 1; j <= bv.n - 1; ++j) rel.emplace_back(2 * bv.g + j, +1);
    Word relWord = Word::fromLetters(std::move(rel));
    Poly boundary = red.reduce(relWord);

    // The curve bracket {boundary word, coordinate word} is the zero
    // polynomial for every coordinate (no transverse intersections at all).
    out.boundaryPass = true;
    for (const TraceVar& v : bv.coordinates) {
        ++out.boundaryEntries;
        if (!bracket(fat, relWord, coordinateWord(v), red).isZero()) out.boundaryPass = false;
    }

    // The bi-derivation applied to the boundary-trace polynomial annihilates
    // it only up to the defining relations; record both facets.
    std::vector<std::map<TraceVar, Complex>> points;
    for (int s = 0; s < 60; ++s)
        points.push_back(coordinateValues(sampleRepresentation(bv.rank, 11111, s), bv.rank));
    out.derivationOnVarietyPass = true;
    for (const TraceVar& v : bv.coordinates) {
        Poly d = poissonBracketPoly(boundary, Poly::var(v), bv);
        if (d.isZero()) {
            ++out.derivationPolynomialZeros;
            continue;
        }
        for (const auto& vals : points) {
            const double r = std::abs(d.eval(vals));
            out.worstDerivationResidual = std::max(out.worstDerivationResidual, r);
            if (r > 1e-9) out.derivationOnVarietyPass = false;
        }
    }
    return out;
}

}  // namespace goldman
