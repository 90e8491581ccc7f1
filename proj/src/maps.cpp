#include "goldman/maps.hpp"

#include "goldman/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace goldman {

Word FreeHom::apply(const Word& w) const {
    Word out;
    for (const Letter& l : w.letters()) {
        if (l.gen < 1 || l.gen > sourceRank)
            throw std::invalid_argument("word outside the source free group");
        const Word& img = images[l.gen - 1];
        out = out.concat(l.exp > 0 ? img : img.inverted());
    }
    return out;
}

FreeHom FreeHom::composedWith(const FreeHom& inner) const {
    if (inner.targetRank != sourceRank)
        throw std::invalid_argument("composition rank mismatch");
    FreeHom out;
    out.sourceRank = inner.sourceRank;
    out.targetRank = targetRank;
    out.orientationPreserving = (orientationPreserving == inner.orientationPreserving);
    for (const Word& w : inner.images) out.images.push_back(apply(w));
    return out;
}

std::map<TraceVar, Poly> pullbackImages(const FreeHom& h, TraceReducer& targetReducer) {
    std::map<TraceVar, Poly> out;
    for (const TraceVar& v : canonicalVariables(h.sourceRank)) {
        Word w;
        for (int i : v.indices()) w = w.concat(h.images[i - 1]);
        for (const Letter& l : w.letters())
            if (l.gen > h.targetRank)
                throw std::invalid_argument("image word outside the target free group");
        out[v] = targetReducer.reduce(w);
    }
    return out;
}

Poly pullback(const FreeHom& h, const Poly& p, TraceReducer& targetReducer) {
    for (const TraceVar& v : p.variables())
        if (v.maxIndex() > h.sourceRank)
            throw std::invalid_argument("polynomial outside the source coordinates");
    std::map<TraceVar, Poly> images = pullbackImages(h, targetReducer);
    return p.substituted(images);
}

PoissonCheckReport poissonCheck(const FreeHom& h, const FatGraph& source, const FatGraph& target,
                                int trials, std::uint64_t seed, int threads) {
    if (h.sourceRank != source.rank || h.targetRank != target.rank)
        throw std::invalid_argument("homomorphism ranks do not match the surfaces");

    Bivector bsrc = computeBivector(source, threads);
    Bivector btgt = computeBivector(target, threads);
    TraceReducer red(target.rank);
    std::map<TraceVar, Poly> images = pullbackImages(h, red);

    PoissonCheckReport report;
    report.trials = trials;
    report.expectedSign = h.orientationPreserving ? +1 : -1;

    const auto& src = bsrc.coordinates;
    // Pullbacks of every source entry, and bi-derivation brackets of images.
    struct PairCheck {
        TraceVar f, g;
        Poly lhs;  // pullback of {f,g}_source
        Poly rhs;  // {pullback f, pullback g}_target
    };
    std::vector<PairCheck> checks;
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = i + 1; j < src.size(); ++j) {
            PairCheck c;
            c.f = src[i];
            c.g = src[j];
            c.lhs = bsrc.entry(src[i], src[j]).substituted(images);
            c.rhs = poissonBracketPoly(images.at(src[i]), images.at(src[j]), btgt);
            checks.push_back(std::move(c));
        }

    const double sign = report.expectedSign;
    for (int t = 0; t < trials; ++t) {
        const auto vals = coordinateValues(sampleRepresentation(target.rank, seed, t), target.rank);
        for (const PairCheck& c : checks) {
            const Complex a = c.lhs.eval(vals);
            const Complex b = c.rhs.eval(vals);
            const double denom = std::max(1e-6, std::max(std::abs(a), std::abs(b)));
            const double rel = std::abs(a - sign * b) / denom;
            if (rel > report.worstResidual) {
                report.worstResidual = rel;
                report.worstPair = "{" + c.f.text() + "," + c.g.text() + "}";
            }
        }
    }
    report.pass = report.worstResidual < 1e-8;
    return report;
}

}  // namespace goldman
