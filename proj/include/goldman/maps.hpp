#pragma once

#include "goldman/bivector.hpp"
#include "goldman/poly.hpp"
#include "goldman/surface.hpp"
#include "goldman/trace_reduce.hpp"
#include "goldman/word.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace goldman {

/// Free-group homomorphism with a declared orientation behaviour of the
/// underlying surface map (declared by the caller, not inferred).
struct FreeHom {
    int sourceRank = 0;
    int targetRank = 0;
    std::vector<Word> images;  // images[i-1] = image of generator i
    bool orientationPreserving = true;

    Word apply(const Word& w) const;
    FreeHom composedWith(const FreeHom& inner) const;  // this ∘ inner
};

/// Induced map on coordinate rings: t[I] -> tr(image of the coordinate word),
/// extended as a ring homomorphism into target coordinates.
Poly pullback(const FreeHom& h, const Poly& p, TraceReducer& targetReducer);

/// Images of every source coordinate under the pullback.
std::map<TraceVar, Poly> pullbackImages(const FreeHom& h, TraceReducer& targetReducer);

struct PoissonCheckReport {
    bool pass = false;
    double worstResidual = 0.0;
    std::string worstPair;
    int trials = 0;
    int expectedSign = +1;
};

/// Numeric verification that the pullback is (anti-)Poisson: compares
/// pullback({f,g}_source) against sign * {pullback f, pullback g}_target at
/// random on-variety points of the target. Tolerance 1e-8 relative with a
/// 1e-6 magnitude floor.
PoissonCheckReport poissonCheck(const FreeHom& h, const FatGraph& source, const FatGraph& target,
                                int trials, std::uint64_t seed, int threads = 1);

}  // namespace goldman
