#pragma once

#include "goldman/word.hpp"

#include <string>
#include <vector>

namespace goldman {

/// One end of a petal at the single vertex: the departure end of the positive
/// letter (out) or of the inverse letter (in).
struct HalfEnd {
    int gen = 0;
    bool out = true;

    friend bool operator==(const HalfEnd&, const HalfEnd&) = default;
};

/// Rose-with-one-vertex model of a compact orientable surface with boundary.
/// The cyclic order of half-edge ends fixes the embedding (and thereby all
/// intersection signs downstream).
class FatGraph {
public:
    int n = 0;     // boundary components
    int g = 0;     // genus
    int rank = 0;  // 2g + n - 1 petals
    GenNames names;
    std::vector<HalfEnd> order;  // counterclockwise around the vertex

    /// Position of a half end in the cyclic order.
    int position(int gen, bool out) const;
    /// Departure end of a letter.
    int departure(const Letter& l) const { return position(l.gen, l.exp > 0); }
    /// Arrival end of a letter.
    int arrival(const Letter& l) const { return position(l.gen, l.exp < 0); }

    int circleSize() const { return static_cast<int>(order.size()); }

    /// Faces of the ribbon structure, each traced as a cyclic word; these are
    /// the boundary components (n of them).
    std::vector<CyclicWord> boundaryWords() const;

    int eulerCharacteristic() const { return 1 - rank; }
};

/// Standard model: genus-0 order (c1-out, c1-in, c2-out, c2-in, ...); for
/// g > 0 the handle interleavings and c-blocks are arranged so the traced
/// faces are exactly the presentation classes c_j and (prod [a_i,b_i] prod c_j).
/// Closed surfaces (n = 0) and the disk (n,g) = (1,0) are rejected.
FatGraph standardModel(int n, int g);

/// (dim G, rank of DG, dim of the maximal central torus); SL(2,C) is (3,1,0).
struct GroupParams {
    int dimG = 3;
    int r = 1;
    int s = 0;

    static GroupParams sl2() { return {3, 1, 0}; }
};

/// Complex dimension of the character variety of the (n,g) surface for a
/// non-abelian reductive G: -chi * dim G + zeta, with zeta by case.
int dimension(int n, int g, const GroupParams& params);

}  // namespace goldman
