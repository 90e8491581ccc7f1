#include "goldman/intersect.hpp"

#include <stdexcept>

namespace goldman {

namespace {

// Infinite periodic ray leaving a vertex passage of a cyclic word: forward
// rays read w[k], w[k+1], ...; backward rays read the inverses of the letters
// behind the passage.
struct Ray {
    const Letters* w;
    int start;
    bool fwd;

    Letter at(int i) const {
        const int n = static_cast<int>(w->size());
        if (fwd) return (*w)[(start + i) % n];
        const int p = ((start - 1 - i) % n + n) % n;
        return (*w)[p].inverse();
    }
};

// Cyclic-orientation oracle on the circle of half ends. All comparisons reduce
// to triples of pairwise-distinct positions at one vertex of the universal
// cover; every vertex carries the same chart.
class RayOrder {
public:
    explicit RayOrder(const FatGraph& fat, int budget) : fat_(fat), budget_(budget) {}

    bool degenerate() const { return degenerate_; }

    // Orientation of the cyclic triple (r1, r2, r3): +1 counterclockwise.
    int orient3(Ray r1, Ray r2, Ray r3) {
        const Letter a1 = r1.at(0), a2 = r2.at(0), a3 = r3.at(0);
        if (a1 == a2 && a2 == a3) {
            if (--budget_ < 0) {
                degenerate_ = true;
                return 0;
            }
            return orient3(advance(r1), advance(r2), advance(r3));
        }
        if (a1 == a2) return pairRef(advance(r1), advance(r2), fat_.arrival(a1));
        if (a2 == a3) return pairRef(advance(r2), advance(r3), fat_.arrival(a2));
        if (a1 == a3) return -pairRef(advance(r1), advance(r3), fat_.arrival(a1));
        return orientEnds(fat_.departure(a1), fat_.departure(a2), fat_.departure(a3));
    }

private:
    static Ray advance(Ray r) {
        if (r.fwd) {
            r.start = (r.start + 1) % static_cast<int>(r.w->size());
        } else {
            const int n = static_cast<int>(r.w->size());
            r.start = ((r.start - 1) % n + n) % n;
        }
        return r;
    }

    // Orientation of (u, v, X) where X is any ray through the reference end.
    int pairRef(Ray u, Ray v, int refEnd) {
        for (;;) {
            const Letter a = u.at(0), b = v.at(0);
            if (!(a == b)) return orientEnds(fat_.departure(a), fat_.departure(b), refEnd);
            if (--budget_ < 0) {
                degenerate_ = true;
                return 0;
            }
            refEnd = fat_.arrival(a);
            u = advance(u);
            v = advance(v);
        }
    }

    int orientEnds(int p1, int p2, int p3) const {
        const int m = fat_.circleSize();
        const int d2 = ((p2 - p1) % m + m) % m;
        const int d3 = ((p3 - p1) % m + m) % m;
        return d2 < d3 ? +1 : -1;
    }

    const FatGraph& fat_;
    int budget_;
    bool degenerate_ = false;
};

}  // namespace

std::vector<IntersectionDatum> intersections(const FatGraph& fat, const Word& alpha,
                                             const Word& beta) {
    if (!alpha.cyclicallyReduced() || !beta.cyclicallyReduced())
        throw std::invalid_argument("intersections requires cyclically reduced words");
    for (const Word* w : {&alpha, &beta})
        if (w->maxGenerator() > fat.rank)
            throw std::invalid_argument("word uses generators outside the surface");
    const CyclicWord ca(alpha), cb(beta);
    if (ca == cb || ca == cb.inverted())
        throw std::invalid_argument("equal or mutually inverse cyclic words");

    std::vector<IntersectionDatum> out;
    if (alpha.empty() || beta.empty()) return out;

    const Letters& A = alpha.letters();
    const Letters& B = beta.letters();
    const int la = static_cast<int>(A.size());
    const int lb = static_cast<int>(B.size());

    for (int i = 0; i < la; ++i) {
        for (int j = 0; j < lb; ++j) {
            // Anchor each crossing at the passage where the backward rays
            // split; a pair of strands sharing their incoming edge is counted
            // at the start of the shared corridor instead.
            const Letter backA = A[((i - 1) % la + la) % la];
            const Letter backB = B[((j - 1) % lb + lb) % lb];
            if (backA == backB) continue;

            Ray aF{&A, i, true}, aB{&A, i, false};
            Ray bF{&B, j, true}, bB{&B, j, false};

            RayOrder ord(fat, 4 * (la + lb) + 16);
            const int side1 = ord.orient3(aF, bF, aB);
            const int side2 = ord.orient3(aF, bB, aB);
            if (ord.degenerate()) continue;  // parallel strands never cross
            if (side1 == side2) continue;    // forward/backward ends unlinked

            IntersectionDatum p;
            p.sign = side1;
            p.resolved = alpha.rotated(i).concat(beta.rotated(j));
            out.push_back(std::move(p));
        }
    }
    return out;
}

Poly bracket(const FatGraph& fat, const Word& alpha, const Word& beta, TraceReducer& red) {
    if (!alpha.cyclicallyReduced() || !beta.cyclicallyReduced())
        throw std::invalid_argument("bracket requires cyclically reduced words");
    const CyclicWord ca(alpha), cb(beta);
    if (ca == cb || ca == cb.inverted()) return Poly();

    Poly ta = red.reduce(alpha);
    Poly tb = red.reduce(beta);
    Poly half = (ta * tb).scaled(Rational(1, 2));
    Poly out;
    for (const IntersectionDatum& p : intersections(fat, alpha, beta)) {
        Poly term = red.reduce(p.resolved) - half;
        out += (p.sign > 0) ? term : -term;
    }
    return out;
}

Poly bracketFromData(const DiagramData& data, TraceReducer& red) {
    for (const IntersectionDatum& p : data.points)
        if (p.sign != 1 && p.sign != -1)
            throw std::invalid_argument("diagram " + data.figure + ": bad sign");
    Poly half = (red.reduce(data.lhs) * red.reduce(data.rhs)).scaled(Rational(1, 2));
    Poly out;
    for (const IntersectionDatum& p : data.points) {
        Poly term = red.reduce(p.resolved) - half;
        out += (p.sign > 0) ? term : -term;
    }
    return out;
}

}  // namespace goldman
