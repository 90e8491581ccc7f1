#pragma once

#include "goldman/poly.hpp"
#include "goldman/word.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace goldman {

/// 2x2 complex matrix, row major.
struct Mat2 {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static Mat2 identity() { return {}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    /// Inverse of a determinant-one matrix.
    Mat2 inverseSL() const { return {d, -b, -c, a}; }
    Complex trace() const { return a + d; }
    Complex det() const { return a * d - b * c; }
};

/// Deterministic splittable generator: every draw is a pure function of
/// (seed, stream, counter).
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    /// Uniform in [-1, 1].
    double nextUnit();

private:
    std::uint64_t seed_, stream_, counter_ = 0;
};

/// Tuple of determinant-one matrices, one per generator.
struct Representation {
    std::vector<Mat2> matrices;

    int rank() const { return static_cast<int>(matrices.size()); }
};

/// Deterministic random representation: entries a,b,c uniform in the complex
/// box [-1,1]^2, d solved from ad - bc = 1, resampling while |a| < 0.1.
Representation sampleRepresentation(int rank, std::uint64_t seed, std::uint64_t stream = 0);

/// Ordered matrix product; inverse letters use the closed-form SL(2) inverse.
Mat2 evalWord(const Representation& rep, const Word& w);

/// Values of every canonical coordinate t[I] of the given rank at rep.
/// Rejects non-unimodular matrices (|det - 1| > 1e-9).
std::map<TraceVar, Complex> coordinateValues(const Representation& rep, int rank);
std::map<TraceVar, Complex> coordinateValues(const Representation& rep);

}  // namespace goldman
