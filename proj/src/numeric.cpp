#include "goldman/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace goldman {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

double CounterRng::nextUnit() {
    std::uint64_t key = splitmix64(seed_ ^ 0x8f3a91c2d4e5f607ULL);
    key = splitmix64(key ^ (stream_ * 0xd1342543de82ef95ULL));
    key = splitmix64(key ^ (counter_++ * 0xaf251af3b0f025b5ULL));
    const double u = static_cast<double>(key >> 11) * 0x1.0p-53;  // [0,1)
    return 2.0 * u - 1.0;
}

Representation sampleRepresentation(int rank, std::uint64_t seed, std::uint64_t stream) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    Representation rep;
    rep.matrices.reserve(rank);
    for (int g = 0; g < rank; ++g) {
        CounterRng rng(seed, stream * 1024 + static_cast<std::uint64_t>(g));
        Mat2 m;
        for (;;) {
            m.a = Complex(rng.nextUnit(), rng.nextUnit());
            if (std::abs(m.a) >= 0.1) break;
        }
        m.b = Complex(rng.nextUnit(), rng.nextUnit());
        m.c = Complex(rng.nextUnit(), rng.nextUnit());
        m.d = (Complex(1.0) + m.b * m.c) / m.a;
        rep.matrices.push_back(m);
    }
    return rep;
}

Mat2 evalWord(const Representation& rep, const Word& w) {
    Mat2 out = Mat2::identity();
    for (const Letter& l : w.letters()) {
        if (l.gen < 1 || l.gen > rep.rank())
            throw std::invalid_argument("word uses generator outside the representation");
        const Mat2& m = rep.matrices[l.gen - 1];
        out = out * (l.exp > 0 ? m : m.inverseSL());
    }
    return out;
}

std::map<TraceVar, Complex> coordinateValues(const Representation& rep, int rank) {
    if (rank < 1 || rank > rep.rank())
        throw std::invalid_argument("rank out of range for representation");
    for (const Mat2& m : rep.matrices)
        if (std::abs(m.det() - Complex(1.0)) > 1e-9)
            throw std::invalid_argument("representation matrix is not unimodular");
    std::map<TraceVar, Complex> vals;
    for (const TraceVar& v : canonicalVariables(rank)) {
        Letters ls;
        for (int i : v.indices()) ls.emplace_back(i, +1);
        vals[v] = evalWord(rep, Word::fromLetters(std::move(ls))).trace();
    }
    return vals;
}

std::map<TraceVar, Complex> coordinateValues(const Representation& rep) {
    return coordinateValues(rep, rep.rank());
}

}  // namespace goldman
