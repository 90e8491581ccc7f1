#include "goldman/trace_reduce.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace goldman {

namespace {

std::string classKey(const Word& w) {
    // Least representative over all rotations of w and of w^-1; this bakes
    // rotation and inversion invariance of the trace into the memo key.
    CyclicWord a(w);
    CyclicWord b(w.inverted());
    const Word& best = (a < b ? a : b).rep();
    std::string key;
    key.reserve(best.size() * 2);
    for (const Letter& l : best.letters()) {
        key.push_back(static_cast<char>(l.gen));
        key.push_back(l.exp > 0 ? '+' : '-');
    }
    return key;
}

Letters slice(const Letters& u, std::size_t from, std::size_t to) {
    return Letters(u.begin() + from, u.begin() + to);
}

Letters invertLetters(const Letters& u) {
    Letters out;
    out.reserve(u.size());
    for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(it->inverse());
    return out;
}

Letters rotateLetters(const Letters& u, std::size_t k) {
    Letters out;
    out.reserve(u.size());
    out.insert(out.end(), u.begin() + k, u.end());
    out.insert(out.end(), u.begin(), u.begin() + k);
    return out;
}

}  // namespace

TraceReducer::TraceReducer(int rank) : rank_(rank) {
    if (rank < 1 || rank > 4)
        throw std::invalid_argument("trace reduction supports ranks 1..4");
}

void TraceReducer::countStep() {
    if (++steps_ > stepLimit_)
        throw std::runtime_error("trace reduction exceeded its step bound; rewriting diverged");
}

Poly TraceReducer::reduce(const Word& w) {
    for (const Letter& l : w.letters())
        if (l.gen > rank_)
            throw std::invalid_argument("word uses generator " + std::to_string(l.gen) +
                                        " beyond rank " + std::to_string(rank_));
    struct Guard {
        TraceReducer* r;
        ~Guard() {
            if (--r->active_ == 0) r->steps_ = 0;
        }
    };
    if (active_++ == 0) {
        const int len = static_cast<int>(w.size());
        long long limit = 1024;
        for (int i = 0; i < std::min(len, 24); ++i) limit *= 4;
        stepLimit_ = limit;
        steps_ = 0;
    }
    Guard g{this};
    return reduceLetters(w.letters(), 0);
}

Poly TraceReducer::reduceLetters(Letters raw, int depth) {
    if (depth > 256) throw std::runtime_error("trace reduction recursion too deep");
    Word w = Word::fromLetters(std::move(raw));
    const std::string key = classKey(w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Recover the canonical representative from the key.
    Letters u;
    for (std::size_t i = 0; i < key.size(); i += 2)
        u.emplace_back(static_cast<int>(key[i]), key[i + 1] == '+' ? +1 : -1);

    Poly result = reduceClass(u, depth);
    memo_.emplace(key, result);
    return result;
}

// tr(P y x Q) rewritten through the transposition identity; `pos` indexes y.
Poly TraceReducer::adjacentSwap(const Letters& u, int pos, int depth) {
    countStep();
    const Letter y = u[pos];
    const Letter x = u[pos + 1];
    Letters rest = slice(u, 0, pos);  // P
    Letters q = slice(u, pos + 2, u.size());
    Letters py = rest, px = rest, pq = rest, pxy = rest;
    py.push_back(y);
    px.push_back(x);
    pxy.push_back(x);
    pxy.push_back(y);
    py.insert(py.end(), q.begin(), q.end());
    px.insert(px.end(), q.begin(), q.end());
    pq.insert(pq.end(), q.begin(), q.end());
    pxy.insert(pxy.end(), q.begin(), q.end());

    Poly tx = reduceLetters({x}, depth + 1);
    Poly ty = reduceLetters({y}, depth + 1);
    Poly txy = reduceLetters({x, y}, depth + 1);

    Poly out = tx * reduceLetters(std::move(py), depth + 1);
    out += ty * reduceLetters(std::move(px), depth + 1);
    out += (txy - tx * ty) * reduceLetters(std::move(pq), depth + 1);
    out -= reduceLetters(std::move(pxy), depth + 1);
    return out;
}

Poly TraceReducer::reduceClass(const Letters& u, int depth) {
    const std::size_t L = u.size();
    if (L == 0) return Poly(2);
    if (L == 1) return Poly::var(TraceVar::single(u[0].gen));
    countStep();

    // Inverse elimination: rotate a negative letter to the end.
    for (std::size_t p = 0; p < L; ++p) {
        if (u[p].exp < 0) {
            Letters v = rotateLetters(u, (p + 1) % L);
            const int a = v.back().gen;
            v.pop_back();
            Letters va = v;
            va.emplace_back(a, +1);
            return reduceLetters({Letter(a, +1)}, depth + 1) * reduceLetters(v, depth + 1) -
                   reduceLetters(std::move(va), depth + 1);
        }
    }

    // Repeated generator: the pivot is the generator that appears earliest in
    // the canonical rotation; among its consecutive occurrence pairs take the
    // one with the smallest cyclic gap (earliest start on ties).
    {
        int pivotGen = 0;
        for (std::size_t p = 0; p < L && pivotGen == 0; ++p)
            for (std::size_t q = 0; q < L; ++q)
                if (q != p && u[q].gen == u[p].gen) {
                    pivotGen = u[p].gen;
                    break;
                }
        int bestGap = -1;
        std::size_t bestPos = 0;
        if (pivotGen != 0) {
            for (std::size_t p = 0; p < L; ++p) {
                if (u[p].gen != pivotGen) continue;
                for (std::size_t d = 1; d < L; ++d) {
                    const std::size_t q = (p + d) % L;
                    if (u[q].gen == pivotGen) {
                        if (bestGap < 0 || static_cast<int>(d) < bestGap) {
                            bestGap = static_cast<int>(d);
                            bestPos = p;
                        }
                        break;  // consecutive occurrence for this p
                    }
                }
            }
        }
        if (bestGap > 0) {
            Letters v = rotateLetters(u, bestPos);  // starts with the repeated letter
            const Letter a = v[0];
            if (bestGap == 1) {
                // tr(a a w) = tr(a) tr(a w) - tr(w)
                Letters aw = slice(v, 1, L);  // a w without leading a: v[1]==a
                Letters w = slice(v, 2, L);
                return reduceLetters({a}, depth + 1) * reduceLetters(std::move(aw), depth + 1) -
                       reduceLetters(std::move(w), depth + 1);
            }
            // tr(a m a t) = tr(a m) tr(a t) - tr(m t^-1)
            Letters mid = slice(v, 1, 1 + bestGap - 1);
            Letters tail = slice(v, 1 + bestGap, L);
            Letters am = {a};
            am.insert(am.end(), mid.begin(), mid.end());
            Letters at = {a};
            at.insert(at.end(), tail.begin(), tail.end());
            Letters mt = mid;
            Letters ti = invertLetters(tail);
            mt.insert(mt.end(), ti.begin(), ti.end());
            return reduceLetters(std::move(am), depth + 1) *
                       reduceLetters(std::move(at), depth + 1) -
                   reduceLetters(std::move(mt), depth + 1);
        }
    }

    // Multilinear, all positive, canonical rotation starts at the least index.
    if (L == 2) return Poly::var(TraceVar::pair(u[0].gen, u[1].gen));
    if (L == 3) {
        if (u[1].gen < u[2].gen)
            return Poly::var(TraceVar::triple(u[0].gen, u[1].gen, u[2].gen));
        return adjacentSwap(u, 1, depth);
    }
    if (L == 4) {
        for (std::size_t t = 1; t + 1 < L; ++t)
            if (u[t].gen > u[t + 1].gen) return adjacentSwap(u, static_cast<int>(t), depth);

        // Sorted a<b<c<d: solve tr(abcd) from three transposition identities
        //   tr(abcd)+tr(acbd), tr(abcd)+tr(acdb), tr(acbd)+tr(acdb).
        const Letter a = u[0], b = u[1], c = u[2], d = u[3];
        auto tr1 = [&](Letter x) { return reduceLetters({x}, depth + 1); };
        auto tr2 = [&](Letter x, Letter y) { return reduceLetters({x, y}, depth + 1); };
        auto tr3 = [&](Letter x, Letter y, Letter z) {
            return reduceLetters({x, y, z}, depth + 1);
        };
        Poly sBC = tr1(b) * tr3(a, c, d) + tr1(c) * tr3(a, b, d) +
                   (tr2(b, c) - tr1(b) * tr1(c)) * tr2(a, d);
        Poly sAB = tr1(a) * tr3(b, c, d) + tr1(b) * tr3(a, c, d) +
                   (tr2(a, b) - tr1(a) * tr1(b)) * tr2(c, d);
        Poly sBD = tr1(b) * tr3(a, c, d) + tr1(d) * tr3(a, c, b) +
                   (tr2(b, d) - tr1(b) * tr1(d)) * tr2(a, c);
        return (sBC + sAB - sBD).scaled(Rational(1, 2));
    }
    throw std::logic_error("multilinear trace word longer than the rank-4 basis");
}

TraceReducer::OracleReport TraceReducer::oracle(const Word& w, int samples, std::uint64_t seed) {
    OracleReport rep;
    rep.samples = samples;
    Poly p = reduce(w);
    for (int s = 0; s < samples; ++s) {
        Representation r = sampleRepresentation(rank_, seed, static_cast<std::uint64_t>(s));
        const Complex truth = evalWord(r, w).trace();
        const Complex approx = p.eval(coordinateValues(r, rank_));
        const double denom = std::max(1.0, std::abs(truth));
        rep.maxResidual = std::max(rep.maxResidual, std::abs(truth - approx) / denom);
    }
    rep.pass = rep.maxResidual < 1e-9;
    return rep;
}

double reductionResidual(TraceReducer& red, const Word& w, const Representation& rep) {
    Poly p = red.reduce(w);
    const Complex truth = evalWord(rep, w).trace();
    const Complex approx = p.eval(coordinateValues(rep, red.rank()));
    return std::abs(truth - approx) / std::max(1.0, std::abs(truth));
}

}  // namespace goldman
