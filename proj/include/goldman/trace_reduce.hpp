#pragma once

#include "goldman/numeric.hpp"
#include "goldman/poly.hpp"
#include "goldman/word.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>

namespace goldman {

/// Terminating rewriting system expressing tr(w) as an exact polynomial in the
/// canonical coordinates t[I], |I| <= 3. Supports free-group ranks 1..4 (the
/// canonical basis for larger ranks would need length-4 generators).
///
/// Rules, applied in a fixed order to trace terms of cyclic words:
///   - tr(empty) = 2; single letters become t[i].
///   - canonical cyclic key folds rotation and inversion invariance.
///   - inverse elimination      tr(u a^-1) = tr(a) tr(u) - tr(u a)
///   - square elimination       tr(a a v)  = tr(a) tr(a v) - tr(v)
///   - repeated-letter split    tr(a u a v) = tr(a u) tr(a v) - tr(u v^-1)
///   - adjacent transposition   tr(P y x Q) = tr(x) tr(P y Q) + tr(y) tr(P x Q)
///                              + (tr(xy) - tr(x) tr(y)) tr(P Q) - tr(P x y Q)
///   - sorted multilinear length-4 words are solved from three transposition
///     identities (the unique solution carries 1/2 coefficients).
class TraceReducer {
public:
    explicit TraceReducer(int rank);

    int rank() const { return rank_; }

    /// tr(w) as a canonical polynomial. Depends only on the conjugacy class of
    /// w and on the class of w^-1.
    Poly reduce(const Word& w);

    struct OracleReport {
        double maxResidual = 0.0;
        int samples = 0;
        bool pass = false;
    };

    /// Compares reduce(w) against direct matrix evaluation on random
    /// representations. PASS iff the max relative residual is < 1e-9.
    OracleReport oracle(const Word& w, int samples, std::uint64_t seed);

    std::size_t memoSize() const { return memo_.size(); }

private:
    Poly reduceClass(const Letters& u, int depth);
    Poly reduceLetters(Letters raw, int depth);
    Poly adjacentSwap(const Letters& u, int pos, int depth);

    void countStep();

    int rank_;
    std::unordered_map<std::string, Poly> memo_;
    long long steps_ = 0;
    long long stepLimit_ = 0;
    int active_ = 0;
};

/// Evaluates a reduced trace polynomial oracle-style at one representation.
double reductionResidual(TraceReducer& red, const Word& w, const Representation& rep);

}  // namespace goldman
