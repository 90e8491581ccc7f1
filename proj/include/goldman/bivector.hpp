#pragma once

#include "goldman/intersect.hpp"
#include "goldman/poly.hpp"
#include "goldman/surface.hpp"
#include "goldman/trace_reduce.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace goldman {

/// Boundary-label permutation of {1..k}, 1-based; image[i-1] = sigma(i).
struct Perm {
    std::vector<int> image;

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int i) const { return image[i - 1]; }
    static Perm identity(int k);
    Perm inverse() const;
    Perm after(const Perm& first) const;  // this ∘ first

    std::string cycles() const;  // "(1 2 3)(4 5)" or "()"
    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;
};

/// Parses cycle notation: "(1)", "(34)", "(13)(24)", "(1 10)(2 3)".
/// Single-character entries may be juxtaposed without spaces.
Perm parseCycles(const std::string& text, int k);

/// Antisymmetric coefficient table of the Poisson bi-vector in the canonical
/// trace coordinates; entries stored once per unordered pair with u < v,
/// flipping orientation negates. Zero entries are absent.
struct Bivector {
    int n = 0, g = 0, rank = 0;
    std::vector<TraceVar> coordinates;
    std::map<std::pair<TraceVar, TraceVar>, Poly> entries;

    /// Signed lookup: {u, v} with either orientation; 0 when absent.
    Poly entry(const TraceVar& u, const TraceVar& v) const;
    void setEntry(const TraceVar& u, const TraceVar& v, Poly p);

    friend bool operator==(const Bivector&, const Bivector&) = default;
};

/// Full bi-vector of the standard model: entries[{u,v}] = bracket of the
/// coordinate words. Ranks above 4 are rejected (no canonical basis).
/// `threads` > 1 fans the pair computations out with per-thread reducers.
Bivector computeBivector(const FatGraph& fat, int threads = 1);

/// The coordinate word of a canonical variable on a fat graph (ordered
/// product of the generators named by the index set).
Word coordinateWord(const TraceVar& v);

/// Coordinates whose every entry vanishes.
std::vector<TraceVar> casimirs(const Bivector& bv);

/// Sorted-relabel action t[I] -> t[sort(sigma I)], extended as a ring map.
Poly applyPerm(const Perm& sigma, const Poly& p);
TraceVar applyPerm(const Perm& sigma, const TraceVar& v);

/// Formal integer combination of boundary-label permutations.
struct SymOperator {
    std::string name;
    std::vector<Perm> perms;
};

/// The three built-in operators of the five-holed-sphere symmetric form.
SymOperator sigma1();
SymOperator sigma2();
SymOperator sigma3();

/// One wedge term of the symmetric form: coefficient polynomial on the slot
/// (u, v), optionally spread over an operator's permutations.
struct SymmetricFormTerm {
    Poly coefficient;
    TraceVar u, v;
    const char* op;  // nullptr | "sigma1" | "sigma2" | "sigma3"
};

/// Expands base coefficients through the symmetry operators, accumulating with
/// wedge antisymmetry. Writing two conflicting polynomials to one slot throws.
Bivector expandSymmetricForm(const std::vector<SymmetricFormTerm>& terms, int n, int g);

/// Poisson bracket of two polynomials via the bi-derivation rule
/// {P,Q} = sum over pairs of dP/du dQ/dv {u,v}.
Poly poissonBracketPoly(const Poly& p, const Poly& q, const Bivector& bv);

/// One row of the boundary-permutation scan.
struct SymmetryScanEntry {
    Perm sigma;           // permutation of {1..n} boundary labels
    bool preserves = false;
    double residual = 0.0;  // worst numeric residual over the sampled points
};

struct SymmetryScanReport {
    std::vector<SymmetryScanEntry> entries;
    int preservingCount = 0;
    std::vector<Perm> preserving;
};

/// Tests every permutation of the n boundary labels of the five-holed sphere
/// against the bi-vector. Labels 1..4 relabel coordinates directly; label 5
/// substitutes (c1 c2 c3 c4)^-1 images and re-reduces. A permutation preserves
/// the structure when the induced ring map commutes with the bracket on the
/// variety (checked exactly for label-5-fixing relabelings, numerically at
/// on-variety points otherwise).
SymmetryScanReport symmetryExhaustion(const Bivector& bv, int samples = 40,
                                      std::uint64_t seed = 2024);

}  // namespace goldman
