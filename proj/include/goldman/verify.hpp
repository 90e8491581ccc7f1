#pragma once

#include "goldman/bivector.hpp"
#include "goldman/data_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace goldman {

struct GoldenComparison {
    int total = 0;
    int exact = 0;
    int zeros = 0;
    std::vector<std::string> mismatches;  // rendered per-entry diagnostics
    bool pass() const { return total > 0 && exact == total; }
};

/// Entry-by-entry comparison of a computed bi-vector against the golden table.
GoldenComparison compareGolden(const Bivector& bv, const std::vector<GoldenBracket>& golden);

struct ExpansionComparison {
    int total = 0;
    int exact = 0;
    // Slots equal as functions on the variety but with different normal forms;
    // each verified numerically at on-variety points.
    std::vector<std::string> modularSlots;
    double worstModularResidual = 0.0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty() && exact + (int)modularSlots.size() == total; }
};

/// Compares the symmetric-form expansion with the computed bi-vector: exact
/// polynomial equality per slot, falling back to numeric equality at sampled
/// representations (tolerance 1e-9) for slots whose normal forms differ.
ExpansionComparison compareExpansion(const Bivector& computed, const Bivector& expanded,
                                     int samples = 200, std::uint64_t seed = 424242);

struct CasimirCheck {
    bool variablesPass = false;  // t[i] rows identically zero
    bool boundaryPass = false;   // curve bracket of the dependent boundary: zero polynomial
    int boundaryEntries = 0;
    // Bi-derivation of the boundary-trace polynomial: vanishes in the
    // coordinate ring; counts how many coordinates annihilate it already at
    // the polynomial level.
    int derivationPolynomialZeros = 0;
    bool derivationOnVarietyPass = false;
    double worstDerivationResidual = 0.0;
};

/// Casimir verification: single-index coordinates have identically-zero rows;
/// the dependent boundary curve has identically-zero curve brackets; its trace
/// polynomial is annihilated by the bi-derivation in the coordinate ring.
CasimirCheck checkCasimirs(const Bivector& bv, const FatGraph& fat);

}  // namespace goldman
