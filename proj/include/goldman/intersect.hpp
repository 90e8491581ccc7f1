#pragma once

#include "goldman/poly.hpp"
#include "goldman/surface.hpp"
#include "goldman/trace_reduce.hpp"
#include "goldman/word.hpp"

#include <string>
#include <vector>

namespace goldman {

/// One transverse double point of two loops: oriented intersection sign and
/// the class of the product loop rebased through the point.
struct IntersectionDatum {
    int sign = +1;
    Word resolved;

    friend bool operator==(const IntersectionDatum&, const IntersectionDatum&) = default;
};

/// Transverse intersection points of taut representatives of two distinct
/// free-homotopy classes. Inputs must be cyclically reduced; equal or mutually
/// inverse cyclic classes are rejected.
std::vector<IntersectionDatum> intersections(const FatGraph& fat, const Word& alpha,
                                             const Word& beta);

/// SL(2) Goldman bracket {tr alpha, tr beta}: the signed sum over intersection
/// points of tr(resolved) - 1/2 tr(alpha) tr(beta). Returns 0 for equal (or
/// mutually inverse) classes.
Poly bracket(const FatGraph& fat, const Word& alpha, const Word& beta, TraceReducer& red);

/// Externally supplied intersection data transcribing one figure.
struct DiagramData {
    std::string figure;
    Word lhs;
    Word rhs;
    std::vector<IntersectionDatum> points;
};

/// Same summation as bracket() but over supplied points; independent of the
/// combinatorial intersection engine.
Poly bracketFromData(const DiagramData& data, TraceReducer& red);

}  // namespace goldman
